#include "ratsign/snumbers.hpp"

#include <algorithm>
#include <cmath>

#include "ratsign/alternations.hpp"

namespace ratsign {

int BaseDescriptor::c_total() const {
    int s = 0;
    for (int x : c) s += x;
    return s;
}

void validate(const BaseDescriptor& b) {
    if (b.l() < 1) throw InvalidDescriptor("a base needs at least one chain");
    if (b.sp < 1 || b.sp > b.l()) throw InvalidDescriptor("special chain index out of range");
    for (int x : b.c)
        if (x < 0) throw InvalidDescriptor("component counts must be non-negative");
    if (b.base_type == BaseType::A) {
        if (b.c[b.sp - 1] != 0) throw InvalidDescriptor("type A needs no components at the special chain");
        // For d even the chain count parities put the first chain's critical
        // points at an odd number, which type A forbids at the special chain.
        if (b.parity == Parity::even && b.sp == 1) throw InvalidDescriptor("type A with d even needs sp > 1");
    }
    for (const auto& label : b.labels) {
        int last = 0;
        for (const auto& v : label) {
            if (v.ramification < 1) throw InvalidDescriptor("ramification must be positive");
            if (v.chains_left < last || v.chains_left > b.l())
                throw InvalidDescriptor("vertex chain positions must be non-decreasing and within range");
            last = v.chains_left;
        }
    }
}

BaseDescriptor descriptor_of(const SimpleBase& base) {
    BaseDescriptor d;
    d.base_type = base.base_type;
    d.parity = base.parity;
    d.sp = base.sp;
    for (const auto& comps : base.components) d.c.push_back(static_cast<int>(comps.size()));

    int labels = 0;
    for (const auto& p : base.pieces)
        if (p.maximum) labels = std::max(labels, p.maximum->label);
    for (const auto& comps : base.components)
        for (const auto& x : comps) labels = std::max(labels, x.label);
    for (const auto& x : base.crossings) labels = std::max(labels, x.crossing.label);
    d.labels.assign(labels, {});

    auto crossing_at = [&](int label, int piece, int side) {
        for (const auto& x : base.crossings)
            if (x.crossing.label == label && x.piece == piece && x.side == side) return x.crossing.ramification;
        return 1;
    };
    for (int j = 1; j <= labels; ++j) {
        auto& seq = d.labels[j - 1];
        for (int p = 0; p < static_cast<int>(base.pieces.size()); ++p) {
            const auto& piece = base.pieces[p];
            const int left = base.chains_left_of(p);
            if (piece.kind != PieceKind::segment) {
                seq.push_back({crossing_at(j, p, 0), left});
            } else if (piece.maximum->label > j) {
                seq.push_back({crossing_at(j, p, 0), left});
                seq.push_back({crossing_at(j, p, 1), left});
            } else if (piece.maximum->label == j) {
                seq.push_back({piece.maximum->ramification, left});
            }
        }
    }
    return d;
}

std::vector<int> sign_sequence(const BaseDescriptor& b, std::size_t label) {
    std::vector<int> seq;
    const bool insert = b.base_type != BaseType::C;
    bool inserted = false;
    for (const auto& v : b.labels.at(label)) {
        if (insert && !inserted && v.chains_left >= b.sp) {
            seq.push_back(1);
            inserted = true;
        }
        seq.push_back(v.ramification);
    }
    if (insert && !inserted) seq.push_back(1);
    return seq;
}

int epsilon_base(const BaseDescriptor& b) {
    validate(b);
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < b.labels.size(); ++j) total += disorders(sign_sequence(b, j));
    return total % 2 == 0 ? 1 : -1;
}

GElement assemble_FB(const BaseDescriptor& b) {
    validate(b);
    const int eps = epsilon_base(b);
    const int sp = b.sp - 1;
    auto c = [&](int i) { return b.c[static_cast<std::size_t>(i)]; };
    GElement F{Rational(eps)};
    auto times_f_except = [&](std::initializer_list<int> skip) {
        for (int i = 0; i < b.l(); ++i)
            if (std::find(skip.begin(), skip.end(), i) == skip.end()) F = F * family(Family::f_c, c(i));
    };
    if (b.parity == Parity::odd) {
        switch (b.base_type) {
        case BaseType::A: break;
        case BaseType::B: F = F * family(Family::gt_c, c(sp)); break;
        case BaseType::C: F = F * family(Family::u_c, c(sp)); break;
        }
        times_f_except({sp});
        return F;
    }
    switch (b.base_type) {
    case BaseType::A:
        F = F * family(Family::g_c, c(0));
        times_f_except({0, sp});
        break;
    case BaseType::B:
        if (sp == 0) {
            F = -F;
            times_f_except({});
        } else {
            F = F * family(Family::g_c, c(0)) * family(Family::gt_c, c(sp));
            times_f_except({0, sp});
        }
        break;
    case BaseType::C:
        if (sp == 0) {
            F = F * family(Family::v_c, c(0));
            times_f_except({0});
        } else {
            F = F * family(Family::g_c, c(0)) * family(Family::u_c, c(sp));
            times_f_except({0, sp});
        }
        break;
    }
    return F;
}

namespace {

ExpectedShape shape(const BaseDescriptor& b, bool derived) {
    validate(b);
    const int c = b.c_total(), l = b.l();
    Integer two_c;
    mpz_ui_pow_ui(two_c.get_mpz_t(), 2, static_cast<unsigned long>(c));
    Rational s(Integer(epsilon_base(b) * (c % 2 == 0 ? 1 : -1)), two_c);
    s.canonicalize();
    if (derived && b.base_type == BaseType::C) s *= b.c[b.sp - 1] + 1;
    ExpectedShape e;
    if (b.parity == Parity::odd) {
        switch (b.base_type) {
        case BaseType::A: e.degrees.deg_f = BiDegree{c, c + l - 1}, e.lead_f = s; break;
        case BaseType::B: e.degrees.deg_g = BiDegree{c, c + l}, e.lead_g = s; break;
        case BaseType::C:
            e.degrees = {BiDegree{c + 1, c + l + 1}, BiDegree{c, c + l + 1}};
            e.lead_f = s;
            e.lead_g = 2 * s;
            break;
        }
    } else {
        switch (b.base_type) {
        case BaseType::A: e.degrees.deg_g = BiDegree{c, c + l - 1}, e.lead_g = s; break;
        case BaseType::B: e.degrees.deg_f = BiDegree{c, c + l}, e.lead_f = -s; break;
        case BaseType::C:
            e.degrees = {BiDegree{c, c + l + 1}, BiDegree{c + 1, c + l + 1}};
            e.lead_f = -2 * s;
            e.lead_g = s;
            break;
        }
    }
    return e;
}

}  // namespace

ExpectedShape tabulated_shape(const BaseDescriptor& b) { return shape(b, false); }

ExpectedShape derived_shape(const BaseDescriptor& b) { return shape(b, true); }

nlohmann::json to_json(const BaseDescriptor& b) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& label : b.labels) {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : label) vs.push_back({v.ramification, v.chains_left});
        labels.push_back(vs);
    }
    return {{"type", to_string(b.base_type)}, {"parity", to_string(b.parity)}, {"sp", b.sp},
            {"c", b.c}, {"labels", labels}};
}

BaseDescriptor descriptor_from_json(const nlohmann::json& j) {
    BaseDescriptor b;
    try {
        b.base_type = parse_base_type(j.at("type").get<std::string>());
        b.parity = parse_parity(j.at("parity").get<std::string>());
        b.sp = j.at("sp").get<int>();
        b.c = j.at("c").get<std::vector<int>>();
        if (j.contains("labels"))
            for (const auto& label : j.at("labels")) {
                std::vector<LabeledVertex> seq;
                for (const auto& v : label) seq.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
                b.labels.push_back(seq);
            }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidDescriptor(std::string("malformed descriptor: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidDescriptor(e.what());
    }
    validate(b);
    return b;
}

int broken_alternation_sign(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    return (n / 2) % 2 == 0 ? 1 : -1;
}

std::vector<Integer> extract_s_numbers(const GElement& F, int max_m) {
    if (max_m < 0) throw std::invalid_argument("negative order");
    const auto s = expand(F, max_m);
    std::vector<Integer> out;
    Integer fact = 1;
    for (int m = 0; m <= max_m; ++m) {
        if (m > 0) fact *= m;
        Rational v = s.coeffs[m] * fact;
        if (v.get_den() != 1)
            throw NonIntegralCoefficient("m! times the coefficient of q^" + std::to_string(m) + " is " + to_string(v));
        out.push_back(v.get_num());
    }
    return out;
}

SNumberReport s_numbers_empty(int max_m, Parity parity) {
    if (max_m < 0) throw std::invalid_argument("negative order");
    SNumberReport r;
    r.lambda.parity = parity;
    r.series_used = base_series(parity == Parity::odd ? BaseSeries::u : BaseSeries::v);
    const auto s = extract_s_numbers(r.series_used, max_m);
    const auto t = count_recursive(max_m);
    const int want = parity == Parity::odd ? 1 : 0;
    bool agrees = true;
    for (int m = 0; m <= max_m; ++m) {
        if (m % 2 != want) continue;
        r.values.emplace_back(m, s[m]);
        agrees = agrees && s[m] == broken_alternation_sign(m) * t.B[m];
    }
    r.diagnostics["matches_broken_alternations"] = agrees;
    return r;
}

nlohmann::json to_json(const SNumberReport& r) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [m, s] : r.values) values.push_back({m, to_string(s)});
    return {{"lambda", to_json(r.lambda)},
            {"parity", to_string(r.lambda.parity)},
            {"values", values},
            {"series_used", to_json(r.series_used)},
            {"diagnostics", r.diagnostics}};
}

namespace {

double log_abs(const Integer& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& q) { return log_abs(Integer(q.get_num())) - log_abs(Integer(q.get_den())); }

}  // namespace

AsymptoticReport asymptotic_report_from_coefficients(const std::vector<Rational>& b) {
    const auto nonzero = std::count_if(b.begin(), b.end(), [](const Rational& x) { return x != 0; });
    if (nonzero < 10) throw InsufficientData("asymptotics need at least 10 non-zero values");
    AsymptoticReport a;
    for (std::size_t k = 1; k + 1 < b.size(); ++k) {
        if (b[k] == 0 || b[k + 1] == 0) continue;
        const double naive = std::exp(log_abs(b[k + 1]) - log_abs(b[k]));
        const double kk = static_cast<double>(k);
        a.naive_ratio.emplace_back(static_cast<int>(k), naive);
        a.corrected_ratio.emplace_back(static_cast<int>(k), naive * kk / (kk + 1));
    }
    if (!a.naive_ratio.empty()) {
        a.radius_estimate = 1.0 / a.naive_ratio.back().second;
        a.corrected_radius_estimate = 1.0 / a.corrected_ratio.back().second;
    }
    return a;
}

AsymptoticReport asymptotic_report(const SNumberReport& r) {
    const auto nonzero = std::count_if(r.values.begin(), r.values.end(), [](const auto& v) { return v.second != 0; });
    if (nonzero < 10) throw InsufficientData("asymptotics need at least 10 non-zero values");
    // Coefficients of the series in Q = q^2 (after dividing by q when odd).
    std::vector<Rational> b;
    for (const auto& [m, s] : r.values) {
        const auto k = static_cast<std::size_t>(m / 2);
        if (b.size() <= k) b.resize(k + 1);
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
        b[k] = Rational(s, fact);
        b[k].canonicalize();
    }
    AsymptoticReport a = asymptotic_report_from_coefficients(b);
    for (const auto& [m, s] : r.values)
        if (s != 0 && m >= 2) a.log_growth.emplace_back(m, log_abs(s) / (m * std::log(static_cast<double>(m))));
    return a;
}

nlohmann::json to_json(const AsymptoticReport& a) {
    auto pairs = [](const std::vector<std::pair<int, double>>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, x] : v) arr.push_back({k, x});
        return arr;
    };
    return {{"log_growth", pairs(a.log_growth)},
            {"naive_ratio", pairs(a.naive_ratio)},
            {"corrected_ratio", pairs(a.corrected_ratio)},
            {"radius_estimate", a.radius_estimate},
            {"corrected_radius_estimate", a.corrected_radius_estimate}};
}

Integer complex_reference(int m) {
    if (m < 2) throw std::domain_error("the complex reference count needs m >= 2");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(m - 1), static_cast<unsigned long>(m - 1));
    return r;
}

}  // namespace ratsign
