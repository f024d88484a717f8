#include "ratsign/profiles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ratsign/snumbers.hpp"

namespace ratsign {

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::string to_string(BaseType t) {
    switch (t) {
    case BaseType::A: return "A";
    case BaseType::B: return "B";
    case BaseType::C: return "C";
    }
    return "?";
}

Parity parse_parity(const std::string& s) {
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    throw std::invalid_argument("parity must be 'odd' or 'even', got '" + s + "'");
}

BaseType parse_base_type(const std::string& s) {
    if (s == "A") return BaseType::A;
    if (s == "B") return BaseType::B;
    if (s == "C") return BaseType::C;
    throw std::invalid_argument("base type must be A, B or C, got '" + s + "'");
}

std::vector<Partition> parse_profiles(const std::string& s) {
    std::vector<Partition> out;
    if (s.empty() || s == "-") return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) out.push_back(parse_partition(item));
    return out;
}

std::string to_string(const std::vector<Partition>& lambda) {
    std::string s;
    for (std::size_t k = 0; k < lambda.size(); ++k) s += (k ? ";" : "") + to_string(lambda[k]);
    return s.empty() ? "-" : s;
}

nlohmann::json to_json(const ReducedProfiles& lambda) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : lambda.partitions) parts.push_back(p);
    return parts;
}

namespace {

struct PartitionShape {
    std::map<int, int> multiplicity;
    std::vector<int> odd_odd;   // odd values appearing an odd number of times
    std::vector<int> even_odd;  // even values appearing an odd number of times
};

PartitionShape shape_of(const Partition& p) {
    PartitionShape s;
    for (int x : p) ++s.multiplicity[x];
    for (auto [value, n] : s.multiplicity) {
        if (n % 2 == 0) continue;
        (value % 2 ? s.odd_odd : s.even_odd).push_back(value);
    }
    return s;
}

Integer factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace

ProfileStats stats(const ReducedProfiles& lambda) {
    ProfileStats st;
    for (const auto& p : lambda.partitions) {
        const auto s = shape_of(p);
        for (auto [value, n] : s.multiplicity) {
            st.c_frak += n / 2;
            if (n >= 2) st.A *= n / 2;
        }
        if (!s.odd_odd.empty()) ++st.o_frak;
        if (!s.even_odd.empty()) ++st.e_frak;
        bool larger_even = false;
        for (int e : s.even_odd)
            for (int o : s.odd_odd) larger_even = larger_even || e > o;
        if (larger_even) ++st.b_frak;
    }
    return st;
}

bool per_partition_condition(const ReducedProfiles& lambda) {
    for (const auto& p : lambda.partitions) {
        const auto s = shape_of(p);
        if (s.odd_odd.size() > 1 || s.even_odd.size() > 1) return false;
    }
    return true;
}

std::optional<std::string> trivially_vanishes(const ReducedProfiles& lambda) {
    int with_even = 0;
    for (std::size_t j = 0; j < lambda.partitions.size(); ++j) {
        const auto s = shape_of(lambda.partitions[j]);
        if (s.odd_odd.size() > 1)
            return "partition " + std::to_string(j + 1) + " has more than one odd entry appearing an odd number of times";
        if (s.even_odd.size() > 1)
            return "partition " + std::to_string(j + 1) + " has more than one even entry appearing an odd number of times";
        if (!s.even_odd.empty()) ++with_even;
    }
    if (lambda.parity == Parity::odd && with_even % 2 == 1)
        return "odd number of partitions with an even entry appearing an odd number of times";
    return std::nullopt;
}

bool nonvanishing(const ReducedProfiles& lambda) {
    int exactly_one_even = 0;
    for (const auto& p : lambda.partitions) {
        std::map<int, int> n;
        for (int x : p) ++n[x];
        int odd_values = 0, even_values = 0;
        for (auto [value, count] : n)
            if (count % 2 == 1) ++(value % 2 == 1 ? odd_values : even_values);
        if (odd_values > 1 || even_values > 1) return false;
        if (even_values == 1) ++exactly_one_even;
    }
    return lambda.parity == Parity::even || exactly_one_even % 2 == 0;
}

DegreeBounds degree_bounds(const ReducedProfiles& lambda) {
    const auto st = stats(lambda);
    const int c = st.c_frak, top = st.c_frak + st.o_frak + 2;
    if (lambda.parity == Parity::odd) return {{c + 1, top}, {c, top}};
    return {{c, top}, {c + 1, top}};
}

namespace {

struct Token {
    int kind;  // 0 upper component, 1 maximum, 2 special segment
    BaseItem item;
    auto operator<=>(const Token&) const = default;
};

using BaseVisitor = std::function<void(const SimpleBase&, std::size_t class_id)>;

void for_each_simple_base(const ReducedProfiles& lambda, BaseType type, const BaseVisitor& visit) {
    if (type == BaseType::A) throw std::invalid_argument("simple bases are of type B or C");
    if (!per_partition_condition(lambda)) return;
    std::vector<Token> tokens;
    std::vector<BaseItem> crossings;
    for (std::size_t j = 0; j < lambda.partitions.size(); ++j) {
        const int label = static_cast<int>(j) + 1;
        const auto s = shape_of(lambda.partitions[j]);
        for (auto [value, n] : s.multiplicity)
            for (int k = 0; k < n / 2; ++k) tokens.push_back({0, {label, value + 1}});
        for (int v : s.odd_odd) tokens.push_back({1, {label, v + 1}});
        for (int v : s.even_odd) crossings.push_back({label, v + 1});
    }
    if (type == BaseType::B) {
        if (crossings.empty()) return;
        tokens.push_back({2, {0, 0}});
    }
    std::sort(tokens.begin(), tokens.end());

    std::size_t class_id = 0;
    do {
        SimpleBase base;
        base.base_type = type;
        base.parity = lambda.parity;
        if (base.parity == Parity::odd) base.pieces.push_back({PieceKind::left_end, std::nullopt});
        base.components.emplace_back();
        int special_piece = -1;
        for (const auto& t : tokens) {
            if (t.kind == 0) {
                base.components.back().push_back(t.item);
                continue;
            }
            if (t.kind == 2) special_piece = static_cast<int>(base.pieces.size());
            base.pieces.push_back({t.kind == 1 ? PieceKind::segment : PieceKind::special,
                                   t.kind == 1 ? std::optional<BaseItem>(t.item) : std::nullopt});
            base.components.emplace_back();
        }
        base.pieces.push_back({PieceKind::right_end, std::nullopt});

        // Legal crossing positions.
        std::vector<std::vector<std::pair<int, int>>> options(crossings.size());
        for (std::size_t x = 0; x < crossings.size(); ++x)
            for (int p = 0; p < static_cast<int>(base.pieces.size()); ++p) {
                const auto& piece = base.pieces[p];
                if (piece.kind != PieceKind::segment) {
                    options[x].push_back({p, 0});
                } else if (piece.maximum->label > crossings[x].label) {
                    options[x].push_back({p, 0});
                    options[x].push_back({p, 1});
                }
            }

        std::vector<int> sp_choices;
        if (type == BaseType::C) {
            for (int sp = 1; sp <= base.chains(); ++sp) sp_choices.push_back(sp);
        } else {
            // The pole closes the special segment on its left or on its right.
            sp_choices.push_back(base.chains_left_of(special_piece));
            sp_choices.push_back(base.chains_left_of(special_piece) + 1);
        }
        for (int sp : sp_choices) {
            base.sp = sp;
            bool any = false;
            std::vector<std::size_t> choice(crossings.size(), 0);
            while (true) {
                bool on_special = false;
                base.crossings.clear();
                for (std::size_t x = 0; x < crossings.size(); ++x) {
                    auto [p, side] = options[x][choice[x]];
                    base.crossings.push_back({crossings[x], p, side});
                    on_special = on_special || p == special_piece;
                }
                if (type == BaseType::C || on_special) {
                    visit(base, class_id);
                    any = true;
                }
                std::size_t x = 0;
                while (x < choice.size() && ++choice[x] == options[x].size()) choice[x++] = 0;
                if (x == choice.size()) break;
            }
            if (any) ++class_id;
        }
    } while (std::next_permutation(tokens.begin(), tokens.end()));
}

}  // namespace

std::vector<SignedBase> enumerate_simple_bases(const ReducedProfiles& lambda, BaseType type) {
    std::vector<SignedBase> out;
    for_each_simple_base(lambda, type, [&](const SimpleBase& b, std::size_t) {
        out.push_back({b, epsilon_base(descriptor_of(b))});
    });
    return out;
}

SimpleBaseSummary summarize_simple_bases(const ReducedProfiles& lambda, BaseType type) {
    SimpleBaseSummary s;
    std::set<std::size_t> classes;
    for_each_simple_base(lambda, type, [&](const SimpleBase& b, std::size_t id) {
        s.signed_sum += epsilon_base(descriptor_of(b));
        ++s.bases;
        classes.insert(id);
    });
    s.classes = classes.size();
    return s;
}

ClosedCounts simple_base_counts_closed(const ReducedProfiles& lambda) {
    const auto st = stats(lambda);
    ClosedCounts out;
    out.count_C = Integer(st.o_frak + 1) * factorial(st.o_frak + st.c_frak) / st.A;
    if (lambda.parity == Parity::odd && st.e_frak > 0)
        out.count_B = Integer(2) * factorial(st.o_frak + st.c_frak + 1) / st.A;
    return out;
}

std::optional<Integer> predicted_signed_sum(const ReducedProfiles& lambda, BaseType type) {
    if (!per_partition_condition(lambda)) return std::nullopt;
    const auto st = stats(lambda);
    const int sgn = (st.o_frak + st.b_frak) % 2 == 0 ? 1 : -1;
    const auto counts = simple_base_counts_closed(lambda);
    const bool odd = lambda.parity == Parity::odd;
    if (type == BaseType::C) {
        if (odd && st.e_frak > 0) return Integer(0);
        return sgn * counts.count_C;
    }
    if (type == BaseType::B) {
        if (st.e_frak == 0) return Integer(0);
        if (odd && st.e_frak % 2 == 0) return sgn * *counts.count_B;
    }
    return std::nullopt;
}

std::vector<LeadingTerm> leading_coefficients(const ReducedProfiles& lambda) {
    std::vector<LeadingTerm> out;
    for (Parity parity : {Parity::odd, Parity::even}) {
        ReducedProfiles l = lambda;
        l.parity = parity;
        const auto st = stats(l);
        const Integer sc = summarize_simple_bases(l, BaseType::C).signed_sum;
        const Integer sb = summarize_simple_bases(l, BaseType::B).signed_sum;
        Integer two_c;
        mpz_ui_pow_ui(two_c.get_mpz_t(), 2, static_cast<unsigned long>(st.c_frak));
        Rational scale(st.c_frak % 2 == 0 ? Integer(1) : Integer(-1), two_c);
        scale.canonicalize();
        const auto bounds = degree_bounds(l);
        if (parity == Parity::odd) {
            out.push_back({parity, Side::f_side, bounds.deg_f, scale * Rational(sc)});
            out.push_back({parity, Side::g_side, bounds.deg_g, scale * Rational(sb + 2 * sc)});
        } else {
            out.push_back({parity, Side::f_side, bounds.deg_f, scale * Rational(-sb - 2 * sc)});
            out.push_back({parity, Side::g_side, bounds.deg_g, scale * Rational(sc)});
        }
    }
    return out;
}

}  // namespace ratsign
