#include "ratsign/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "ratsign/algebra.hpp"
#include "ratsign/alternations.hpp"
#include "ratsign/parallel.hpp"
#include "ratsign/profiles.hpp"
#include "ratsign/snumbers.hpp"

namespace ratsign {

namespace {

PlaneTree leaf(Color c) { return PlaneTree{c, {}}; }

RealBwGraph make_graph(Color first, int n, int cycle_pos) {
    RealBwGraph g;
    g.first_color = first;
    g.real_vertices.resize(static_cast<std::size_t>(n));
    g.cycle_pos = cycle_pos;
    return g;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

CheckResult check_b_table() {
    static const std::vector<long> expected{0, 1, 2, 7, 26, 117, 594, 3407, 21682, 151853, 1160026, 9600567};
    const auto t = count_recursive(12);
    CheckResult r;
    r.passed = true;
    for (int n = 1; n <= 12; ++n)
        if (t.B[n] != expected[n - 1]) {
            r.passed = false;
            r.detail = "B_" + std::to_string(n) + " = " + t.B[n].get_str();
            return r;
        }
    r.detail = "B_1..B_12 exact, B_12 = " + t.B[12].get_str();
    return r;
}

CheckResult check_bruteforce(int n_max) {
    const auto t = count_recursive(n_max);
    std::vector<char> ok(static_cast<std::size_t>(n_max) + 1, 1);
    parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
        const int n = static_cast<int>(i) + 1;
        const auto b = count_bruteforce(n);
        bool same = b.A == t.A[n] && b.B == t.B[n];
        for (int j = 1; j <= n; ++j) same = same && b.by_pos[j] == t.B_by_pos[n][j];
        ok[n] = same;
    });
    CheckResult r;
    r.passed = true;
    std::vector<std::string> bad;
    for (int n = 1; n <= n_max; ++n)
        if (!ok[n]) bad.push_back("n=" + std::to_string(n));
    r.passed = bad.empty();
    r.detail = r.passed ? "A_n, B_n, B_n^j agree for n <= " + std::to_string(n_max) : "mismatch at " + join(bad);
    return r;
}

CheckResult check_odes(int order) {
    CheckResult r;
    const bool odes = verify_odes(order);
    const auto f = expand(GElement::f(), order);
    const auto g = expand(GElement::g(), order);
    TruncatedSeries one(order);
    one.coeffs[0] = 1;
    const bool pyth = f * f + g * g == one;
    r.passed = odes && pyth;
    r.detail = std::string("ODEs and closed forms ") + (odes ? "hold" : "FAIL") + ", f^2+g^2=1 " +
               (pyth ? "holds" : "FAILS") + " to order " + std::to_string(order);
    return r;
}

CheckResult check_invariance(int d_max) {
    CheckResult r;
    r.passed = true;
    std::ostringstream os;
    for (int d = 2; d <= d_max; ++d) {
        const auto rep = verify_invariance(d);
        os << "d=" << d << ": " << rep.pairs << " pairs, " << rep.graphs << " graphs";
        if (!rep.failures.empty()) {
            r.passed = false;
            os << ", " << rep.failures.size() << " failures";
        }
        os << "; ";
    }
    const auto ex = signed_sums({3, 2, 1, 1}, {3, 2, 2});
    const bool ex_ok = ex.white == 2 && ex.black == 2;
    r.passed = r.passed && ex_ok;
    os << "((3,2,1,1),(3,2,2)): S_w=" << ex.white << " S_b=" << ex.black;
    r.detail = os.str();
    return r;
}

CheckResult check_sign_fixtures() {
    const auto a = sign(long_sign_fixture());
    const auto b = sign(short_sign_fixture());
    CheckResult r;
    r.passed = a == SignBreakdown{12, 2, 1} && b == SignBreakdown{0, 1, -1};
    std::ostringstream os;
    os << "long (" << a.lev << "," << a.pol << "," << a.sign << "), short (" << b.lev << "," << b.pol << ","
       << b.sign << ")";
    r.detail = os.str();
    return r;
}

struct FlipTally {
    std::size_t flips = 0, flip_bad = 0;
    std::size_t rotated = 0, rotate_bad = 0;
};

FlipTally flip_rotate_pair(int d, const Partition& w, const Partition& b) {
    FlipTally t;
    const auto gs = enumerate(w, b);
    const std::set<RealBwGraph> all(gs.begin(), gs.end());
    std::set<RealBwGraph> images;
    std::size_t white_sided = 0, black_sided = 0;
    for (const auto& g : gs) {
        if (const auto p = first_non_symmetric_pair(g)) {
            ++t.flips;
            const auto h = flip(g, p->first, p->second);
            const bool ok = all.count(h) && sign(h).sign == -sign(g).sign && flip(h, p->first, p->second) == g &&
                            first_non_symmetric_pair(h) == p;
            if (!ok) ++t.flip_bad;
            continue;
        }
        const auto r = rotate(g);
        bool ok = all.count(r) && nearly_symmetric(r);
        const int expect = rotation_flips_sign(g) ? -sign(g).sign : sign(g).sign;
        ok = ok && sign(r).sign == expect;
        if (d % 2 == 0) {
            if (g.white_sided()) {
                ++t.rotated;
                ++white_sided;
                ok = ok && !r.white_sided() && images.insert(r).second;
            } else {
                ++black_sided;
            }
        } else if (!is_reduced(g)) {
            ++t.rotated;
            ok = ok && rotate(r) == g && sign(r).sign == -sign(g).sign && !is_reduced(r) &&
                 r.white_sided() == g.white_sided();
        }
        if (!ok) ++t.rotate_bad;
    }
    if (d % 2 == 0 && white_sided != black_sided) ++t.rotate_bad;
    return t;
}

CheckResult check_flip_rotate(int d_max) {
    std::vector<std::tuple<int, Partition, Partition>> jobs;
    for (int d = 2; d <= d_max; ++d)
        for (const auto& w : partitions_of(d))
            for (const auto& b : partitions_of(d)) jobs.emplace_back(d, w, b);
    std::vector<FlipTally> tallies(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& [d, w, b] = jobs[i];
        tallies[i] = flip_rotate_pair(d, w, b);
    });
    FlipTally sum;
    for (const auto& t : tallies) {
        sum.flips += t.flips, sum.flip_bad += t.flip_bad;
        sum.rotated += t.rotated, sum.rotate_bad += t.rotate_bad;
    }
    CheckResult r;
    r.passed = sum.flip_bad == 0 && sum.rotate_bad == 0;
    std::ostringstream os;
    os << sum.flips << " flips (" << sum.flip_bad << " violations), " << sum.rotated << " rotations ("
       << sum.rotate_bad << " violations), d <= " << d_max;
    r.detail = os.str();
    return r;
}

CheckResult check_empty_pipeline() {
    CheckResult r;
    const int max_m = 61;
    const auto t = count_recursive(max_m);
    bool values_ok = true;
    for (Parity p : {Parity::odd, Parity::even}) {
        const auto rep = s_numbers_empty(max_m, p);
        for (const auto& [m, s] : rep.values) values_ok = values_ok && s == broken_alternation_sign(m) * t.B[m];
        values_ok = values_ok && rep.values.size() == static_cast<std::size_t>(p == Parity::odd ? 31 : 31);
    }

    const GElement u = base_series(BaseSeries::u), v = base_series(BaseSeries::v);
    const auto lc = leading_coefficients(ReducedProfiles{{}, Parity::odd});
    const auto bounds_odd = degree_bounds(ReducedProfiles{{}, Parity::odd});
    const auto bounds_even = degree_bounds(ReducedProfiles{{}, Parity::even});
    const auto du = degrees(u), dv = degrees(v);
    const bool deg_ok = du.deg_f == Degree(bounds_odd.deg_f) && du.deg_g == Degree(bounds_odd.deg_g) &&
                        dv.deg_f == Degree(bounds_even.deg_f) && dv.deg_g == Degree(bounds_even.deg_g) &&
                        du.deg_f == Degree(BiDegree{1, 2}) && du.deg_g == Degree(BiDegree{0, 2}) &&
                        dv.deg_f == Degree(BiDegree{0, 2}) && dv.deg_g == Degree(BiDegree{1, 2});
    const std::vector<std::pair<const GElement*, Side>> actual{
        {&u, Side::f_side}, {&u, Side::g_side}, {&v, Side::f_side}, {&v, Side::g_side}};
    const std::vector<Rational> stated{1, 2, -2, 1};
    bool coeff_ok = lc.size() == 4;
    std::ostringstream os;
    for (std::size_t i = 0; coeff_ok && i < 4; ++i) {
        const Rational a = leading_coefficient(*actual[i].first, actual[i].second);
        coeff_ok = coeff_ok && a == lc[i].coefficient && a == stated[i];
        os << (i ? "," : "") << to_string(a);
    }
    r.passed = values_ok && deg_ok && coeff_ok;
    r.detail = std::string("S(0,m) for m <= 61 ") + (values_ok ? "exact" : "MISMATCH") + ", degrees " +
               (deg_ok ? "match" : "MISMATCH") + ", leading coefficients (" + os.str() + ") " +
               (coeff_ok ? "match" : "MISMATCH");
    return r;
}

std::vector<std::vector<Partition>> profile_lists(int total_length, int max_entry) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    std::function<void(int)> rec = [&](int budget) {
        out.push_back(cur);
        for (int len = 1; len <= budget; ++len) {
            Partition p;
            std::function<void(int)> grow = [&](int mx) {
                if (static_cast<int>(p.size()) == len) {
                    cur.push_back(p);
                    rec(budget - len);
                    cur.pop_back();
                    return;
                }
                for (int x = mx; x >= 1; --x) {
                    p.push_back(x);
                    grow(x);
                    p.pop_back();
                }
            };
            grow(max_entry);
        }
    };
    rec(total_length);
    return out;
}

CheckResult check_simple_bases(int total_length) {
    const auto lists = profile_lists(total_length, 4);
    struct Tally {
        std::size_t checks = 0, bad = 0, class_bad = 0, skipped = 0;
        std::string first;
    };
    std::vector<Tally> tallies(lists.size());
    parallel_for(lists.size(), [&](std::size_t i) {
        auto& t = tallies[i];
        for (Parity par : {Parity::odd, Parity::even}) {
            const ReducedProfiles l{lists[i], par};
            if (!nonvanishing(l)) {
                ++t.skipped;
                continue;
            }
            const auto closed = simple_base_counts_closed(l);
            for (BaseType type : {BaseType::C, BaseType::B}) {
                const auto s = summarize_simple_bases(l, type);
                std::optional<Integer> classes;
                if (type == BaseType::C) classes = closed.count_C;
                else if (closed.count_B) classes = *closed.count_B;
                if (classes && Integer(s.classes) != *classes) ++t.class_bad;
                const auto p = predicted_signed_sum(l, type);
                if (!p) continue;
                ++t.checks;
                if (s.signed_sum != *p) {
                    if (t.bad++ == 0)
                        t.first = to_string(l.partitions) + " " + to_string(par) + " " + to_string(type) +
                                  ": enumerated " + s.signed_sum.get_str() + ", closed " + p->get_str();
                }
            }
        }
    });
    Tally sum;
    for (const auto& t : tallies) {
        sum.checks += t.checks, sum.bad += t.bad, sum.class_bad += t.class_bad, sum.skipped += t.skipped;
        if (sum.first.empty()) sum.first = t.first;
    }
    CheckResult r;
    r.passed = sum.bad == 0 && sum.class_bad == 0;
    std::ostringstream os;
    os << lists.size() << " profile lists, " << sum.checks << " signed-sum checks, " << sum.bad << " deviations, "
       << sum.class_bad << " class-count mismatches, " << sum.skipped << " vanishing skipped";
    if (!sum.first.empty()) os << "; first: " << sum.first;
    r.detail = os.str();
    return r;
}

CheckResult check_independence() {
    const BiDegree max{8, 8};
    const std::size_t cols = monomial_count(max);
    const std::size_t rank40 = expansion_rank(max, 40);
    const int order = minimal_independence_order(max);
    const bool independent = independence_rank(max, order);
    CheckResult r;
    r.passed = rank40 == std::min<std::size_t>(41, cols) && independent;
    std::ostringstream os;
    os << "order 40: rank " << rank40 << " of min(41, " << cols << "); order " << order << ": "
       << (independent ? "full column rank" : "RANK DEFICIENT");
    r.detail = os.str();
    return r;
}

BaseDescriptor random_descriptor(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (;;) {
        BaseDescriptor b;
        b.base_type = static_cast<BaseType>(pick(0, 2));
        b.parity = pick(0, 1) ? Parity::odd : Parity::even;
        const int l = pick(1, 4);
        b.sp = pick(1, l);
        for (int i = 0; i < l; ++i) b.c.push_back(pick(0, 3));
        if (b.base_type == BaseType::A) {
            if (b.parity == Parity::even && b.sp == 1) continue;
            b.c[b.sp - 1] = 0;
        }
        const int labels = pick(0, 3);
        for (int j = 0; j < labels; ++j) {
            std::vector<LabeledVertex> seq;
            int pos = 0;
            for (int k = pick(0, 4); k > 0; --k) {
                pos = pick(pos, l);
                seq.push_back({pick(1, 3), pos});
            }
            b.labels.push_back(seq);
        }
        return b;
    }
}

bool matches(const GElement& F, const ExpectedShape& e) {
    if (degrees(F) != e.degrees) return false;
    if (e.lead_f && leading_coefficient(F, Side::f_side) != *e.lead_f) return false;
    if (e.lead_g && leading_coefficient(F, Side::g_side) != *e.lead_g) return false;
    return true;
}

CheckResult check_fb(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<BaseDescriptor> ds;
    for (int i = 0; i < count; ++i) ds.push_back(random_descriptor(rng));
    std::vector<char> tab(ds.size()), der(ds.size());
    parallel_for(ds.size(), [&](std::size_t i) {
        const auto F = assemble_FB(ds[i]);
        tab[i] = matches(F, tabulated_shape(ds[i]));
        der[i] = matches(F, derived_shape(ds[i]));
    });
    std::size_t tab_bad = 0, der_bad = 0, tab_bad_c = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        tab_bad += !tab[i];
        der_bad += !der[i];
        if (!tab[i] && ds[i].base_type == BaseType::C) ++tab_bad_c;
    }
    CheckResult r;
    r.passed = tab_bad == 0;
    std::ostringstream os;
    os << count << " descriptors: " << tab_bad << " violations of the tabulated shape (" << tab_bad_c
       << " of type C); " << der_bad << " violations with the factor c_sp+1 on u_c, v_c";
    r.detail = os.str();
    return r;
}

CheckResult check_asymptotics() {
    const double target = 4.0 / (std::numbers::pi * std::numbers::pi);
    const auto rep = s_numbers_empty(63, Parity::odd);
    const auto a = asymptotic_report(rep);
    double r61 = 0, rho30 = 0;
    for (const auto& [m, x] : a.log_growth)
        if (m == 61) r61 = x;
    for (const auto& [k, x] : a.corrected_ratio)
        if (k == 30) rho30 = x;
    const bool growth_ok = r61 >= 0.9 && r61 <= 1.1;
    const double rel = rho30 / target - 1;
    const bool ratio_ok = std::abs(rel) < 0.01;

    std::vector<Rational> geo;
    for (int k = 0; k < 30; ++k) geo.push_back(Rational(1) / Rational(Integer(1) << k));
    const auto control = asymptotic_report_from_coefficients(geo);
    const bool control_ok = std::abs(control.radius_estimate - 2.0) < 1e-9;

    const auto odd = s_numbers_empty(12, Parity::odd), even = s_numbers_empty(12, Parity::even);
    bool bound_ok = true;
    for (const auto* rp : {&odd, &even})
        for (const auto& [m, s] : rp->values)
            if (m >= 2) bound_ok = bound_ok && abs(s) <= 2 * complex_reference(m);

    CheckResult r;
    r.passed = growth_ok && ratio_ok && control_ok && bound_ok;
    std::ostringstream os;
    os.precision(6);
    os << "ln|S|/(m ln m) at m=61 = " << r61 << (growth_ok ? "" : " (outside [0.9,1.1])") << "; rho_30 = " << rho30
       << " rel.err " << rel << (ratio_ok ? "" : " (outside 1%)") << "; geometric control radius "
       << control.radius_estimate << "; |S| <= 2(m-1)^(m-1) for m <= 12 " << (bound_ok ? "holds" : "FAILS");
    r.detail = os.str();
    return r;
}

std::vector<Partition> random_profiles(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<Partition> out(static_cast<std::size_t>(pick(0, 3)));
    for (auto& p : out) {
        for (int k = pick(1, 5); k > 0; --k) p.push_back(pick(1, 6));
        std::sort(p.rbegin(), p.rend());
    }
    return out;
}

CheckResult check_vanishing(std::uint64_t seed, int count) {
    struct Row {
        std::vector<Partition> lambda;
        bool odd, even;
    };
    const std::vector<Row> table{{{{3, 1}}, false, false}, {{{2, 1}}, false, true}, {{{2, 2}}, true, true}, {{}, true, true}};
    bool table_ok = true;
    for (const auto& row : table)
        table_ok = table_ok && nonvanishing({row.lambda, Parity::odd}) == row.odd &&
                   nonvanishing({row.lambda, Parity::even}) == row.even;
    std::mt19937_64 rng(seed);
    int disagree = 0, vanishing = 0;
    for (int i = 0; i < count; ++i) {
        const ReducedProfiles l{random_profiles(rng), rng() % 2 ? Parity::odd : Parity::even};
        const bool nv = nonvanishing(l);
        vanishing += !nv;
        if (nv == trivially_vanishes(l).has_value()) ++disagree;
    }
    CheckResult r;
    r.passed = table_ok && disagree == 0;
    std::ostringstream os;
    os << "truth table " << (table_ok ? "matches" : "MISMATCH") << "; " << count << " random profile lists ("
       << vanishing << " vanishing), " << disagree << " disagreements";
    r.detail = os.str();
    return r;
}

const char* check_name(int id) {
    static const char* names[] = {"",
                                  "broken-alternation table",
                                  "brute-force oracle",
                                  "ODE and closed-form identities",
                                  "invariance by exhaustion",
                                  "sign fixtures",
                                  "flip and rotation suites",
                                  "empty-profile pipeline",
                                  "simple-base two-route check",
                                  "linear independence",
                                  "F_B degrees and leading coefficients",
                                  "asymptotics",
                                  "vanishing truth table"};
    return names[id];
}

}  // namespace

RealBwGraph long_sign_fixture() {
    auto g = make_graph(Color::white, 11, 3);
    g.real_vertices[1].forest = {leaf(Color::white)};
    g.real_vertices[9].forest = {leaf(Color::white), leaf(Color::white)};
    return g;
}

RealBwGraph short_sign_fixture() {
    auto g = make_graph(Color::black, 5, 1);
    g.real_vertices[3].forest = {leaf(Color::black)};
    g.real_vertices[4].forest = {leaf(Color::white)};
    return g;
}

CheckResult run_check(int id, const VerifyOptions& o) {
    if (id < 1 || id > kCheckCount) throw std::out_of_range("no check " + std::to_string(id));
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        switch (id) {
        case 1: r = check_b_table(); break;
        case 2: r = check_bruteforce(o.max_bruteforce); break;
        case 3: r = check_odes(o.series_order); break;
        case 4: r = check_invariance(o.max_bw_degree); break;
        case 5: r = check_sign_fixtures(); break;
        case 6: r = check_flip_rotate(o.max_flip_degree); break;
        case 7: r = check_empty_pipeline(); break;
        case 8: r = check_simple_bases(o.simple_base_length); break;
        case 9: r = check_independence(); break;
        case 10: r = check_fb(o.seed, o.random_descriptors); break;
        case 11: r = check_asymptotics(); break;
        case 12: r = check_vanishing(o.seed, o.random_profiles); break;
        }
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = id;
    r.name = check_name(id);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, options));
    return out;
}

}  // namespace ratsign
