#include "ratsign/alternations.hpp"

#include <algorithm>
#include <numeric>

namespace ratsign {

std::vector<Integer> zigzag_numbers(int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative size");
    std::vector<Integer> out{1};
    std::vector<Integer> prev{1};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Integer> cur(n + 1);
        cur[0] = 0;
        for (int k = 1; k <= n; ++k) cur[k] = cur[k - 1] + prev[n - k];
        out.push_back(cur[n]);
        prev = std::move(cur);
    }
    return out;
}

std::uint64_t disorders(const std::vector<int>& seq) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++count;
    return count;
}

Classification classify(const Permutation& perm) {
    const int n = static_cast<int>(perm.size());
    if (n < 1) throw std::invalid_argument("empty permutation");
    int violations = 0, index = 0;
    for (int i = 1; i < n; ++i) {
        const int a = perm[i - 1], b = perm[i];
        const bool descent_required = (n - i) % 2 == 1;
        if (descent_required ? !(a > b) : !(a < b)) {
            ++violations;
            index = i;
        }
    }
    if (violations == 0) return Classification::ordinary();
    if (violations == 1) return Classification::broken(index);
    return Classification::neither();
}

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

AlternationTables count_recursive(int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative size");
    AlternationTables t;
    t.n_max = n_max;
    t.A = zigzag_numbers(n_max);
    t.B.assign(n_max + 1, 0);
    t.B_by_pos.assign(n_max + 1, {});
    for (int n = 0; n <= n_max; ++n) t.B_by_pos[n].assign(n + 1, 0);
    for (int n = 2; n <= n_max; ++n) {
        for (int j = 1; j <= n; ++j) {
            Integer value = 0;
            if ((n + j) % 2 == 1)
                value = binomial(n - 1, j - 1) * (t.B[j - 1] * t.A[n - j] + t.A[j - 1] * t.B[n - j]);
            else if (j == n || (n % 2 == 1 && j == 1))
                value = t.A[n - 1];
            t.B_by_pos[n][j] = value;
            t.B[n] += value;
        }
    }
    return t;
}

BruteForceCounts count_bruteforce(int n) {
    if (n < 1) throw std::invalid_argument("brute force needs n >= 1");
    if (n > kBruteForceLimit)
        throw SizeLimitError("brute force enumeration is limited to n <= " + std::to_string(kBruteForceLimit));
    BruteForceCounts out;
    out.A = 0;
    out.B = 0;
    out.by_pos.assign(n + 1, 0);
    std::vector<std::uint64_t> pos(n + 1, 0);
    std::uint64_t a = 0, b = 0;
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        const auto c = classify(p);
        if (c.kind == Classification::Kind::ordinary) {
            ++a;
        } else if (c.kind == Classification::Kind::broken) {
            ++b;
            const auto top = std::find(p.begin(), p.end(), n) - p.begin();
            ++pos[top + 1];
        }
    } while (std::next_permutation(p.begin(), p.end()));
    out.A = static_cast<unsigned long>(a);
    out.B = static_cast<unsigned long>(b);
    for (int j = 1; j <= n; ++j) out.by_pos[j] = static_cast<unsigned long>(pos[j]);
    return out;
}

GElement base_series(BaseSeries which) {
    const GElement q = GElement::q(), f = GElement::f(), g = GElement::g();
    switch (which) {
    case BaseSeries::f: return f;
    case BaseSeries::g: return g;
    case BaseSeries::u: return -f - q + q * f * f + Rational(2) * f * g;
    case BaseSeries::v: return Rational(1) - Rational(2) * f * f - g + q * f * g;
    }
    throw std::invalid_argument("unknown base series");
}

TruncatedSeries broken_series(BaseSeries which, int order) {
    if (which != BaseSeries::u && which != BaseSeries::v)
        throw std::invalid_argument("broken series exist for u and v only");
    const int parity = which == BaseSeries::u ? 1 : 0;
    const auto t = count_recursive(std::max(order, 0));
    TruncatedSeries s(order);
    Integer fact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) fact *= n;
        if (n % 2 != parity) continue;
        Rational c(t.B[n], fact);
        c.canonicalize();
        s.coeffs[n] = (n / 2) % 2 == 0 ? c : Rational(-c);
    }
    return s;
}

namespace {

TruncatedSeries truncate(const TruncatedSeries& s, int order) {
    TruncatedSeries r(order);
    std::copy_n(s.coeffs.begin(), order + 1, r.coeffs.begin());
    return r;
}

GElement u_rhs(const GElement& u) {
    const GElement f = GElement::f(), g = GElement::g();
    return Rational(2) * (g - f * u - Rational(1));
}

GElement v_rhs(const GElement& u, const GElement& v) {
    const GElement f = GElement::f(), g = GElement::g();
    return -(f + f * v + g * u);
}

// Checks y' = rhs for a series y given to `order`, comparing through order-1.
bool series_ode_holds(const TruncatedSeries& y, const TruncatedSeries& rhs) {
    const int n = y.order - 1;
    return derivative(y) == truncate(rhs, n);
}

}  // namespace

bool satisfies_u_ode(const GElement& u, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    if (!(apply_D(u) == GElement::q() * u_rhs(u))) return false;
    return series_ode_holds(expand(u, order), expand(u_rhs(u), order));
}

bool verify_odes(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const GElement u = base_series(BaseSeries::u), v = base_series(BaseSeries::v);
    const GElement q = GElement::q();
    // Exact identities after multiplying both sides by q, so that D = q d/dq applies.
    if (!(apply_D(u) == q * u_rhs(u))) return false;
    if (!(apply_D(v) == q * v_rhs(u, v))) return false;

    // Series side: u and v come from the broken-alternation counts, f and g
    // from the ordinary ones.
    const TruncatedSeries us = broken_series(BaseSeries::u, order);
    const TruncatedSeries vs = broken_series(BaseSeries::v, order);
    if (!(us == expand(u, order)) || !(vs == expand(v, order))) return false;
    const TruncatedSeries fs = tanh_series(order), gs = sech_series(order);
    TruncatedSeries one(order);
    one.coeffs[0] = 1;
    const TruncatedSeries u_side = (gs - fs * us - one) * Rational(2);
    const TruncatedSeries v_side = (fs + fs * vs + gs * us) * Rational(-1);
    return series_ode_holds(us, u_side) && series_ode_holds(vs, v_side);
}

std::string family_name(Family kind) {
    switch (kind) {
    case Family::f_c: return "f_c";
    case Family::g_c: return "g_c";
    case Family::gt_c: return "gt_c";
    case Family::u_c: return "u_c";
    case Family::v_c: return "v_c";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family k : {Family::f_c, Family::g_c, Family::gt_c, Family::u_c, Family::v_c})
        if (family_name(k) == name || family_name(k).substr(0, family_name(k).size() - 2) == name) return k;
    throw std::invalid_argument("unknown family '" + name + "'");
}

GElement family(Family kind, int c) {
    if (c < 0) throw std::invalid_argument("family index must be >= 0");
    GElement x;
    int first = 0;
    switch (kind) {
    case Family::f_c: x = base_series(BaseSeries::f), first = 1; break;
    case Family::g_c: x = base_series(BaseSeries::g), first = 0; break;
    case Family::gt_c: x = base_series(BaseSeries::g), first = 2; break;
    case Family::u_c: x = base_series(BaseSeries::u), first = 3; break;
    case Family::v_c: x = base_series(BaseSeries::v), first = 2; break;
    }
    Integer scale = 1;
    for (int k = 0; k < c; ++k) {
        x = apply_D(x) - x * Rational(first + 2 * k);
        scale *= 2 * (k + 1);
    }
    return x * Rational(Integer(1), scale);
}

}  // namespace ratsign
