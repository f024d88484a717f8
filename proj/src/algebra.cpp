#include "ratsign/algebra.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

#include "ratsign/alternations.hpp"

namespace ratsign {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Degree& d) {
    if (!d) return "0";
    return "(" + std::to_string(d->q_exp) + "," + std::to_string(d->f_exp) + ")";
}

QFPolynomial::QFPolynomial(const Rational& c) {
    if (c != 0) terms_.emplace(BiDegree{0, 0}, c);
}

QFPolynomial QFPolynomial::monomial(int i, int j, const Rational& c) {
    QFPolynomial p;
    p.add_term({i, j}, c);
    return p;
}

Rational QFPolynomial::coefficient(const BiDegree& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QFPolynomial::add_term(const BiDegree& d, const Rational& c) {
    if (d.q_exp < 0 || d.f_exp < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Degree QFPolynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

QFPolynomial& QFPolynomial::operator+=(const QFPolynomial& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

QFPolynomial& QFPolynomial::operator-=(const QFPolynomial& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

QFPolynomial& QFPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

QFPolynomial operator*(const QFPolynomial& a, const QFPolynomial& b) {
    QFPolynomial r;
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add_term(da + db, ca * cb);
    return r;
}

GElement& GElement::operator+=(const GElement& o) {
    f_part_ += o.f_part_;
    g_part_ += o.g_part_;
    return *this;
}

GElement& GElement::operator-=(const GElement& o) {
    f_part_ -= o.f_part_;
    g_part_ -= o.g_part_;
    return *this;
}

GElement& GElement::operator*=(const Rational& c) {
    f_part_ *= c;
    g_part_ *= c;
    return *this;
}

GElement operator*(const GElement& a, const GElement& b) {
    static const QFPolynomial one_minus_f2 = QFPolynomial(Rational(1)) - QFPolynomial::monomial(0, 2);
    QFPolynomial f_part = a.f_part() * b.f_part();
    if (!a.g_part().is_zero() && !b.g_part().is_zero())
        f_part += a.g_part() * b.g_part() * one_minus_f2;
    QFPolynomial g_part = a.f_part() * b.g_part() + a.g_part() * b.f_part();
    return GElement(std::move(f_part), std::move(g_part));
}

GElement g_multiply(const GElement& a, const GElement& b) { return a * b; }

GElement power(const GElement& a, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    GElement result(Rational(1));
    for (int k = 0; k < e; ++k) result = result * a;
    return result;
}

GElement apply_D(const GElement& a) {
    // D(q^i f^j) = i q^i f^j + j q^{i+1} f^{j-1} - j q^{i+1} f^{j+1}
    // D(q^i f^j g) = (i q^i f^j + j q^{i+1} f^{j-1} - (j+1) q^{i+1} f^{j+1}) g
    QFPolynomial f_part, g_part;
    for (const auto& [d, c] : a.f_part().terms()) {
        auto [i, j] = d;
        f_part.add_term({i, j}, c * i);
        if (j > 0) {
            f_part.add_term({i + 1, j - 1}, c * j);
            f_part.add_term({i + 1, j + 1}, -c * j);
        }
    }
    for (const auto& [d, c] : a.g_part().terms()) {
        auto [i, j] = d;
        g_part.add_term({i, j}, c * i);
        if (j > 0) g_part.add_term({i + 1, j - 1}, c * j);
        g_part.add_term({i + 1, j + 1}, -c * (j + 1));
    }
    return GElement(std::move(f_part), std::move(g_part));
}

Degrees degrees(const GElement& a) {
    Degrees d;
    d.deg_f = a.f_part().degree();
    if (auto dg = a.g_part().degree()) d.deg_g = *dg + BiDegree{0, 1};
    return d;
}

Rational leading_coefficient(const GElement& a, Side which) {
    const QFPolynomial& p = which == Side::f_side ? a.f_part() : a.g_part();
    if (p.is_zero()) throw std::domain_error("leading coefficient of a vanishing part");
    return p.terms().rbegin()->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order != order) throw std::invalid_argument("series orders differ");
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order != order) throw std::invalid_argument("series orders differ");
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs) x *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order != b.order) throw std::invalid_argument("series orders differ");
    TruncatedSeries r(a.order);
    for (int i = 0; i <= a.order; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= a.order; ++j)
            if (b.coeffs[j] != 0) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

namespace {

// tanh = sum (-1)^k A_{2k+1} q^{2k+1}/(2k+1)!, sech = sum (-1)^k A_{2k} q^{2k}/(2k)!
TruncatedSeries zigzag_series(int order, int parity) {
    if (order < 0) throw std::invalid_argument("negative order");
    auto a = zigzag_numbers(order);
    TruncatedSeries s(order);
    Integer fact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) fact *= n;
        if (n % 2 != parity) continue;
        Rational c(a[n], fact);
        c.canonicalize();
        s.coeffs[n] = (n / 2) % 2 == 0 ? c : Rational(-c);
    }
    return s;
}

TruncatedSeries shift(const TruncatedSeries& s, int i) {
    TruncatedSeries r(s.order);
    for (int k = 0; k + i <= s.order; ++k) r.coeffs[k + i] = s.coeffs[k];
    return r;
}

}  // namespace

TruncatedSeries tanh_series(int order) { return zigzag_series(order, 1); }

TruncatedSeries sech_series(int order) { return zigzag_series(order, 0); }

TruncatedSeries expand(const GElement& a, int order) {
    if (order < 0) throw std::invalid_argument("negative order");
    const TruncatedSeries f = tanh_series(order);
    const TruncatedSeries g = sech_series(order);
    int max_j = 0;
    for (const auto& [d, c] : a.f_part().terms()) max_j = std::max(max_j, d.f_exp);
    for (const auto& [d, c] : a.g_part().terms()) max_j = std::max(max_j, d.f_exp);
    std::vector<TruncatedSeries> f_pow;
    TruncatedSeries one(order);
    one.coeffs[0] = 1;
    f_pow.push_back(one);
    for (int j = 1; j <= max_j; ++j) f_pow.push_back(f_pow.back() * f);

    TruncatedSeries f_sum(order), g_sum(order);
    for (const auto& [d, c] : a.f_part().terms())
        if (d.q_exp <= order) f_sum += shift(f_pow[d.f_exp], d.q_exp) * c;
    for (const auto& [d, c] : a.g_part().terms())
        if (d.q_exp <= order) g_sum += shift(f_pow[d.f_exp], d.q_exp) * c;
    return f_sum + g_sum * g;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
    if (s.order < 1) throw std::invalid_argument("derivative needs order >= 1");
    TruncatedSeries r(s.order - 1);
    for (int k = 1; k <= s.order; ++k) r.coeffs[k - 1] = s.coeffs[k] * k;
    return r;
}

namespace {

struct MonomialBlocks {
    // Columns of each parity block; every column is the list of n! * [q^n]
    // over the rows n of that parity.
    std::vector<std::vector<Integer>> columns[2];
    std::size_t rows[2] = {0, 0};
};

std::size_t block_columns(const BiDegree& m, int parity) {
    std::size_t count = 0;
    for (int i = 0; i <= m.q_exp; ++i)
        for (int j = 0; j <= m.f_exp; ++j)
            if ((i + j) % 2 == parity) count += 2;
    return count;
}

MonomialBlocks build_blocks(const BiDegree& m, int order) {
    MonomialBlocks blocks;
    for (int n = 0; n <= order; ++n) ++blocks.rows[n % 2];
    std::vector<Integer> factorial(order + 1);
    factorial[0] = 1;
    for (int n = 1; n <= order; ++n) factorial[n] = factorial[n - 1] * n;

    const TruncatedSeries f = tanh_series(order);
    const TruncatedSeries g = sech_series(order);
    TruncatedSeries fj(order);
    fj.coeffs[0] = 1;
    for (int j = 0; j <= m.f_exp; ++j) {
        if (j > 0) fj = fj * f;
        const TruncatedSeries fjg = fj * g;
        for (int i = 0; i <= m.q_exp; ++i) {
            const int parity = (i + j) % 2;
            const std::array<const TruncatedSeries*, 2> bases{&fj, &fjg};
            for (const TruncatedSeries* base : bases) {
                std::vector<Integer> col;
                for (int n = parity; n <= order; n += 2) {
                    Rational c = n >= i ? base->coeffs[n - i] : Rational(0);
                    c *= factorial[n];
                    col.push_back(c.get_num());
                }
                blocks.columns[parity].push_back(std::move(col));
            }
        }
    }
    return blocks;
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

std::size_t rank_mod_p(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
    std::vector<std::vector<std::uint64_t>> m(cols.size(), std::vector<std::uint64_t>(rows));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) {
            Integer v = cols[c][r] % Integer(static_cast<unsigned long>(kPrime));
            if (v < 0) v += static_cast<unsigned long>(kPrime);
            m[c][r] = v.get_ui();
        }
    std::size_t rank = 0;
    for (std::size_t r = 0; r < rows && rank < m.size(); ++r) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][r] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        const std::uint64_t inv = powmod(m[rank][r], kPrime - 2);
        for (std::size_t c = rank + 1; c < m.size(); ++c) {
            if (m[c][r] == 0) continue;
            const std::uint64_t factor = mulmod(m[c][r], inv);
            for (std::size_t k = r; k < rows; ++k)
                m[c][k] = (m[c][k] + kPrime - mulmod(factor, m[rank][k])) % kPrime;
        }
        ++rank;
    }
    return rank;
}

// Fraction-free Gaussian elimination over the integers.
std::size_t rank_bareiss(std::vector<std::vector<Integer>> m, std::size_t rows) {
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t r = 0; r < rows && rank < m.size(); ++r) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][r] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t c = rank + 1; c < m.size(); ++c) {
            for (std::size_t k = r + 1; k < rows; ++k) {
                m[c][k] = m[rank][r] * m[c][k] - m[c][r] * m[rank][k];
                mpz_divexact(m[c][k].get_mpz_t(), m[c][k].get_mpz_t(), prev.get_mpz_t());
            }
            m[c][r] = 0;
        }
        prev = m[rank][r];
        ++rank;
    }
    return rank;
}

std::size_t block_rank(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
    const std::size_t bound = std::min(cols.size(), rows);
    // The rank modulo a prime never exceeds the rank over Q, so reaching the
    // trivial upper bound settles the question exactly.
    const std::size_t modular = rank_mod_p(cols, rows);
    if (modular == bound) return modular;
    return rank_bareiss(cols, rows);
}

}  // namespace

std::size_t monomial_count(const BiDegree& m) {
    if (m.q_exp < 0 || m.f_exp < 0) throw std::invalid_argument("negative bidegree");
    return 2 * static_cast<std::size_t>(m.q_exp + 1) * static_cast<std::size_t>(m.f_exp + 1);
}

int minimal_independence_order(const BiDegree& m) {
    monomial_count(m);
    const std::size_t even = block_columns(m, 0), odd = block_columns(m, 1);
    // Even rows 0,2,..,N number N/2+1; odd rows 1,3,..,N number (N+1)/2.
    int need_even = even == 0 ? 0 : static_cast<int>(2 * (even - 1));
    int need_odd = odd == 0 ? 0 : static_cast<int>(2 * odd - 1);
    return std::max(need_even, need_odd);
}

std::size_t expansion_rank(const BiDegree& m, int order) {
    monomial_count(m);
    if (order < 0) throw std::invalid_argument("negative order");
    const MonomialBlocks blocks = build_blocks(m, order);
    return block_rank(blocks.columns[0], blocks.rows[0]) + block_rank(blocks.columns[1], blocks.rows[1]);
}

bool independence_rank(const BiDegree& m, int order) {
    const int needed = minimal_independence_order(m);
    if (order < needed)
        throw InsufficientOrder("order " + std::to_string(order) + " cannot give full column rank for max " +
                                to_string(Degree(m)) + "; at least " + std::to_string(needed) + " is required");
    return expansion_rank(m, order) == monomial_count(m);
}

bool independence_rank(const BiDegree& m) { return independence_rank(m, minimal_independence_order(m)); }

nlohmann::json to_json(const QFPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [d, c] : p.terms()) arr.push_back({d.q_exp, d.f_exp, to_string(c)});
    return arr;
}

nlohmann::json to_json(const GElement& a) {
    return {{"f", to_json(a.f_part())}, {"g", to_json(a.g_part())}};
}

namespace {

QFPolynomial poly_from_json(const nlohmann::json& arr) {
    QFPolynomial p;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("malformed term");
        p.add_term({t[0].get<int>(), t[1].get<int>()}, parse_rational(t[2].get<std::string>()));
    }
    return p;
}

}  // namespace

GElement gelement_from_json(const nlohmann::json& j) {
    return GElement(poly_from_json(j.at("f")), poly_from_json(j.at("g")));
}

nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : s.coeffs) arr.push_back(to_string(c));
    return {{"order", s.order}, {"coeffs", arr}};
}

std::string to_string(const GElement& a) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const QFPolynomial& p, bool with_g) {
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const auto& [d, c] = *it;
            Rational mag = abs(c);
            out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            first = false;
            bool has_var = d.q_exp > 0 || d.f_exp > 0 || with_g;
            if (mag != 1 || !has_var) out << mag.get_str() << (has_var ? " " : "");
            std::string sep;
            if (d.q_exp > 0) out << sep << "q" << (d.q_exp > 1 ? "^" + std::to_string(d.q_exp) : ""), sep = " ";
            if (d.f_exp > 0) out << sep << "f" << (d.f_exp > 1 ? "^" + std::to_string(d.f_exp) : ""), sep = " ";
            if (with_g) out << sep << "g";
        }
    };
    emit(a.f_part(), false);
    emit(a.g_part(), true);
    if (first) out << "0";
    return out.str();
}

}  // namespace ratsign
