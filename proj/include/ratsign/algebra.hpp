#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace ratsign {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

struct BiDegree {
    int q_exp = 0;
    int f_exp = 0;

    auto operator<=>(const BiDegree&) const = default;
    BiDegree operator+(const BiDegree& o) const { return {q_exp + o.q_exp, f_exp + o.f_exp}; }
};

// Degree of a polynomial side. An empty optional is the zero sentinel, which
// std::optional already orders below every engaged value.
using Degree = std::optional<BiDegree>;

std::string to_string(const Degree& d);

class QFPolynomial {
public:
    using Terms = std::map<BiDegree, Rational>;

    QFPolynomial() = default;
    QFPolynomial(const Rational& c);
    static QFPolynomial monomial(int i, int j, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const BiDegree& d) const;
    void add_term(const BiDegree& d, const Rational& c);
    Degree degree() const;

    QFPolynomial& operator+=(const QFPolynomial& o);
    QFPolynomial& operator-=(const QFPolynomial& o);
    QFPolynomial& operator*=(const Rational& c);
    friend QFPolynomial operator+(QFPolynomial a, const QFPolynomial& b) { return a += b; }
    friend QFPolynomial operator-(QFPolynomial a, const QFPolynomial& b) { return a -= b; }
    friend QFPolynomial operator*(QFPolynomial a, const Rational& c) { return a *= c; }
    friend QFPolynomial operator*(const QFPolynomial& a, const QFPolynomial& b);
    QFPolynomial operator-() const { return *this * Rational(-1); }
    bool operator==(const QFPolynomial& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

// Element of Q[q,f] + Q[q,f]g with g^2 replaced by 1 - f^2.
class GElement {
public:
    GElement() = default;
    GElement(const Rational& c) : f_part_(c) {}
    GElement(QFPolynomial f_part, QFPolynomial g_part = {})
        : f_part_(std::move(f_part)), g_part_(std::move(g_part)) {}

    static GElement q() { return GElement(QFPolynomial::monomial(1, 0)); }
    static GElement f() { return GElement(QFPolynomial::monomial(0, 1)); }
    static GElement g() { return GElement(QFPolynomial(), QFPolynomial(Rational(1))); }

    const QFPolynomial& f_part() const { return f_part_; }
    const QFPolynomial& g_part() const { return g_part_; }
    bool is_zero() const { return f_part_.is_zero() && g_part_.is_zero(); }

    GElement& operator+=(const GElement& o);
    GElement& operator-=(const GElement& o);
    GElement& operator*=(const Rational& c);
    friend GElement operator+(GElement a, const GElement& b) { return a += b; }
    friend GElement operator-(GElement a, const GElement& b) { return a -= b; }
    friend GElement operator*(GElement a, const Rational& c) { return a *= c; }
    friend GElement operator*(const Rational& c, GElement a) { return a *= c; }
    friend GElement operator*(const GElement& a, const GElement& b);
    GElement operator-() const { return *this * Rational(-1); }
    bool operator==(const GElement& o) const = default;

private:
    QFPolynomial f_part_;
    QFPolynomial g_part_;
};

GElement g_multiply(const GElement& a, const GElement& b);
GElement power(const GElement& a, int e);
GElement apply_D(const GElement& a);

struct Degrees {
    Degree deg_f;
    Degree deg_g;
    bool operator==(const Degrees&) const = default;
};
Degrees degrees(const GElement& a);

enum class Side { f_side, g_side };
Rational leading_coefficient(const GElement& a, Side which);

struct TruncatedSeries {
    int order = 0;
    std::vector<Rational> coeffs;

    explicit TruncatedSeries(int n = 0) : order(n), coeffs(static_cast<std::size_t>(n) + 1) {}
    bool operator==(const TruncatedSeries&) const = default;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
};

TruncatedSeries tanh_series(int order);
TruncatedSeries sech_series(int order);
TruncatedSeries expand(const GElement& a, int order);
// Formal derivative d/dq, losing one order of precision.
TruncatedSeries derivative(const TruncatedSeries& s);

class InsufficientOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Smallest order at which every parity block of the monomial matrix has at
// least as many rows as columns.
int minimal_independence_order(const BiDegree& max_bidegree);
// Exact rank of the expansion matrix of all q^i f^j and q^i f^j g with
// i <= max.q_exp, j <= max.f_exp, truncated at the given order.
std::size_t expansion_rank(const BiDegree& max_bidegree, int order);
std::size_t monomial_count(const BiDegree& max_bidegree);
bool independence_rank(const BiDegree& max_bidegree, int order);
bool independence_rank(const BiDegree& max_bidegree);

nlohmann::json to_json(const QFPolynomial& p);
nlohmann::json to_json(const GElement& a);
GElement gelement_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TruncatedSeries& s);
std::string to_string(const GElement& a);

}  // namespace ratsign
