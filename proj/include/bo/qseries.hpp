#pragma once

#include <map>
#include <optional>
#include <string>

#include "bo/rational.hpp"

namespace bo {

// Truncated formal series in q with exponents on the 1/8-integer grid: the
// key n of a term stands for q^{n/8}. A series stores exact coefficients for
// every exponent with numerator < order8(); nothing is claimed at or above
// that bound. Exponents may be negative (Laurent tails come from inverse()),
// but every series is bounded below.
//
// Truncation contract: an operation's output order is the largest order the
// inputs jointly guarantee, and is never silently extended. For a product,
//   order = min(a.order8 + b.low_exp8, b.order8 + a.low_exp8),
// where low_exp8 of a series with no stored terms counts as its order8.
//
// Values are immutable in use: all operations return fresh series, so sharing
// across threads is safe.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(int order8) : order8_(order8) {}
    QSeries(std::map<int, Rational> terms, int order8);

    static QSeries zero(int order8) { return QSeries(order8); }
    static QSeries one(int order8) { return monomial(0, Rational(1), order8); }
    static QSeries monomial(int exp8, const Rational& coeff, int order8);

    int order8() const { return order8_; }
    bool is_zero() const { return terms_.empty(); }
    int low_exp8() const { return terms_.empty() ? order8_ : terms_.begin()->first; }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int exp8) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
    friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    // Multiplicative inverse; requires a nonzero lowest term. The result has
    // lowest exponent -low_exp8() and order order8() - 2*low_exp8().
    QSeries inverse() const;
    QSeries pow(int e) const;
    QSeries scaled(const Rational& c) const;
    QSeries shifted(int exp8) const;  // multiply by q^{exp8/8}
    // Restrict to a smaller truncation bound; throws if that would claim
    // exactness the series does not have.
    QSeries truncated(int order8) const;

    bool equal_below(const QSeries& o, int bound8) const;
    // Smallest exponent below bound8 where the two series differ.
    std::optional<int> first_difference(const QSeries& o, int bound8) const;

private:
    int order8_ = 0;
    std::map<int, Rational> terms_;
};

// Euler product phi(q) = prod_{j>=1} (1 - q^j), truncated.
QSeries euler_phi(int order8);

// k-th (t d/dt)-derivative of the theta series
//   Theta(t) = sum_n (-1)^n q^{(n+1/2)^2/2} t^{n+1/2}
// evaluated at the rational square root s = t^{1/2}, so every power of t
// appearing is an integer power of s. s must be nonzero.
QSeries theta_deriv(int k, const Rational& s, int order8);

std::string to_string(const QSeries& qs);

}  // namespace bo
