#include "bo/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bo {

QSeries::QSeries(std::map<int, Rational> terms, int order8) : order8_(order8) {
    for (auto& [e, c] : terms) {
        if (e < order8_ && !bo::is_zero(c)) terms_.emplace(e, std::move(c));
    }
}

QSeries QSeries::monomial(int exp8, const Rational& coeff, int order8) {
    QSeries qs(order8);
    if (exp8 < order8 && !bo::is_zero(coeff)) qs.terms_.emplace(exp8, coeff);
    return qs;
}

Rational QSeries::coeff(int exp8) const {
    auto it = terms_.find(exp8);
    return it == terms_.end() ? Rational(0) : it->second;
}

QSeries QSeries::operator-() const {
    QSeries out(order8_);
    for (auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    order8_ = std::min(order8_, o.order8_);
    terms_.erase(terms_.lower_bound(order8_), terms_.end());
    for (auto& [e, c] : o.terms_) {
        if (e >= order8_) break;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (bo::is_zero(it->second)) terms_.erase(it);
        }
    }
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int order = std::min(a.order8() + b.low_exp8(), b.order8() + a.low_exp8());
    std::map<int, Rational> acc;
    const int lb = b.low_exp8();
    for (const auto& [ea, ca] : a.terms()) {
        if (ea + lb >= order) break;
        for (const auto& [eb, cb] : b.terms()) {
            const int e = ea + eb;
            if (e >= order) break;
            auto [it, fresh] = acc.emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    return QSeries(std::move(acc), order);
}

QSeries QSeries::inverse() const {
    if (terms_.empty())
        throw std::domain_error("qseries: cannot invert a series with no nonzero term below truncation");
    const int la = low_exp8();
    const Rational lead = terms_.begin()->second;
    const int span = order8_ - la;
    // Normalize to a unit u with constant term 1, invert, undo normalization.
    std::map<int, Rational> u;
    for (auto& [e, c] : terms_) u.emplace(e - la, c / lead);
    std::map<int, Rational> inv;
    inv.emplace(0, Rational(1));
    for (int e = 1; e < span; ++e) {
        Rational s(0);
        for (auto it = std::next(u.begin()); it != u.end() && it->first <= e; ++it) {
            auto hit = inv.find(e - it->first);
            if (hit != inv.end()) s += it->second * hit->second;
        }
        if (!bo::is_zero(s)) inv.emplace(e, -s);
    }
    std::map<int, Rational> out;
    const Rational ilead = Rational(1) / lead;
    for (auto& [e, c] : inv) out.emplace(e - la, c * ilead);
    return QSeries(std::move(out), order8_ - 2 * la);
}

QSeries QSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return one(order8_);
    QSeries acc = *this;
    for (int i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

QSeries QSeries::scaled(const Rational& c) const {
    QSeries out(order8_);
    if (bo::is_zero(c)) return out;
    for (auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

QSeries QSeries::shifted(int exp8) const {
    QSeries out(order8_ + exp8);
    for (auto& [e, v] : terms_) out.terms_.emplace(e + exp8, v);
    return out;
}

QSeries QSeries::truncated(int order8) const {
    if (order8 > order8_)
        throw std::logic_error("qseries: cannot extend truncation from " + std::to_string(order8_) +
                               " to " + std::to_string(order8));
    QSeries out(order8);
    for (auto& [e, v] : terms_) {
        if (e >= order8) break;
        out.terms_.emplace(e, v);
    }
    return out;
}

std::optional<int> QSeries::first_difference(const QSeries& o, int bound8) const {
    if (order8_ < bound8 || o.order8_ < bound8)
        throw std::logic_error("qseries: comparison bound exceeds truncation validity");
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (true) {
        const bool ae = a == terms_.end() || a->first >= bound8;
        const bool be = b == o.terms_.end() || b->first >= bound8;
        if (ae && be) return std::nullopt;
        if (ae) return b->first;
        if (be) return a->first;
        if (a->first < b->first) return a->first;
        if (b->first < a->first) return b->first;
        if (a->second != b->second) return a->first;
        ++a;
        ++b;
    }
}

bool QSeries::equal_below(const QSeries& o, int bound8) const {
    return !first_difference(o, bound8).has_value();
}

QSeries euler_phi(int order8) {
    if (order8 <= 0) throw std::domain_error("euler_phi: order8 must be positive");
    QSeries acc = QSeries::one(order8);
    for (int j = 1; 8 * j < order8; ++j) {
        std::map<int, Rational> f{{0, Rational(1)}, {8 * j, Rational(-1)}};
        acc = acc * QSeries(std::move(f), order8);
    }
    return acc;
}

QSeries theta_deriv(int k, const Rational& s, int order8) {
    if (k < 0) throw std::invalid_argument("theta_deriv: derivative order must be nonnegative");
    if (bo::is_zero(s)) throw std::domain_error("theta_deriv: s must be nonzero");
    std::map<int, Rational> terms;
    for (long n = 0;; ++n) {
        const long m = 2 * n + 1;
        if (m * m >= order8) break;
        // Summands n and -(n+1) land on the same exponent (2n+1)^2 / 8.
        Rational c = rational_pow(make_rational(m, 2), k) *
                     (rational_pow(s, m) - (k % 2 == 0 ? rational_pow(s, -m) : -rational_pow(s, -m)));
        if (n % 2) c = -c;
        if (!bo::is_zero(c)) terms.emplace(static_cast<int>(m * m), std::move(c));
    }
    return QSeries(std::move(terms), order8);
}

namespace {

std::string monomial_str(int exp8) {
    if (exp8 == 0) return "";
    const int g = std::gcd(exp8 < 0 ? -exp8 : exp8, 8);
    const int num = exp8 / g;
    const int den = 8 / g;
    if (den == 1) {
        if (num == 1) return "q";
        return num < 0 ? "q^(" + std::to_string(num) + ")" : "q^" + std::to_string(num);
    }
    return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string to_string(const QSeries& qs) {
    if (qs.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : qs.terms()) {
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational a = neg ? Rational(-c) : c;
        const std::string mono = monomial_str(e);
        if (mono.empty()) {
            out << to_string(a);
        } else if (a == 1) {
            out << mono;
        } else {
            out << to_string(a) << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace bo
