#include "bo/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bo {

namespace {

// Identities are checked through q^order inclusive.
int checked_order8(int order_q) { return 8 * order_q + 8; }

std::string digest(const QSeries& s, size_t max_terms = 5) {
    if (s.is_zero()) return "0";
    size_t kept = 0;
    std::map<int, Rational> terms;
    for (const auto& [e, c] : s.terms()) {
        if (kept++ == max_terms) break;
        terms.emplace(e, c);
    }
    std::string text = to_string(QSeries(std::move(terms), s.order8()));
    if (s.terms().size() > max_terms) text += " + ...";
    return text;
}

std::string digest(const SymLaurentPoly& p) {
    if (p.coeffs.empty()) return "0";
    const auto& [key, series] = *p.coeffs.begin();
    std::ostringstream out;
    out << p.coeffs.size() << " monomial(s); m" << key.str() << ": " << digest(series, 3);
    return out.str();
}

std::string points_str(const std::vector<TPoint>& pts) {
    std::ostringstream out;
    out << "s=(";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ",";
        out << to_string(pts[i].s);
    }
    out << ")";
    return out.str();
}

VerifyReport make_report(std::string id, std::string params, int order8,
                         std::optional<int> first_diff, std::string lhs, std::string rhs) {
    VerifyReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.order8 = order8;
    r.equal = !first_diff.has_value();
    r.first_diff_exp8 = first_diff;
    r.lhs_digest = std::move(lhs);
    r.rhs_digest = std::move(rhs);
    return r;
}

// All generalized partitions whose leading q-exponent la^2/2 survives the
// truncation: 4 * sum(entries^2) < order8.
std::vector<GenPartition> bounded_gen_partitions(int level, int order8) {
    int b = 0;
    while (4 * (b + 1) * (b + 1) < order8) ++b;
    std::vector<GenPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth, long long sq, int max_allowed) -> void {
        if (depth == level) {
            out.emplace_back(cur);
            return;
        }
        for (int e = max_allowed; e >= -b; --e) {
            const long long s = sq + 4LL * e * e;
            if (s >= order8) continue;
            cur.push_back(e);
            self(self, depth + 1, s, e);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, b);
    return out;
}

// out += sum_mu K_{la mu} w m_mu, the Schur polynomial s_la expanded in
// monomials with series weight w.
void add_schur_weighted(SymLaurentPoly& out, const GenPartition& la, const QSeries& w) {
    if (w.is_zero()) return;
    for (const auto& mu :
         gen_partitions(la.length(), la.size(), la.min_entry(), la.max_entry())) {
        const long long kk = kostka_number(la, mu);
        if (kk != 0) out.add(mu, w.scaled(Rational(static_cast<long>(kk))));
    }
}

// Expands prod_{i=1..level} f(z_i) in monomial coordinates, where f has the
// given Laurent coefficients g: the m_mu coordinate is prod_i g[mu_i].
SymLaurentPoly product_over_slots(int level, const std::map<int, QSeries>& g, int order8) {
    std::vector<std::pair<int, const QSeries*>> cs;
    for (const auto& [c, series] : g) cs.emplace_back(c, &series);
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    SymLaurentPoly out;
    out.level = level;
    std::vector<int> tuple;
    auto rec = [&](auto&& self, int depth, size_t start, const QSeries& partial) -> void {
        if (depth == level) {
            out.coeffs.emplace(GenPartition(tuple), partial.truncated(order8));
            return;
        }
        for (size_t i = start; i < cs.size(); ++i) {
            QSeries next = partial * *cs[i].second;
            if (next.is_zero()) continue;
            tuple.push_back(cs[i].first);
            self(self, depth + 1, i, next);
            tuple.pop_back();
        }
    };
    rec(rec, 0, 0, QSeries::one(order8));
    return out;
}

// Laurent coefficients in z of prod_{r in 1/2+Z>=0} (1 + q^r z)(1 + q^r z^{-1}).
std::map<int, QSeries> fermion_pair_factor(int order8) {
    std::map<int, QSeries> fc;
    fc.emplace(0, QSeries::one(order8));
    for (int j = 1; 8 * j - 4 < order8; ++j) {
        const int e8 = 8 * j - 4;
        std::map<int, QSeries> next;
        auto add = [&](int c, QSeries v) {
            auto it = next.find(c);
            if (it == next.end()) {
                next.emplace(c, std::move(v));
            } else {
                it->second += v;
            }
        };
        for (const auto& [c, f] : fc) {
            add(c, f);
            add(c + 1, f.shifted(e8));
            add(c - 1, f.shifted(e8));
            add(c, f.shifted(2 * e8));
        }
        fc.clear();
        for (auto& [c, f] : next) {
            if (!f.is_zero()) fc.emplace(c, f.truncated(order8));
        }
    }
    return fc;
}

VerifyReport check_jacobi(const Rational& s, int order_q) {
    const int n8 = checked_order8(order_q);
    const Rational t = s * s;

    // Theta form: Theta(t) = q^{1/8}(s - 1/s) phi(q) prod (1 - q^j t)(1 - q^j / t).
    const QSeries lhs_theta = theta_deriv(0, s, n8);
    QSeries prod = euler_phi(n8);
    for (int j = 1; 8 * j < n8; ++j) {
        prod = prod * QSeries({{0, Rational(1)}, {8 * j, -t}}, n8);
        prod = prod * QSeries({{0, Rational(1)}, {8 * j, -Rational(1) / t}}, n8);
    }
    const QSeries rhs_theta = prod.scaled(s - Rational(1) / s).shifted(1);
    auto diff = lhs_theta.first_difference(rhs_theta, n8);

    // Sum form: sum_k x^k q^{k^2/2} = phi(q) prod (1 + x q^{j-1/2})(1 + x^{-1} q^{j-1/2}).
    QSeries lhs_sum = QSeries::zero(n8);
    for (int k = 0; 4 * k * k < n8; k = (k <= 0 ? 1 - k : -k))
        lhs_sum += QSeries::monomial(4 * k * k, rational_pow(s, k), n8);
    QSeries rhs_sum = euler_phi(n8);
    for (int j = 1; 8 * j - 4 < n8; ++j) {
        rhs_sum = rhs_sum * QSeries({{0, Rational(1)}, {8 * j - 4, s}}, n8);
        rhs_sum = rhs_sum * QSeries({{0, Rational(1)}, {8 * j - 4, Rational(1) / s}}, n8);
    }
    if (!diff) diff = lhs_sum.first_difference(rhs_sum, n8);

    return make_report("jacobi", "s=" + to_string(s) + " through q^" + std::to_string(order_q), n8,
                       diff, digest(lhs_theta), digest(rhs_theta));
}

VerifyReport check_cor33(int level, int order_q) {
    const int n8 = checked_order8(order_q);
    const SymLaurentPoly lhs = product_over_slots(level, fermion_pair_factor(n8), n8);
    SymLaurentPoly rhs;
    rhs.level = level;
    for (const auto& la : bounded_gen_partitions(level, n8))
        add_schur_weighted(rhs, la, qdim(level, la, n8));
    const auto diff = lhs.first_difference(rhs, n8);
    std::optional<int> exp = diff ? std::optional<int>(diff->first) : std::nullopt;
    std::string params = "level=" + std::to_string(level) + " through q^" + std::to_string(order_q);
    if (diff) params += " (at m" + diff->second.str() + ")";
    return make_report("cor33", std::move(params), n8, exp, digest(lhs), digest(rhs));
}

VerifyReport check_lemma35(int level, const std::vector<TPoint>& pts, int order_q) {
    const int n8 = checked_order8(order_q);
    std::map<int, QSeries> g;
    for (const auto& [key, series] : npoint_charge_family(pts, n8).coeffs)
        g.emplace(key.entry(0), series);
    const SymLaurentPoly lhs = product_over_slots(level, g, n8);
    SymLaurentPoly rhs;
    rhs.level = level;
    for (const auto& la : bounded_gen_partitions(level, n8))
        add_schur_weighted(rhs, la, npoint_theta(level, la, pts, n8));
    const auto diff = lhs.first_difference(rhs, n8);
    std::optional<int> exp = diff ? std::optional<int>(diff->first) : std::nullopt;
    std::string params = "level=" + std::to_string(level) + " " + points_str(pts) + " through q^" +
                         std::to_string(order_q);
    if (diff) params += " (at m" + diff->second.str() + ")";
    return make_report("lemma35", std::move(params), n8, exp, digest(lhs), digest(rhs));
}

VerifyReport check_cor36(int level, const std::vector<TPoint>& pts, int order_q) {
    const int n8 = checked_order8(order_q);
    const GenPartition zeros = GenPartition::zeros(level);
    const QSeries lhs = npoint_theta(level, zeros, pts, n8);
    const QSeries rhs = bo_npoint(pts, n8).pow(level) * qdim_numerator(level, zeros, n8);
    const auto diff = lhs.first_difference(rhs, n8);
    return make_report("cor36",
                       "level=" + std::to_string(level) + " " + points_str(pts) + " through q^" +
                           std::to_string(order_q),
                       n8, diff, digest(lhs), digest(rhs));
}

VerifyReport check_cor37(int level, int order_q) {
    const int n8 = checked_order8(order_q);
    std::map<int, QSeries> g;
    for (int k = 0; 4 * k * k < n8; k = (k <= 0 ? 1 - k : -k))
        g.emplace(k, QSeries::monomial(4 * k * k, Rational(1), n8));
    const SymLaurentPoly lhs = product_over_slots(level, g, n8);
    SymLaurentPoly rhs;
    rhs.level = level;
    for (const auto& la : bounded_gen_partitions(level, n8))
        add_schur_weighted(rhs, la, qdim_numerator(level, la, n8));
    const auto diff = lhs.first_difference(rhs, n8);
    std::optional<int> exp = diff ? std::optional<int>(diff->first) : std::nullopt;
    std::string params = "level=" + std::to_string(level) + " through q^" + std::to_string(order_q);
    if (diff) params += " (at m" + diff->second.str() + ")";
    return make_report("cor37", std::move(params), n8, exp, digest(lhs), digest(rhs));
}

VerifyReport check_cor42(int level, const GenPartition& la, int order_q) {
    const int n8 = checked_order8(order_q);
    const QSeries lhs = inverse_kostka_qsum(level, la, n8);
    const QSeries rhs = qdim_numerator(level, la, n8);
    const auto diff = lhs.first_difference(rhs, n8);
    std::string params = "level=" + std::to_string(level) + " lambda=" + la.str() +
                         " through q^" + std::to_string(order_q);
    if (diff) {
        // The matrix orientation is pinned by this identity; if the transpose
        // would have passed, say so instead of leaving a bare mismatch.
        int b = 0;
        while (4 * (b + 1) * (b + 1) < n8) ++b;
        const KostkaTable table = kostka_table(la.size(), level, std::min(-b, la.min_entry()),
                                               std::max(b, la.max_entry()));
        QSeries swapped = QSeries::zero(n8);
        for (const auto& mu : table.index) {
            const long long e8 = 4 * mu.sum_of_squares();
            if (e8 >= n8) continue;
            const long long c = table.inverse_kostka(la, mu);
            if (c != 0)
                swapped += QSeries::monomial(static_cast<int>(e8),
                                             Rational(static_cast<long>(c)), n8);
        }
        if (swapped.equal_below(rhs, n8))
            params += " [holds under the transposed inverse-Kostka orientation]";
    }
    return make_report("cor42", std::move(params), n8, diff, digest(lhs), digest(rhs));
}

VerifyReport check_cor43(int level, const GenPartition& la, int order_q) {
    if (la.min_entry() < 0)
        throw std::invalid_argument("cor43: lambda must be an ordinary partition");
    const int n8 = checked_order8(order_q);
    const int d = la.size();

    QSeries lhs = QSeries::zero(n8);
    // Ordinary partitions of |la|, padded to the level.
    {
        const KostkaTable table = kostka_table(d, level, 0, std::max({d, la.max_entry(), 1}));
        for (const auto& nu : partitions_of(d)) {
            if (nu.length() > level) continue;
            std::vector<int> padded = nu.parts();
            padded.resize(static_cast<size_t>(level), 0);
            const GenPartition mu(padded);
            const long long c = table.inverse_kostka(mu, la);
            if (c != 0)
                lhs += QSeries::monomial(static_cast<int>(4 * mu.sum_of_squares()), Rational(static_cast<long>(c)), n8);
        }
    }
    // Shifted blocks: partitions of |la| + r*level shorter than the level.
    for (int r = 1; r < level; ++r) {
        const int dr = d + r * level;
        const KostkaTable table = kostka_table(dr, level, 0, std::max(dr, la.max_entry() + r));
        const GenPartition la_shift = la.shifted(r);
        for (const auto& nu : partitions_of(dr)) {
            if (nu.length() >= level) continue;
            std::vector<int> padded = nu.parts();
            padded.resize(static_cast<size_t>(level), 0);
            const GenPartition mu(padded);
            const long long c = table.inverse_kostka(mu, la_shift);
            if (c == 0) continue;
            long long e8 = 0;
            for (int e : padded) e8 += 4LL * (e - r) * (e - r);
            lhs += QSeries::monomial(static_cast<int>(e8), Rational(static_cast<long>(c)), n8);
        }
    }
    const QSeries rhs = qdim_numerator(level, la, n8);
    const auto diff = lhs.first_difference(rhs, n8);
    return make_report("cor43",
                       "level=" + std::to_string(level) + " lambda=" + la.str() + " through q^" +
                           std::to_string(order_q),
                       n8, diff, digest(lhs), digest(rhs));
}

VerifyReport check_ok_shift(int k, const std::vector<TPoint>& pts, int order_q) {
    const int n8 = checked_order8(order_q);
    const QSeries lhs = oracle_level1_charge(k, pts, n8);
    const QSeries rhs = oracle_level1_charge(0, pts, n8)
                            .shifted(4 * k * k)
                            .scaled(rational_pow(product_t(pts), k));
    const auto diff = lhs.first_difference(rhs, n8);
    return make_report("ok-shift",
                       "k=" + std::to_string(k) + " " + points_str(pts) + " through q^" +
                           std::to_string(order_q),
                       n8, diff, digest(lhs), digest(rhs));
}

VerifyReport aggregate(std::string id, std::string params, const std::vector<VerifyReport>& parts) {
    VerifyReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.equal = true;
    for (const auto& p : parts) {
        r.order8 = p.order8;
        if (!p.equal && r.equal) {
            r.equal = false;
            r.first_diff_exp8 = p.first_diff_exp8;
            r.params += " [first failure: " + p.params + "]";
            r.lhs_digest = p.lhs_digest;
            r.rhs_digest = p.rhs_digest;
        }
    }
    if (r.equal && !parts.empty()) {
        r.lhs_digest = parts.front().lhs_digest;
        r.rhs_digest = parts.front().rhs_digest;
    }
    return r;
}

std::vector<TPoint> default_points(int n) {
    static const std::vector<Rational> pool = {make_rational(2), make_rational(3, 2),
                                               make_rational(5, 3)};
    std::vector<TPoint> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(pool[static_cast<size_t>(i) % pool.size()]);
    return pts;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
    static const std::vector<std::string> ids = {"jacobi", "cor33", "lemma35", "cor36",
                                                 "cor37",  "cor42", "cor43",   "ok-shift"};
    return ids;
}

VerifyReport verify(const std::string& id, const VerifyOptions& opts) {
    const int level = opts.level.value_or(2);
    if (level < 1) throw std::invalid_argument("verify: level must be positive");
    auto lambda_or = [&](const GenPartition& fallback) {
        return opts.lambda.value_or(fallback);
    };
    if (id == "jacobi") {
        const Rational s = opts.pts.empty() ? make_rational(2) : opts.pts.front().s;
        return check_jacobi(s, opts.order_q.value_or(20));
    }
    if (id == "cor33") return check_cor33(level, opts.order_q.value_or(8));
    if (id == "lemma35")
        return check_lemma35(level, opts.pts.empty() ? default_points(2) : opts.pts,
                             opts.order_q.value_or(6));
    if (id == "cor36")
        return check_cor36(level, opts.pts.empty() ? default_points(1) : opts.pts,
                           opts.order_q.value_or(8));
    if (id == "cor37") return check_cor37(level, opts.order_q.value_or(10));
    if (id == "cor42")
        return check_cor42(level, lambda_or(GenPartition::zeros(level)), opts.order_q.value_or(12));
    if (id == "cor43") {
        std::vector<int> one(static_cast<size_t>(level), 0);
        one[0] = 1;
        return check_cor43(level, lambda_or(GenPartition(one)), opts.order_q.value_or(10));
    }
    if (id == "ok-shift")
        return check_ok_shift(opts.charge.value_or(1),
                              opts.pts.empty() ? default_points(1) : opts.pts,
                              opts.order_q.value_or(8));
    throw std::invalid_argument("verify: unknown identity id '" + id + "' (known: jacobi, cor33, "
                                "lemma35, cor36, cor37, cor42, cor43, ok-shift)");
}

std::vector<VerifyReport> verify_battery(std::optional<int> order_q) {
    std::vector<VerifyReport> out;
    const std::vector<Rational> svals = {make_rational(2), make_rational(3, 2),
                                         make_rational(5, 3)};

    for (const auto& s : svals) out.push_back(check_jacobi(s, order_q.value_or(20)));
    for (int level = 1; level <= 3; ++level)
        out.push_back(check_cor33(level, order_q.value_or(8)));
    for (int n = 0; n <= 2; ++n)
        out.push_back(check_lemma35(2, default_points(n), order_q.value_or(6)));
    for (int level = 1; level <= 3; ++level) {
        for (int n = 0; n <= 2; ++n)
            out.push_back(check_cor36(level, default_points(n), order_q.value_or(8)));
    }
    for (int level = 1; level <= 3; ++level)
        out.push_back(check_cor37(level, order_q.value_or(10)));

    for (int level = 1; level <= 3; ++level) {
        std::vector<VerifyReport> parts;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int depth, int max_allowed) -> void {
            if (depth == level) {
                parts.push_back(check_cor42(level, GenPartition(cur), order_q.value_or(12)));
                return;
            }
            for (int e = max_allowed; e >= -3; --e) {
                cur.push_back(e);
                self(self, depth + 1, e);
                cur.pop_back();
            }
        };
        rec(rec, 0, 3);
        out.push_back(aggregate("cor42",
                                "level=" + std::to_string(level) +
                                    " all lambda in [-3,3]^" + std::to_string(level) +
                                    " through q^" + std::to_string(order_q.value_or(12)),
                                parts));
    }

    for (int level = 1; level <= 3; ++level) {
        std::vector<VerifyReport> parts;
        for (int d = 0; d <= 4; ++d) {
            for (const auto& nu : partitions_of(d)) {
                if (nu.length() > level) continue;
                std::vector<int> padded = nu.parts();
                padded.resize(static_cast<size_t>(level), 0);
                parts.push_back(check_cor43(level, GenPartition(padded), order_q.value_or(10)));
            }
        }
        out.push_back(aggregate("cor43",
                                "level=" + std::to_string(level) +
                                    " ordinary lambda with |lambda| <= 4 through q^" +
                                    std::to_string(order_q.value_or(10)),
                                parts));
    }

    {
        std::vector<VerifyReport> parts;
        for (int k = -2; k <= 2; ++k)
            parts.push_back(check_ok_shift(k, default_points(1), order_q.value_or(8)));
        out.push_back(aggregate("ok-shift",
                                "k in {-2..2} " + points_str(default_points(1)) + " through q^" +
                                    std::to_string(order_q.value_or(8)),
                                parts));
    }
    return out;
}

std::string to_string(const VerifyReport& r) {
    std::ostringstream out;
    out << (r.equal ? "[ OK ] " : "[FAIL] ") << r.id << "  " << r.params;
    if (!r.equal) {
        if (r.first_diff_exp8)
            out << "  first discrepancy at q^(" << *r.first_diff_exp8 << "/8)";
        out << "\n       lhs: " << r.lhs_digest << "\n       rhs: " << r.rhs_digest;
    }
    return out.str();
}

}  // namespace bo
