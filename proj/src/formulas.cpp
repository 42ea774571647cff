#include "bo/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bo {

Rational product_t(const std::vector<TPoint>& pts) {
    Rational p(1);
    for (const auto& pt : pts) p *= pt.t();
    return p;
}

void require_valid_subset_products(const std::vector<TPoint>& pts) {
    const unsigned n = static_cast<unsigned>(pts.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Rational prod(1);
        for (unsigned i = 0; i < n; ++i) {
            if (mask & (1u << i)) prod *= pts[i].t();
        }
        if (prod == 1) {
            std::ostringstream msg;
            msg << "subset product of t equals 1: {";
            bool first = true;
            for (unsigned i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) continue;
                if (!first) msg << ", ";
                msg << "t_" << (i + 1) << " = " << to_string(pts[i].t());
                first = false;
            }
            msg << "}";
            throw std::domain_error(msg.str());
        }
    }
}

namespace {

constexpr int factorial(int k) {
    int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Division-free determinant by Laplace expansion with memoization over column
// subsets; absent entries are the structural zeros of the 1/(-k)! convention.
QSeries determinant(const std::vector<std::vector<std::optional<QSeries>>>& a, int order8) {
    const int n = static_cast<int>(a.size());
    std::vector<std::optional<std::optional<QSeries>>> memo(1u << n);
    auto minor_det = [&](auto&& self, unsigned mask) -> const std::optional<QSeries>& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        const int row = __builtin_popcount(mask) - 1;
        std::optional<QSeries> acc;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const bool negate = (row + pos) % 2 != 0;
            ++pos;
            const auto& entry = a[static_cast<size_t>(row)][static_cast<size_t>(j)];
            if (!entry) continue;
            std::optional<QSeries> term;
            if (row == 0) {
                term = *entry;
            } else {
                const auto& sub = self(self, mask & ~(1u << j));
                if (!sub) continue;
                term = *entry * *sub;
            }
            if (negate) term = -*term;
            if (acc) {
                *acc += *term;
            } else {
                acc = std::move(*term);
            }
        }
        slot = std::move(acc);
        return *slot;
    };
    const auto& full = minor_det(minor_det, (1u << n) - 1);
    return full ? *full : QSeries::zero(order8);
}

}  // namespace

QSeries theta_det_sum(const std::vector<TPoint>& pts, int order8) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) return QSeries::one(order8);
    require_valid_subset_products(pts);

    std::map<std::pair<int, std::string>, QSeries> theta_cache;
    auto theta = [&](int k, const Rational& s) -> const QSeries& {
        auto key = std::make_pair(k, to_string(s));
        auto it = theta_cache.find(key);
        if (it == theta_cache.end())
            it = theta_cache.emplace(std::move(key), theta_deriv(k, s, order8)).first;
        return it->second;
    };
    std::map<std::string, QSeries> inv_cache;
    auto theta_inverse = [&](const Rational& s) -> const QSeries& {
        auto key = to_string(s);
        auto it = inv_cache.find(key);
        if (it == inv_cache.end()) it = inv_cache.emplace(std::move(key), theta(0, s).inverse()).first;
        return it->second;
    };

    std::optional<QSeries> sum;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // prefix[m] = s-value of t_{sigma(1)} ... t_{sigma(m)}
        std::vector<Rational> prefix(static_cast<size_t>(n) + 1);
        prefix[0] = 1;
        for (int m = 1; m <= n; ++m)
            prefix[static_cast<size_t>(m)] =
                prefix[static_cast<size_t>(m - 1)] * pts[static_cast<size_t>(perm[static_cast<size_t>(m - 1)])].s;

        std::vector<std::vector<std::optional<QSeries>>> mat(
            static_cast<size_t>(n), std::vector<std::optional<QSeries>>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int k = j - i + 1;
                if (k < 0) continue;  // 1/(-k)! = 0
                const QSeries& th = theta(k, prefix[static_cast<size_t>(n - 1 - j)]);
                mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    th.scaled(make_rational(1, factorial(k)));
            }
        }
        QSeries term = determinant(mat, order8);
        for (int m = 1; m <= n; ++m) term = term * theta_inverse(prefix[static_cast<size_t>(m)]);
        if (sum) {
            *sum += term;
        } else {
            sum = std::move(term);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *sum;
}

QSeries bo_npoint(const std::vector<TPoint>& pts, int order8) {
    if (order8 <= 0) throw std::invalid_argument("bo_npoint: order8 must be positive");
    if (pts.empty()) return euler_phi(order8).inverse();
    const int w8 = order8 + 8 * (static_cast<int>(pts.size()) + 2);
    const QSeries out = theta_det_sum(pts, w8) * euler_phi(w8).inverse();
    for (const auto& [e, c] : out.terms()) {
        if (e % 8 != 0)
            throw std::logic_error("bo_npoint: non-integer q-exponent survived theta cancellation");
    }
    return out.truncated(order8);
}

QSeries qdim_numerator(int level, const GenPartition& la, int order8) {
    if (la.length() != level)
        throw std::invalid_argument("qdim_numerator: lambda must have one entry per level");
    QSeries acc = QSeries::one(order8);
    for (int i = 0; i < level; ++i) {
        for (int j = i + 1; j < level; ++j) {
            const int e = la.entry(i) - la.entry(j) + j - i;  // always >= 1
            std::map<int, Rational> f{{0, Rational(1)}, {8 * e, Rational(-1)}};
            acc = acc * QSeries(std::move(f), order8);
        }
    }
    return acc.shifted(static_cast<int>(4 * la.sum_of_squares()));
}

QSeries qdim(int level, const GenPartition& la, int order8) {
    return (qdim_numerator(level, la, order8) * euler_phi(order8).inverse().pow(level))
        .truncated(order8);
}

QSeries npoint_theta(int level, const GenPartition& la, const std::vector<TPoint>& pts, int order8) {
    if (level <= 0) throw std::invalid_argument("npoint_theta: level must be positive");
    if (la.length() != level)
        throw std::invalid_argument("npoint_theta: lambda must have one entry per level");
    if (order8 <= 0) throw std::invalid_argument("npoint_theta: order8 must be positive");
    const int w8 = order8 + 8 * (static_cast<int>(pts.size()) + 2);
    const QSeries dsum = theta_det_sum(pts, w8);
    const QSeries body = dsum.pow(level) * euler_phi(w8).inverse().pow(level);
    const QSeries out = qdim_numerator(level, la, w8) * body;
    return out.scaled(rational_pow(product_t(pts), la.size())).truncated(order8);
}

QSeries inverse_kostka_qsum(int level, const GenPartition& la, int order8) {
    if (la.length() != level)
        throw std::invalid_argument("inverse_kostka_qsum: lambda must have one entry per level");
    int b = 0;
    while (4 * (b + 1) * (b + 1) < order8) ++b;
    const int lo = std::min(-b, la.min_entry());
    const int hi = std::max(b, la.max_entry());
    const KostkaTable table = kostka_table(la.size(), level, lo, hi);
    QSeries sum = QSeries::zero(order8);
    for (const auto& mu : table.index) {
        const long long e8 = 4 * mu.sum_of_squares();
        if (e8 >= order8) continue;
        const long long c = table.inverse_kostka(mu, la);
        if (c != 0) sum += QSeries::monomial(static_cast<int>(e8), Rational(static_cast<long>(c)), order8);
    }
    return sum;
}

QSeries npoint_kostka(int level, const GenPartition& la, const std::vector<TPoint>& pts, int order8) {
    if (level <= 0) throw std::invalid_argument("npoint_kostka: level must be positive");
    if (la.length() != level)
        throw std::invalid_argument("npoint_kostka: lambda must have one entry per level");
    const QSeries f = bo_npoint(pts, order8);
    const QSeries out = f.pow(level) * inverse_kostka_qsum(level, la, order8);
    return out.scaled(rational_pow(product_t(pts), la.size())).truncated(order8);
}

SymLaurentPoly npoint_charge_family(const std::vector<TPoint>& pts, int order8) {
    const QSeries f = bo_npoint(pts, order8);
    const Rational tprod = product_t(pts);
    SymLaurentPoly out;
    out.level = 1;
    for (int k = 0; 4 * k * k < order8; k = (k <= 0 ? 1 - k : -k)) {
        const QSeries c =
            f.shifted(4 * k * k).scaled(rational_pow(tprod, k)).truncated(order8);
        if (!c.is_zero()) out.coeffs.emplace(GenPartition({k}), c);
    }
    return out;
}

}  // namespace bo
