#include "bo/fock.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace bo {

TPoint::TPoint(Rational s_value) : s(std::move(s_value)) {
    if (is_zero(s) || s == 1 || s == -1)
        throw std::domain_error("t-point: s must lie outside {0, 1, -1} (t = s^2 outside {0, 1})");
}

Rational t_eigenvalue_factor(const ChargedPartition& cp, const TPoint& pt) {
    const auto& mu = cp.shape.parts();
    const long c = cp.charge;
    Rational acc(0);
    for (size_t k = 0; k < mu.size(); ++k)
        acc += rational_pow(pt.s, 2 * (mu[k] - static_cast<long>(k + 1) + c) + 1);
    acc += rational_pow(pt.s, 2 * (c - static_cast<long>(mu.size())) + 1) / (pt.t() - 1);
    return acc;
}

Rational t_eigenvalue(const FockState& st, const TPoint& pt) {
    Rational acc(0);
    for (const auto& f : st.factors) acc += t_eigenvalue_factor(f, pt);
    return acc;
}

namespace {

struct SingleState {
    int e8;
    std::vector<Rational> eigs;  // per t-point factor eigenvalue
};

// Single-factor states below the cutoff, grouped by charge, ascending energy.
std::map<int, std::vector<SingleState>> single_catalog(const std::vector<TPoint>& pts, int order8) {
    std::map<int, std::vector<SingleState>> by_charge;
    for (int c = 0; 4 * c * c < order8; c = (c <= 0 ? 1 - c : -c)) {
        auto& list = by_charge[c];
        for (int m = 0; 4 * c * c + 8 * m < order8; ++m) {
            for (const auto& p : partitions_of(m)) {
                SingleState ss{4 * c * c + 8 * m, {}};
                ss.eigs.reserve(pts.size());
                const ChargedPartition cp{c, p};
                for (const auto& pt : pts) ss.eigs.push_back(t_eigenvalue_factor(cp, pt));
                list.push_back(std::move(ss));
            }
        }
    }
    return by_charge;
}

// Weakly decreasing charge vectors with sum of 4c^2 below the cutoff,
// descending lexicographically.
std::vector<std::vector<int>> sector_charges(int level, int order8) {
    int cmax = 0;
    while (4 * (cmax + 1) * (cmax + 1) < order8) ++cmax;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(static_cast<size_t>(level));
    auto rec = [&](auto&& self, int depth, int energy, int max_allowed) -> void {
        if (depth == level) {
            out.push_back(cur);
            return;
        }
        for (int c = max_allowed; c >= -cmax; --c) {
            const int e = energy + 4 * c * c;
            if (e >= order8) continue;
            cur.push_back(c);
            self(self, depth + 1, e, c);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, cmax);
    return out;
}

// q^H-graded sum over the sector with the given charge vector of the product
// of per-point T-eigenvalues.
std::map<int, Rational> sector_sum(const std::vector<int>& charges,
                                   const std::map<int, std::vector<SingleState>>& catalog,
                                   size_t npts, int order8) {
    const int level = static_cast<int>(charges.size());
    std::vector<const std::vector<SingleState>*> lists;
    lists.reserve(charges.size());
    for (int c : charges) lists.push_back(&catalog.at(c));

    std::map<int, Rational> acc;
    // partial[d][j] = sum over the first d chosen factors of their j-th eigenvalue
    std::vector<std::vector<Rational>> partial(static_cast<size_t>(level) + 1,
                                               std::vector<Rational>(npts));
    auto rec = [&](auto&& self, int depth, int energy) -> void {
        for (const SingleState& ss : *lists[static_cast<size_t>(depth)]) {
            const int e = energy + ss.e8;
            if (e >= order8) break;  // lists are sorted by energy
            for (size_t j = 0; j < npts; ++j)
                partial[static_cast<size_t>(depth) + 1][j] =
                    partial[static_cast<size_t>(depth)][j] + ss.eigs[j];
            if (depth + 1 == level) {
                Rational w(1);
                for (size_t j = 0; j < npts; ++j) w *= partial[static_cast<size_t>(level)][j];
                auto [it, fresh] = acc.emplace(e, w);
                if (!fresh) it->second += w;
            } else {
                self(self, depth + 1, e);
            }
        }
    };
    rec(rec, 0, 0);
    return acc;
}

}  // namespace

SymLaurentPoly fock_trace(int level, const std::vector<TPoint>& pts, int order8, int threads) {
    if (level <= 0) throw std::invalid_argument("fock_trace: level must be positive");
    if (order8 <= 0) throw std::invalid_argument("fock_trace: order8 must be positive");

    const auto catalog = single_catalog(pts, order8);
    const auto sectors = sector_charges(level, order8);
    std::vector<std::map<int, Rational>> results(sectors.size());

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(sectors.size())));
    if (workers == 1) {
        for (size_t i = 0; i < sectors.size(); ++i)
            results[i] = sector_sum(sectors[i], catalog, pts.size(), order8);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t i; (i = next.fetch_add(1)) < sectors.size();)
                    results[i] = sector_sum(sectors[i], catalog, pts.size(), order8);
            });
        }
        for (auto& th : pool) th.join();
    }

    SymLaurentPoly out;
    out.level = level;
    for (size_t i = 0; i < sectors.size(); ++i) {
        QSeries qs(std::move(results[i]), order8);
        if (!qs.is_zero()) out.coeffs.emplace(GenPartition(sectors[i]), std::move(qs));
    }
    return out;
}

QSeries oracle_npoint(int level, const GenPartition& la, const std::vector<TPoint>& pts,
                      int order8, int threads) {
    if (la.length() != level)
        throw std::invalid_argument("oracle_npoint: lambda must have one entry per level");
    for (int e : la.entries()) {
        if (4LL * e * e >= order8)
            throw std::domain_error("oracle_npoint: truncation order too small to resolve charge " +
                                    std::to_string(e) + " of lambda " + la.str());
    }
    const auto schur = to_schur_basis(fock_trace(level, pts, order8, threads));
    const auto it = schur.find(la);
    return it == schur.end() ? QSeries::zero(order8) : it->second.truncated(order8);
}

QSeries oracle_level1_charge(int k, const std::vector<TPoint>& pts, int order8) {
    if (order8 <= 0) throw std::invalid_argument("oracle_level1_charge: order8 must be positive");
    std::map<int, Rational> acc;
    for (int m = 0; 4 * k * k + 8 * m < order8; ++m) {
        const int e8 = 4 * k * k + 8 * m;
        for (const auto& p : partitions_of(m)) {
            const ChargedPartition cp{k, p};
            Rational w(1);
            for (const auto& pt : pts) w *= t_eigenvalue_factor(cp, pt);
            auto [it, fresh] = acc.emplace(e8, w);
            if (!fresh) it->second += w;
        }
    }
    return QSeries(std::move(acc), order8);
}

}  // namespace bo
