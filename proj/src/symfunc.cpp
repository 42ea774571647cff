#include "bo/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bo {

void SymLaurentPoly::add(const GenPartition& mu, const QSeries& c) {
    auto [it, fresh] = coeffs.emplace(mu, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    } else if (c.is_zero()) {
        coeffs.erase(it);
    }
}

std::optional<std::pair<int, GenPartition>> SymLaurentPoly::first_difference(
    const SymLaurentPoly& o, int bound8) const {
    std::optional<std::pair<int, GenPartition>> best;
    auto consider = [&](const GenPartition& key, const QSeries& a, const QSeries& b) {
        if (auto d = a.first_difference(b, bound8)) {
            if (!best || *d < best->first) best = {{*d, key}};
        }
    };
    const QSeries nothing(bound8);
    for (const auto& [key, a] : coeffs) {
        auto it = o.coeffs.find(key);
        consider(key, a, it == o.coeffs.end() ? nothing : it->second);
    }
    for (const auto& [key, b] : o.coeffs) {
        if (!coeffs.count(key)) consider(key, nothing, b);
    }
    return best;
}

bool SymLaurentPoly::equal_below(const SymLaurentPoly& o, int bound8) const {
    return !first_difference(o, bound8).has_value();
}

namespace {

// Number of Gelfand-Tsetlin patterns with top row `shape` and row sums given
// by `content`: entries equal to the largest letter are peeled off as a
// horizontal strip, i.e. an interlacing row nu with |shape| - |nu| = content.back().
long long ssyt_count(const std::vector<int>& shape, const std::vector<int>& content) {
    const size_t m = shape.size();
    if (m == 0) return 1;
    if (m == 1) return shape[0] == content[0] ? 1 : 0;
    const int strip = content.back();
    if (strip < 0) return 0;
    const int shape_sum = std::accumulate(shape.begin(), shape.end(), 0);
    const std::vector<int> rest(content.begin(), content.end() - 1);

    long long total = 0;
    std::vector<int> nu(m - 1);
    auto rec = [&](auto&& self, size_t idx, int sum) -> void {
        if (idx == m - 1) {
            if (shape_sum - sum == strip) total += ssyt_count(nu, rest);
            return;
        }
        for (int v = shape[idx]; v >= shape[idx + 1]; --v) {
            nu[idx] = v;
            self(self, idx + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
    return total;
}

}  // namespace

long long kostka_number(const GenPartition& la, const GenPartition& mu) {
    if (la.length() != mu.length())
        throw std::invalid_argument("kostka_number: partitions must have equal length");
    if (la.size() != mu.size()) return 0;
    const int shift = std::max(0, -std::min(la.min_entry(), mu.min_entry()));
    std::vector<int> shape, content;
    shape.reserve(la.entries().size());
    content.reserve(mu.entries().size());
    for (int e : la.entries()) shape.push_back(e + shift);
    for (int e : mu.entries()) content.push_back(e + shift);
    return ssyt_count(shape, content);
}

std::optional<int> KostkaTable::find(const GenPartition& p) const {
    auto it = std::lower_bound(index.begin(), index.end(), p,
                               [](const GenPartition& a, const GenPartition& b) { return b < a; });
    if (it == index.end() || *it != p) return std::nullopt;
    return static_cast<int>(it - index.begin());
}

long long KostkaTable::inverse_kostka(const GenPartition& mu, const GenPartition& la) const {
    const auto i = find(mu);
    const auto j = find(la);
    if (!i || !j)
        throw std::out_of_range("kostka_table: partition outside table bounds (widen [lo, hi])");
    return kinv[static_cast<size_t>(*i)][static_cast<size_t>(*j)];
}

KostkaTable kostka_table(int size_d, int level, int lo, int hi) {
    KostkaTable t;
    t.size_d = size_d;
    t.level = level;
    t.lo = lo;
    t.hi = hi;
    t.index = gen_partitions(level, size_d, lo, hi);
    if (t.index.empty()) throw std::domain_error("kostka_table: empty index set");

    const size_t n = t.index.size();
    t.k.assign(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) t.k[i][j] = kostka_number(t.index[i], t.index[j]);
        if (t.k[i][i] != 1) throw std::logic_error("kostka_table: diagonal entry is not 1");
        for (size_t j = 0; j < i; ++j) {
            if (t.k[i][j] != 0) throw std::logic_error("kostka_table: matrix is not unitriangular");
        }
    }

    // Back-substitution on the unitriangular system.
    t.kinv.assign(n, std::vector<long long>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        t.kinv[j][j] = 1;
        for (size_t i = j; i-- > 0;) {
            long long s = 0;
            for (size_t m = i + 1; m <= j; ++m) s += t.k[i][m] * t.kinv[m][j];
            t.kinv[i][j] = -s;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            long long s = 0;
            for (size_t m = 0; m < n; ++m) s += t.k[i][m] * t.kinv[m][j];
            if (s != (i == j ? 1 : 0)) throw std::logic_error("kostka_table: K * Kinv != I");
        }
    }
    return t;
}

SymLaurentPoly schur_in_monomials(const GenPartition& la, int order8) {
    SymLaurentPoly p;
    p.level = la.length();
    for (const auto& mu : gen_partitions(la.length(), la.size(), la.min_entry(), la.max_entry())) {
        const long long kk = kostka_number(la, mu);
        if (kk != 0) p.coeffs.emplace(mu, QSeries::monomial(0, Rational(static_cast<long>(kk)), order8));
    }
    return p;
}

std::map<GenPartition, QSeries> to_schur_basis(const SymLaurentPoly& f) {
    std::map<GenPartition, QSeries> out;
    std::map<int, std::vector<const std::pair<const GenPartition, QSeries>*>> by_size;
    for (const auto& entry : f.coeffs) by_size[entry.first.size()].push_back(&entry);

    for (const auto& [d, entries] : by_size) {
        int lo = entries.front()->first.min_entry();
        int hi = entries.front()->first.max_entry();
        for (const auto* e : entries) {
            lo = std::min(lo, e->first.min_entry());
            hi = std::max(hi, e->first.max_entry());
        }
        // Every Schur term of an m_mu in this range stays inside [lo, hi], so
        // the bounded table inverts exactly.
        const KostkaTable table = kostka_table(d, f.level, lo, hi);
        for (const auto* e : entries) {
            const int row = *table.find(e->first);
            for (size_t j = static_cast<size_t>(row); j < table.index.size(); ++j) {
                const long long c = table.kinv[static_cast<size_t>(row)][j];
                if (c == 0) continue;
                auto [it, fresh] = out.emplace(table.index[j], e->second.scaled(Rational(static_cast<long>(c))));
                if (!fresh) it->second += e->second.scaled(Rational(static_cast<long>(c)));
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace bo
