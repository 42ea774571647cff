#include "bo/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

GenPartition::GenPartition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] > entries_[i - 1])
            throw std::invalid_argument("generalized partition: entries must be weakly decreasing");
    }
}

GenPartition GenPartition::zeros(int length) {
    return GenPartition(std::vector<int>(static_cast<size_t>(length), 0));
}

int GenPartition::size() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

long long GenPartition::sum_of_squares() const {
    long long s = 0;
    for (int e : entries_) s += static_cast<long long>(e) * e;
    return s;
}

int GenPartition::min_entry() const { return entries_.empty() ? 0 : entries_.back(); }
int GenPartition::max_entry() const { return entries_.empty() ? 0 : entries_.front(); }

GenPartition GenPartition::shifted(int r) const {
    std::vector<int> v = entries_;
    for (int& e : v) e += r;
    return GenPartition(std::move(v));
}

std::string GenPartition::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ",";
        out << entries_[i];
    }
    out << ")";
    return out.str();
}

std::vector<int> FockState::charges() const {
    std::vector<int> c;
    c.reserve(factors.size());
    for (const auto& f : factors) c.push_back(f.charge);
    return c;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: d must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(d, d, cur, out);
    return out;
}

namespace {

void gen_partitions_rec(int length, int lo, int hi, int pos, int remaining, int max_allowed,
                        std::vector<int>& cur, std::vector<GenPartition>& out) {
    const int left = length - pos - 1;
    // Entry bounds so that the remaining slots can still reach the target sum.
    const int lo_e = std::max(lo, remaining - left * hi);
    const int hi_e = std::min(max_allowed, remaining - left * lo);
    for (int e = hi_e; e >= lo_e; --e) {
        cur.push_back(e);
        if (left == 0) {
            out.emplace_back(cur);
        } else {
            gen_partitions_rec(length, lo, hi, pos + 1, remaining - e, e, cur, out);
        }
        cur.pop_back();
    }
}

}  // namespace

std::vector<GenPartition> gen_partitions(int length, int size, int lo, int hi) {
    if (length <= 0) throw std::invalid_argument("gen_partitions: length must be positive");
    if (lo > hi) throw std::invalid_argument("gen_partitions: lo must not exceed hi");
    std::vector<GenPartition> out;
    std::vector<int> cur;
    cur.reserve(static_cast<size_t>(length));
    gen_partitions_rec(length, lo, hi, 0, size, hi, cur, out);
    return out;
}

int state_energy8(const FockState& st) {
    int e = 0;
    for (const auto& f : st.factors) e += 8 * f.shape.size() + 4 * f.charge * f.charge;
    return e;
}

std::vector<FockState> enumerate_states(int level, int max_energy8) {
    if (level <= 0) throw std::invalid_argument("enumerate_states: level must be positive");
    if (max_energy8 < 0) throw std::invalid_argument("enumerate_states: maxEnergy8 must be nonnegative");

    // Single-factor states below the bound, as (energy8, label) pairs.
    std::vector<std::pair<int, ChargedPartition>> singles;
    for (int c = 0; 4 * c * c < max_energy8; c = (c <= 0 ? 1 - c : -c)) {
        for (int m = 0; 4 * c * c + 8 * m < max_energy8; ++m) {
            for (const auto& p : partitions_of(m))
                singles.emplace_back(4 * c * c + 8 * m, ChargedPartition{c, p});
        }
    }

    std::vector<FockState> out;
    std::vector<ChargedPartition> cur;
    cur.reserve(static_cast<size_t>(level));
    auto rec = [&](auto&& self, int depth, int energy) -> void {
        if (depth == level) {
            out.push_back(FockState{cur});
            return;
        }
        for (const auto& [e8, cp] : singles) {
            if (energy + e8 >= max_energy8) continue;
            cur.push_back(cp);
            self(self, depth + 1, energy + e8);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);

    std::sort(out.begin(), out.end(), [](const FockState& a, const FockState& b) {
        const int ea = state_energy8(a), eb = state_energy8(b);
        if (ea != eb) return ea < eb;
        const auto ca = a.charges(), cb = b.charges();
        if (ca != cb) return ca < cb;
        return a.factors < b.factors;
    });
    return out;
}

}  // namespace bo
