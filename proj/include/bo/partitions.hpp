#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bo {

// Ordinary partition: weakly decreasing, strictly positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Generalized partition: weakly decreasing integer tuple of fixed length,
// entries of any sign.
class GenPartition {
public:
    GenPartition() = default;
    explicit GenPartition(std::vector<int> entries);
    static GenPartition zeros(int length);

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    int entry(int i) const { return entries_[static_cast<size_t>(i)]; }
    int size() const;              // |lambda| = sum of entries
    long long sum_of_squares() const;
    int min_entry() const;         // last entry (0 for the empty tuple)
    int max_entry() const;         // first entry (0 for the empty tuple)
    GenPartition shifted(int r) const;  // add r to every entry
    std::string str() const;       // "(2,0,-1)"

    friend auto operator<=>(const GenPartition&, const GenPartition&) = default;

private:
    std::vector<int> entries_;
};

// One free-fermion pair sector label: a charge and a partition.
struct ChargedPartition {
    int charge = 0;
    Partition shape;
    friend auto operator<=>(const ChargedPartition&, const ChargedPartition&) = default;
};

// Basis vector of the level-l Fock space: one charged partition per factor.
struct FockState {
    std::vector<ChargedPartition> factors;
    int level() const { return static_cast<int>(factors.size()); }
    std::vector<int> charges() const;
    friend auto operator<=>(const FockState&, const FockState&) = default;
};

// All partitions of d, each once, in descending lexicographic order.
std::vector<Partition> partitions_of(int d);

// All weakly decreasing integer tuples of the given length with entries in
// [lo, hi] and entry sum equal to size, in descending lexicographic order.
std::vector<GenPartition> gen_partitions(int length, int size, int lo, int hi);

// Eigenvalue of the energy operator in q^{1/8} units: 8 * sum_i (|mu_i| + c_i^2/2).
// Always a multiple of 4.
int state_energy8(const FockState& st);

// Every basis state with state_energy8 < max_energy8, sorted by
// (energy, charge vector, partition tuple).
std::vector<FockState> enumerate_states(int level, int max_energy8);

}  // namespace bo
