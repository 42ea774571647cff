#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bo/partitions.hpp"
#include "bo/qseries.hpp"

namespace bo {

// Symmetric Laurent polynomial in z_1..z_level, stored in the monomial basis:
// f = sum_mu coeffs[mu] * m_mu, with q-series coefficients. No zero values
// are stored.
struct SymLaurentPoly {
    int level = 0;
    std::map<GenPartition, QSeries> coeffs;

    void add(const GenPartition& mu, const QSeries& c);
    bool equal_below(const SymLaurentPoly& o, int bound8) const;
    // First (exponent, key) discrepancy below bound8, smallest exponent first.
    std::optional<std::pair<int, GenPartition>> first_difference(const SymLaurentPoly& o,
                                                                 int bound8) const;
};

// Number of semistandard tableaux of shape la and weight mu, entries in
// {1..length}; generalized partitions are shifted to nonnegative entries
// first (the count is shift-invariant). Zero when the sizes differ.
long long kostka_number(const GenPartition& la, const GenPartition& mu);

// Kostka matrix and its exact inverse on the set of generalized partitions of
// fixed size with entries in [lo, hi]. The index is sorted descending
// lexicographically, which refines dominance, so k is unitriangular.
struct KostkaTable {
    int size_d = 0;
    int level = 0;
    int lo = 0, hi = 0;
    std::vector<GenPartition> index;
    std::vector<std::vector<long long>> k;
    std::vector<std::vector<long long>> kinv;

    std::optional<int> find(const GenPartition& p) const;
    // K^{(-1)}_{mu la}: the coefficient of s_la in the monomial m_mu.
    long long inverse_kostka(const GenPartition& mu, const GenPartition& la) const;
};

KostkaTable kostka_table(int size_d, int level, int lo, int hi);

// Monomial expansion of the Schur Laurent polynomial s_la, coefficients as
// constant series at the given truncation.
SymLaurentPoly schur_in_monomials(const GenPartition& la, int order8);

// Coordinates of f in the Schur basis, computed per size class through the
// inverse Kostka matrix on the entry range spanned by f's support.
std::map<GenPartition, QSeries> to_schur_basis(const SymLaurentPoly& f);

}  // namespace bo
