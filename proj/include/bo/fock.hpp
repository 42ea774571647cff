#pragma once

#include <vector>

#include "bo/partitions.hpp"
#include "bo/qseries.hpp"
#include "bo/symfunc.hpp"

namespace bo {

// Evaluation point of the diagonal generating operator T(t), supplied through
// its exact square root s = t^{1/2} so that every half-integer power of t is
// an integer power of s. Requires s outside {0, 1, -1} (t outside {0, 1}).
struct TPoint {
    Rational s;
    explicit TPoint(Rational s_value);
    Rational t() const { return s * s; }
};

// Eigenvalue of T(t) on a single charged-partition factor: the occupied-mode
// sum plus the geometric tail below the Fermi level, summed in closed form,
//   sum_{k<=K} t^{mu_k - k + 1/2 + c}  +  t^{c - K + 1/2} / (t - 1).
Rational t_eigenvalue_factor(const ChargedPartition& cp, const TPoint& pt);

// Eigenvalue of T(t) on a basis state: the sum over tensor factors.
Rational t_eigenvalue(const FockState& st, const TPoint& pt);

// Trace of z_1^{e_11} ... z_l^{e_ll} q^H T(t_1) ... T(t_n) over the level-l
// Fock space, truncated at the energy cutoff, assembled in monomial
// coordinates. The tensor factors are identical, so the trace is symmetric in
// the z's and the m_mu coordinate equals the coefficient of the ordered
// monomial z^mu; only sectors with weakly decreasing charge vectors are
// summed. Sector sums run on `threads` workers; exact arithmetic makes the
// result independent of the schedule.
SymLaurentPoly fock_trace(int level, const std::vector<TPoint>& pts, int order8, int threads = 1);

// The s_la coordinate of fock_trace: an independent computation of the
// n-point function of the irreducible module labeled by la, exact below
// order8. Every entry of la must stay within the charge range the cutoff can
// resolve.
QSeries oracle_npoint(int level, const GenPartition& la, const std::vector<TPoint>& pts,
                      int order8, int threads = 1);

// Level-1 trace restricted to the charge-k sector.
QSeries oracle_level1_charge(int k, const std::vector<TPoint>& pts, int order8);

}  // namespace bo
