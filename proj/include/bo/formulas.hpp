#pragma once

#include <vector>

#include "bo/fock.hpp"
#include "bo/partitions.hpp"
#include "bo/qseries.hpp"
#include "bo/symfunc.hpp"

namespace bo {

// Product of the t-values of all points.
Rational product_t(const std::vector<TPoint>& pts);

// The closed formulas divide by Theta at every nonempty subset product of the
// t's, so those products must avoid 1. Throws naming the offending subset.
void require_valid_subset_products(const std::vector<TPoint>& pts);

// The permutation sum of theta-determinant quotients
//   sum_{sigma in S_n} det(Theta^{(j-i+1)}(t_{sigma(1)}..t_{sigma(n-j)}) / (j-i+1)!)
//                      / prod_{m=1..n} Theta(t_{sigma(1)}..t_{sigma(m)}),
// with 1/(-k)! = 0 killing the entries below the subdiagonal. Equals
// phi(q) * F_BO. Thetas are evaluated at the given working order; the result
// carries whatever order the quotients guarantee.
QSeries theta_det_sum(const std::vector<TPoint>& pts, int order8);

// Level-1 charge-0 n-point function F_BO = theta_det_sum / phi(q). All
// q-exponents are integers; n theta factors of q^{1/8} in the numerator
// cancel against n in the denominator, asserted at runtime. For n = 0 this is
// 1/phi(q), the vacuum q-dimension.
QSeries bo_npoint(const std::vector<TPoint>& pts, int order8);

// q^{la^2/2} prod_{i<j} (1 - q^{la_i - la_j + j - i}).
QSeries qdim_numerator(int level, const GenPartition& la, int order8);

// Graded dimension of the level-l irreducible module labeled by la:
// qdim_numerator / phi(q)^l.
QSeries qdim(int level, const GenPartition& la, int order8);

// Level-l n-point function from the theta-determinant closed formula:
//   q^{la^2/2} (t_1..t_n)^{|la|} prod_{i<j}(1 - q^{la_i-la_j+j-i}) / phi^l
//   * theta_det_sum^l.
QSeries npoint_theta(int level, const GenPartition& la, const std::vector<TPoint>& pts, int order8);

// The finite inverse-Kostka q-sum sum_mu q^{mu^2/2} K^{(-1)}_{mu la} over
// generalized partitions of size |la| whose q^{mu^2/2} survives the
// truncation (entry bound |mu_i| <= sqrt(order8/4)).
QSeries inverse_kostka_qsum(int level, const GenPartition& la, int order8);

// Level-l n-point function from the inverse-Kostka formula:
//   (t_1..t_n)^{|la|} F_BO^l * inverse_kostka_qsum.
QSeries npoint_kostka(int level, const GenPartition& la, const std::vector<TPoint>& pts, int order8);

// The z-weighted level-1 trace as a Laurent polynomial in one variable z:
// coefficient of z^k is q^{k^2/2} (t_1..t_n)^k F_BO.
SymLaurentPoly npoint_charge_family(const std::vector<TPoint>& pts, int order8);

}  // namespace bo
