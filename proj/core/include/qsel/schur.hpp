#pragma once

#include "qsel/laurent.hpp"
#include "qsel/partitions.hpp"

namespace qsel {

// Evaluation points are geometric, point i = q^{a_i}, passed as twice-
// exponents (t-grid): pts[i] = 2*a_i for integral a_i, odd values for
// half-integer exponents.

// Determinant of a square matrix of exact Laurent polynomials: Leibniz
// expansion up to 6x6, fraction-free (Bareiss) elimination with exact
// divisions above.
Laurent det(const std::vector<std::vector<Laurent>>& m);

// s_lambda(q^{a_1}, ..., q^{a_N}) by the bialternant formula: the generalized
// Vandermonde determinant det(x_i^{lambda_j + N - j}) divided exactly by
// prod_{i<j} (x_i - x_j).  Points must be pairwise distinct.
Laurent schur_at(const Partition& lambda, const std::vector<int>& pts_tw);

// Independent oracle: sum over semistandard tableaux of shape lambda with
// entries in [N], weighting entry k by the k-th point.  Exponential; guarded
// to |lambda| <= 8, N <= 5.
Laurent schur_ssyt_oracle(const Partition& lambda, const std::vector<int>& pts_tw);

// s_lambda(1, q, ..., q^{n+s-1}) via the closed product
//   q^{-C(n,3)} / prod_{h=s}^{n+s-1} (q;q)_h
//   * prod_i (q^{lambda_i+n-i+1}; q)_s * prod_{i<j} (q^{lambda_j+n-j} - q^{lambda_i+n-i}),
// with the division performed exactly.
Laurent principal_spec(const Partition& lambda, int n, int s);

// 1 / (prod_i (1 - x_i) prod_{i<j} (1 - x_i x_j)) and 1 / prod (1 - x_i u_j)
// as truncated series; every denominator factor must have positive valuation
// (all point exponents > 0), else non_convergent.
Laurent littlewood_rhs(const std::vector<int>& pts_tw, int prec);
Laurent cauchy_rhs(const std::vector<int>& ptsx_tw, const std::vector<int>& ptsu_tw,
                   int prec);

} // namespace qsel
