#pragma once

#include "qsel/laurent.hpp"
#include "qsel/partitions.hpp"

namespace qsel {

// Irreducible classical-group characters evaluated at q-power points
// x_i = q^{a_i} (points passed as twice-exponents, the t-grid).  Each value is
// a ratio of determinants in x_i^{+-p_j}; the exponents p_j are integers or
// half-integers depending on the kind, so the determinants are computed on a
// quarter grid (u-exponent = 2 * t-exponent) and the exact quotient is halved
// back, asserting it lands on the t-grid.
enum class CharKind { C, B, D, Bspin, Dspin };

// kind C:     p_j = lambda_j + N - j + 1,   rows x^p - x^{-p}
// kind B:     p_j = lambda_j + N - j + 1/2, rows x^p - x^{-p}
// kind D:     p_j = lambda_j + N - j,       rows x^p + x^{-p},
//             denominator halved exactly when lambda_N > 0
// kind Bspin: numerator of C over denominator of B
// kind Dspin: p_j = lambda_j + N - j + 1/2, rows x^p + x^{-p},
//             denominator always halved
Laurent char_at(CharKind kind, const Partition& lambda, const std::vector<int>& pts_tw);

// Rational GL character s_Lambda with Lambda = (lambda, 0...0, -reverse(mu)),
// a bialternant with possibly negative column exponents.
Laurent gl_rational_at(const Partition& lambda, const Partition& mu,
                       const std::vector<int>& pts_tw);

} // namespace qsel
