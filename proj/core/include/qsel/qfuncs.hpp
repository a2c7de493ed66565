#pragma once

#include "qsel/laurent.hpp"

namespace qsel {

// The standard q-gadgets, all exact polynomials on the t-grid (q = t^2).

// (x; q)_s = prod_{i=0}^{s-1} (1 - q^i x).
Laurent pochhammer(const Laurent& x, int s);

// [x]_q = (1 - q^x)/(1 - q) for a positive q-exponent given in halves (tw =
// 2x).  Even tw gives the classical q-integer 1 + q + ... + q^{x-1}.  Odd tw
// is returned as the geometric sum in t, 1 + t + ... + t^{tw-1}; the genuinely
// rational object (1 - t^tw)/(1 - t^2) is handled by RationalSeries where
// identities need it.  Throws non_divisible for tw <= 0.
Laurent q_int(int tw);

// [n]_q! = prod_{i=1}^{n} [i]_q.
Laurent q_factorial(int n);

// f_q(l) = prod_{i=1}^{l-1} [i]_q!  (empty product for l <= 1).
Laurent f_q(int l);

// |q^a - q^b| at exact q-power points: the sign is chosen so the lower
// exponent enters positively, q^min (1 - q^{|a-b|}), which is the correct
// absolute value for all 0 < q < 1.  Arguments are twice-exponents.
Laurent abs_diff(int tw_a, int tw_b);

} // namespace qsel
