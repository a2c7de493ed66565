#pragma once

#include <functional>
#include <vector>

#include "qsel/laurent.hpp"
#include "qsel/partitions.hpp"

namespace qsel {

// An integrand evaluable exactly at points whose coordinates are q-powers.
// Coordinates are passed as twice-exponents (t-grid), one vector per variable
// block; one-block integrands ignore the second vector.  Every built-in
// family is polynomial in the variables with nonnegative powers, so values
// are honest polynomials with valuation >= 0 -- that bound is what makes the
// truncated Jackson sums below sound.
struct Integrand {
    int nx = 0;               // arity of the first variable block
    int ny = 0;               // arity of the second block (0 if one block)
    bool symmetric = false;   // invariant under permutations within a block
    bool vanishing = false;   // zero when two coordinates of a block coincide
    std::function<Laurent(const std::vector<int>&, const std::vector<int>&)>
        eval;

    Laurent operator()(const std::vector<int>& x_tw,
                       const std::vector<int>& y_tw = {}) const {
        return eval(x_tw, y_tw);
    }
};

// prod_k [ prod_i x_i^{r_k} (q x_i; q)_{s_k}  prod_{i<j} |x_j - x_i| ].
Integrand integrand_qko(int n, const Composition& rvec,
                        const Composition& svec);

// prod_i x_i^r (q x_i; q)_s  prod_{i<j} |x_j - x_i|^mpow.
Integrand integrand_single(int n, int r, int s, int mpow);

// The four one-block variants with squared differences:
//   1: extra cross factor prod_{i<j} (1 - q^{s+1} x_i x_j)
//   2: variant 1 times prod_i (1 + q^{(s+1)/2} x_i)
//   3: variant 1 times prod_i (1 - q^{(s+1)/2} x_i)
//   4: cross factor over i <= j (diagonal included)
// Half-integer exponents land on the t-grid, so both parities of s are fine.
Integrand integrand_variant(int which, int n, int r, int s);

// Two blocks x_1..x_n, y_1..y_m:
//   prod_i x_i^r (q x_i; q)_l  prod_j y_j^s (q y_j; q)_l
//   prod_{i,j} (1 - q^{l+1} x_i y_j)  prod_{i<j} |x_j-x_i|^2 |y_j-y_i|^2.
Integrand integrand_rational(int n, int m, int l, int r, int s);

// (1-q)^n sum over k in N^n with sum(k) <= K of f(q^{k_1},...) q^{sum k},
// truncated at q^{K+1}.  Sound because every term's valuation is >= sum(k).
Laurent jackson_bruteforce(const Integrand& f, int n, int K);

// n! (1-q)^n sum over partitions with at most n parts and |lambda| <= K of
// q^{|lambda| + C(n,2)} f at the frame points q^{lambda_i + n - i}.  Equals
// the brute-force sum for symmetric integrands vanishing on diagonals; both
// declarations are spot-checked at random points (contract_violation).
Laurent jackson_partition_sum(const Integrand& f, int n, int K);

// Two-block analogue: n! m! (1-q)^{n+m} sum over pairs (lambda, mu) of
// q^{|lambda|+|mu|+C(n,2)+C(m,2)} g at the two frames.
Laurent jackson_two_block(const Integrand& g, int n, int m, int K);

// (n+m)-dimensional lattice brute force for two-block integrands; the oracle
// for jackson_two_block.
Laurent jackson_bruteforce2(const Integrand& g, int n, int m, int K);

} // namespace qsel
