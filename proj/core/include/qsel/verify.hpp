#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsel/laurent.hpp"
#include "qsel/partitions.hpp"

namespace qsel {

// Outcome of checking one identity instance.  Both sides are computed through
// deliberately disjoint pipelines and compared coefficient-by-coefficient up
// to the common truncation; pass is an exact yes/no, never a tolerance.
struct VerifyReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> params;
    int trunc_twice = 0;
    Laurent lhs, rhs, diff;
    bool pass = false;
    long long elapsed_ms = 0;
};

// Integral of the multi-page product integrand (partition-sum pipeline)
// against the closed form assembled from the major-index generating function
// of the staircase poset.  guard bounds the poset size handed to the
// enumeration engine.
VerifyReport verify_qko(int n, const Composition& rvec,
                        const Composition& svec, int K, int guard = 25);

// Same integral by lattice brute force against the Schur-sum closed form
// built from principal specializations.
VerifyReport verify_schur_form(int n, const Composition& rvec,
                               const Composition& svec, int K);

// One-page integrand with the pair differences raised to an arbitrary power,
// against its Schur-sum closed form.
VerifyReport verify_qselberg_single(int n, int r, int s, int mpow, int K);

// Order-reversing-map generating function of the staircase poset against the
// closed product-times-Schur-sum form.
VerifyReport verify_ppar(int n, const Composition& rvec,
                         const Composition& svec, int K);

// Profile-restricted version on a single page with s = 0; mu is the required
// diagonal reading.
VerifyReport verify_ppar_profile(int l, int r, const Partition& mu, int K);

// The three closed product evaluations of the one-page integral
// (which = 1: s = 0, plain differences; 2: s = 1, plain differences;
//  3: squared differences, general s).
VerifyReport verify_eval(int which, int n, int r, int s, int K);

// The four squared-difference variants with extra cross factors; compared on
// the t-grid (half-integer exponents appear for even s).
VerifyReport verify_variant(int which, int n, int r, int s, int K);

// Two-block integral with the rational cross factor.
VerifyReport verify_rational(int n, int m, int l, int r, int s, int K);

// Cauchy-type character sums at geometric specializations.  which is one of
// "c", "b", "bs", "d", "ds" (N-point character against an n-variable Schur
// sum) or "rat" (two Schur blocks of sizes n and m against the rational
// character).  Identity ids come out as "cauchy-<which>".
VerifyReport verify_cauchy_classical(const std::string& which, int N, int n,
                                     int m, int K);

// Generic building blocks behind verify_cauchy_classical, exposed so tests
// can drive arbitrary point lists.
VerifyReport verify_cauchy_points(const std::string& kind,
                                  const std::vector<int>& x_tw,
                                  const std::vector<int>& u_tw, int K);
VerifyReport verify_cauchy_rational_points(const std::vector<int>& x_tw,
                                           const std::vector<int>& u_tw,
                                           const std::vector<int>& v_tw,
                                           int K);

// A rectangular parameter grid over a list of identities.  Composition-shaped
// identities range over all pairs of compositions with the given number of
// blocks and entry bound, filtered by the poset-size guard; scalar families
// range over the same entry bound.
struct GridSpec {
    std::vector<std::string> identities;
    std::vector<int> ns = {1, 2};
    std::vector<int> blocks = {1, 2};
    int max_entry = 2;
    int max_size = 25; // poset-size guard for enumeration-backed identities
    int K = 20;
};

GridSpec grid_from_json(const std::string& text);

// Expand the grid and verify every instance, jobs at a time; the report order
// is deterministic (identity list order, then parameter order).
std::vector<VerifyReport> run_grid(const GridSpec& spec, int jobs = 1);

// Serialization.  A series is {"coeffs": [[twice_exponent, "p/q"], ...]}
// sorted by exponent, plus "trunc_twice" when truncated; reports and report
// arrays nest that.
std::string series_to_json(const Laurent& a);
Laurent series_from_json(const std::string& text);
std::string report_to_json(const VerifyReport& r);
std::string reports_to_json(const std::vector<VerifyReport>& rs);

} // namespace qsel
