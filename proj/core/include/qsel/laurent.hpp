#pragma once

#include <gmpxx.h>

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsel/errors.hpp"

namespace qsel {

// All exponents live on the "t-grid": the series variable is t with q = t^2,
// so an exponent of q is stored as an integer count of halves (its "twice"
// value).  q^{1/2} has twice-exponent 1, q^3 has twice-exponent 6.  This keeps
// half-integer powers of q on an integer grid without a second ring.
//
// A Laurent value is a sparse exponent -> rational map plus an optional
// truncation bound tr: coefficients at exponents >= tr are unknown (dropped).
// tr == no_trunc means the value is an exact Laurent polynomial.
//
// Values are immutable after construction in spirit: all operations return
// fresh values, so sharing across threads read-only is safe.
class Laurent {
public:
    static constexpr int no_trunc = std::numeric_limits<int>::max();

    Laurent() : tr_(no_trunc) {}

    static Laurent zero(int tr = no_trunc) {
        Laurent z;
        z.tr_ = tr;
        return z;
    }
    static Laurent one() { return mono(0); }
    static Laurent mono(int tw, mpq_class coeff = 1) {
        Laurent m;
        if (coeff != 0) m.c_[tw] = std::move(coeff);
        return m;
    }

    bool is_zero() const { return c_.empty(); }
    bool truncated() const { return tr_ != no_trunc; }
    int trunc() const { return tr_; }

    // Valuation in the truncation algebra: the minimum stored exponent for a
    // nonzero value; for a value that is zero *as far as we know*, the
    // truncation bound itself (an exact zero has effective valuation +inf,
    // reported as no_trunc).  This is exactly the bound used when tightening
    // truncations under multiplication.
    int val() const { return c_.empty() ? tr_ : c_.begin()->first; }

    // Largest stored exponent; only meaningful for nonzero values.
    int deg() const {
        if (c_.empty()) throw error("deg() of zero");
        return c_.rbegin()->first;
    }

    // Structural equality: same coefficients and same truncation bound.  For
    // comparisons up to a precision use eq_mod.
    bool operator==(const Laurent& o) const { return tr_ == o.tr_ && c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    mpq_class coeff(int tw) const {
        auto it = c_.find(tw);
        return it == c_.end() ? mpq_class(0) : it->second;
    }

    const std::map<int, mpq_class>& terms() const { return c_; }

    Laurent operator-() const;
    Laurent operator+(const Laurent& b) const;
    Laurent operator-(const Laurent& b) const;
    Laurent operator*(const Laurent& b) const;

    Laurent smul(const mpq_class& k) const;

    // Multiply by t^k (shifts every exponent, and the truncation bound).
    Laurent shift(int k) const;

    // Forget all coefficients at exponents >= tr and record the bound
    // (combined with any existing, tighter bound).
    Laurent truncate(int tr) const;

    // True iff the two values agree at every exponent < prec.  Throws
    // insufficient_precision if either side's truncation bound is below prec:
    // a comparison that silently used fewer digits than asked would be the
    // worst failure mode of a zero-tolerance harness.
    bool eq_mod(const Laurent& b, int prec) const;

    // Sum of coefficients, i.e. evaluation at t = 1 (so also q = 1).  Only
    // legal for exact polynomials.
    mpq_class eval_at_one() const;

    // Human form in q, e.g. "1 + 2*q + q^3" or "q^(3/2) - q^(-1)".
    std::string to_q_string() const;

private:
    std::map<int, mpq_class> c_;
    int tr_;

    void strip_() {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->second == 0 || (tr_ != no_trunc && it->first >= tr_))
                it = c_.erase(it);
            else
                ++it;
        }
    }

    friend Laurent series_inv(const Laurent&, int);
    friend Laurent divexact(const Laurent&, const Laurent&);
};

// Multiplicative inverse as a series: returns b with a*b == 1 mod t^prec and
// trunc(b) == prec.  The valuation v of a may be nonzero (b starts at t^{-v}).
// Throws zero_division if a is zero up to its truncation, and
// insufficient_precision if a is too truncated to determine b below prec.
Laurent series_inv(const Laurent& a, int prec);

// Exact polynomial division; throws inexact_division when b does not divide a
// (which, where used, signals an internal bug: the mathematics guarantees
// divisibility).  Both operands must be exact.
Laurent divexact(const Laurent& a, const Laurent& b);

} // namespace qsel
