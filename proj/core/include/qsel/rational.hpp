#pragma once

#include "qsel/laurent.hpp"
#include "qsel/qfuncs.hpp"

namespace qsel {

// A ratio of exact Laurent polynomials, accumulated factor by factor.  Closed
// right-hand sides of the verified identities are built as RationalSeries and
// only expanded to a truncated series at the very end, so no intermediate
// series division can lose precision.
class RationalSeries {
public:
    RationalSeries() : num_(Laurent::one()), den_(Laurent::one()) {}

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    RationalSeries& mul_series(const Laurent& a) {
        num_ = num_ * a;
        return *this;
    }
    RationalSeries& div_series(const Laurent& a) {
        den_ = den_ * a;
        return *this;
    }
    RationalSeries& mul(const RationalSeries& o) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        return *this;
    }
    RationalSeries& div(const RationalSeries& o) {
        num_ = num_ * o.den_;
        den_ = den_ * o.num_;
        return *this;
    }

    // Multiply by the q-bracket [x]_q = (1 - t^tw)/(1 - t^2), tw = 2x.  This
    // is the exact carrier for half-integer brackets, which are not Laurent
    // polynomials on their own.
    RationalSeries& mul_bracket(int tw) {
        num_ = num_ * (Laurent::one() - Laurent::mono(tw));
        den_ = den_ * (Laurent::one() - Laurent::mono(2));
        return *this;
    }
    RationalSeries& div_bracket(int tw) {
        den_ = den_ * (Laurent::one() - Laurent::mono(tw));
        num_ = num_ * (Laurent::one() - Laurent::mono(2));
        return *this;
    }

    // Expand to a series known at least below t^prec.  The numerator's
    // valuation is compensated automatically, so a negative-valuation ratio
    // still comes back with trunc >= prec.
    Laurent to_series(int prec) const {
        if (num_.is_zero()) return Laurent::zero(prec);
        // trunc(num * inv) = prec_inv + val(num), so ask for enough that the
        // result is known below t^prec even when num or den has nonzero
        // valuation.
        int inv_prec = prec - std::min(num_.val(), 0) - std::min(den_.val(), 0);
        return num_ * series_inv(den_, inv_prec);
    }

private:
    Laurent num_, den_;
};

} // namespace qsel
