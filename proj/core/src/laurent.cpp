#include "qsel/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qsel {

namespace {

// Truncation bounds combine additively under multiplication; keep the
// arithmetic in 64 bits and clamp so no_trunc behaves like +infinity.
int clamp_tr(long long v) {
    if (v >= Laurent::no_trunc) return Laurent::no_trunc;
    return static_cast<int>(v);
}

} // namespace

Laurent Laurent::operator-() const {
    Laurent r;
    r.tr_ = tr_;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

Laurent Laurent::operator+(const Laurent& b) const {
    Laurent r;
    r.tr_ = std::min(tr_, b.tr_);
    r.c_ = c_;
    for (const auto& [e, v] : b.c_) {
        auto [it, fresh] = r.c_.emplace(e, v);
        if (!fresh) it->second += v;
    }
    r.strip_();
    return r;
}

Laurent Laurent::operator-(const Laurent& b) const { return *this + (-b); }

Laurent Laurent::operator*(const Laurent& b) const {
    Laurent r;
    long long ta = no_trunc, tb = no_trunc;
    // trunc(a*b) = min(trunc(a) + val(b), trunc(b) + val(a)): an unknown tail
    // of one factor gets shifted up by at least the other's valuation.
    if (tr_ != no_trunc) ta = static_cast<long long>(tr_) + b.val();
    if (b.tr_ != no_trunc) tb = static_cast<long long>(b.tr_) + val();
    r.tr_ = clamp_tr(std::min(ta, tb));
    for (const auto& [ea, va] : c_) {
        for (const auto& [eb, vb] : b.c_) {
            long long e = static_cast<long long>(ea) + eb;
            if (r.tr_ != no_trunc && e >= r.tr_) continue;
            auto [it, fresh] = r.c_.emplace(static_cast<int>(e), va * vb);
            if (!fresh) it->second += va * vb;
        }
    }
    r.strip_();
    return r;
}

Laurent Laurent::smul(const mpq_class& k) const {
    Laurent r;
    r.tr_ = tr_;
    if (k == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * k;
    return r;
}

Laurent Laurent::shift(int k) const {
    Laurent r;
    r.tr_ = tr_ == no_trunc ? no_trunc : clamp_tr(static_cast<long long>(tr_) + k);
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

Laurent Laurent::truncate(int tr) const {
    Laurent r;
    r.tr_ = std::min(tr_, tr);
    for (const auto& [e, v] : c_) {
        if (e < r.tr_) r.c_[e] = v;
    }
    return r;
}

bool Laurent::eq_mod(const Laurent& b, int prec) const {
    if (tr_ < prec || b.tr_ < prec) {
        std::ostringstream os;
        os << "insufficient precision: have trunc " << std::min(tr_, b.tr_)
           << ", need " << prec;
        throw insufficient_precision(os.str());
    }
    auto ia = c_.begin(), ib = b.c_.begin();
    while (ia != c_.end() || ib != b.c_.end()) {
        int ea = ia == c_.end() ? prec : ia->first;
        int eb = ib == b.c_.end() ? prec : ib->first;
        if (ea >= prec && eb >= prec) break;
        if (ea < eb) {
            if (ia->second != 0) return false;
            ++ia;
        } else if (eb < ea) {
            if (ib->second != 0) return false;
            ++ib;
        } else {
            if (ia->second != ib->second) return false;
            ++ia, ++ib;
        }
    }
    return true;
}

mpq_class Laurent::eval_at_one() const {
    if (truncated()) throw truncated_value("eval_at_one on a truncated series");
    mpq_class s = 0;
    for (const auto& [e, v] : c_) s += v;
    return s;
}

std::string Laurent::to_q_string() const {
    if (c_.empty()) return truncated() ? "0 (mod t^" + std::to_string(tr_) + ")" : "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        mpq_class a = v;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) os << a.get_str();
        if (e != 0) {
            if (!unit_coeff) os << "*";
            if (e == 2) os << "q";
            else if (e % 2 == 0) os << "q^" << e / 2;
            else os << "q^(" << e << "/2)";
        }
    }
    if (truncated()) os << " (mod t^" << tr_ << ")";
    return os.str();
}

Laurent series_inv(const Laurent& a, int prec) {
    if (a.is_zero()) throw zero_division("series_inv of zero");
    int v = a.val();
    // Need the unit part of a on exponents 0 .. prec+v-1 to produce the
    // inverse below t^prec (the inverse starts at t^{-v}).
    long long need = static_cast<long long>(prec) + v;
    if (need <= 0) return Laurent::zero(prec);
    if (a.tr_ != Laurent::no_trunc &&
        static_cast<long long>(a.tr_) - v < need)
        throw insufficient_precision("series_inv: operand too truncated");
    const mpq_class& lead = a.c_.begin()->second;
    std::vector<mpq_class> b(static_cast<size_t>(need));
    b[0] = mpq_class(1) / lead;
    // b[k] = -(sum_{j >= 1} a_{v+j} * b[k-j]) / a_v, the usual unit inversion.
    for (long long k = 1; k < need; ++k) {
        mpq_class acc = 0;
        for (auto it = std::next(a.c_.begin()); it != a.c_.end(); ++it) {
            long long j = static_cast<long long>(it->first) - v;
            if (j > k) break;
            acc += it->second * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = -acc / lead;
    }
    Laurent r;
    r.tr_ = prec;
    for (long long k = 0; k < need; ++k) {
        if (b[static_cast<size_t>(k)] != 0 && k - v < prec)
            r.c_[static_cast<int>(k - v)] = b[static_cast<size_t>(k)];
    }
    return r;
}

Laurent divexact(const Laurent& a, const Laurent& b) {
    if (a.truncated() || b.truncated())
        throw truncated_value("divexact needs exact operands");
    if (b.is_zero()) throw zero_division("divexact by zero");
    if (a.is_zero()) return Laurent();
    Laurent r = a, q;
    int bv = b.val();
    const mpq_class& blead = b.c_.begin()->second;
    // Low-to-high: each step cancels the current lowest term of the remainder,
    // so the remainder's valuation strictly increases; an exact quotient has
    // degree at most deg(a) - val(b).
    int qdeg_max = a.deg() - bv;
    while (!r.is_zero()) {
        int e = r.val() - bv;
        if (e > qdeg_max) throw inexact_division("nonzero remainder");
        mpq_class coef = r.c_.begin()->second / blead;
        q.c_[e] = coef;
        r = r - b.shift(e).smul(coef);
    }
    return q;
}

} // namespace qsel
