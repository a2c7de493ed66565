#include "qsel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qsel/characters.hpp"
#include "qsel/errors.hpp"
#include "qsel/jackson.hpp"
#include "qsel/qfuncs.hpp"
#include "qsel/rational.hpp"
#include "qsel/schur.hpp"
#include "qsel/youngbooks.hpp"

namespace qsel {

namespace {

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

using Params = std::vector<std::pair<std::string, std::string>>;

// Time the two sides, diff them, and fill the report skeleton.  prec is the
// twice-exponent below which the comparison is exact.
VerifyReport finish(const std::string& id, Params params, int prec,
                    const std::function<std::pair<Laurent, Laurent>()>& run) {
    auto start = std::chrono::steady_clock::now();
    auto [lhs, rhs] = run();
    VerifyReport rep;
    rep.identity_id = id;
    rep.params = std::move(params);
    rep.trunc_twice = prec;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.diff = (lhs - rhs).truncate(prec);
    rep.pass = lhs.eq_mod(rhs, prec);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

// Sum of q^{|lambda|(1+r)} prod_k principal_spec(lambda, n, s_k) over all
// partitions in at most n parts, truncated: the Schur side shared by the
// multi-page closed form, the single form, and the order-reversing-map form.
Laurent schur_sum(int n, int r, const Composition& svec, int K, int tr) {
    Laurent tot = Laurent::zero(tr);
    for_each_partition(K, n, [&](const Partition& lam) {
        Laurent term = Laurent::mono(2 * weight(lam) * (1 + r));
        for (int sk : svec) term = term * principal_spec(lam, n, sk);
        tot = tot + term.truncate(tr);
    });
    return tot;
}

} // namespace

VerifyReport verify_qko(int n, const Composition& rvec,
                        const Composition& svec, int K, int guard) {
    Params params = {{"n", std::to_string(n)},
                     {"r", join_ints(rvec)},
                     {"s", join_ints(svec)},
                     {"K", std::to_string(K)}};
    int tr = 2 * (K + 1);
    return finish("qko", std::move(params), tr, [&] {
        Laurent lhs = jackson_partition_sum(integrand_qko(n, rvec, svec), n, K)
                          .smul(mpq_class(1, factorial(n)));

        StaircasePoset poset(n, rvec, svec);
        int m = static_cast<int>(rvec.size());
        int r = 0, s = 0, rs = 0;
        for (int k = 0; k < m; ++k) {
            r += rvec[k];
            s += svec[k];
            rs += rvec[k] * svec[k];
        }
        int N = static_cast<int>(m * binom2(n)) + (r + s + 1) * n + rs;
        if (N != poset.size())
            throw contract_violation("poset size disagrees with closed form");

        RationalSeries fr;
        fr.mul_series(Laurent::mono(
            2 * ((r + 1) * static_cast<int>(binom2(n)) +
                 m * static_cast<int>(binom3(n)))));
        fr.div_series(q_factorial(N));
        for (int k = 0; k < m; ++k) {
            fr.mul_series(f_q(n + rvec[k] + svec[k]));
            fr.div_series(f_q(rvec[k]));
            fr.div_series(f_q(svec[k]));
        }
        fr.mul_series(maj_gf(poset, guard));
        return std::make_pair(lhs, fr.to_series(tr));
    });
}

VerifyReport verify_schur_form(int n, const Composition& rvec,
                               const Composition& svec, int K) {
    Params params = {{"n", std::to_string(n)},
                     {"r", join_ints(rvec)},
                     {"s", join_ints(svec)},
                     {"K", std::to_string(K)}};
    int tr = 2 * (K + 1);
    return finish("schur-form", std::move(params), tr, [&] {
        Laurent lhs = jackson_bruteforce(integrand_qko(n, rvec, svec), n, K)
                          .smul(mpq_class(1, factorial(n)));

        int m = static_cast<int>(rvec.size());
        int r = 0;
        for (int rk : rvec) r += rk;
        Laurent pre = Laurent::mono(
            2 * ((r + 1) * static_cast<int>(binom2(n)) +
                 m * static_cast<int>(binom3(n))));
        Laurent one_minus_q = Laurent::one() - Laurent::mono(2);
        for (int i = 0; i < n; ++i) pre = pre * one_minus_q;
        for (int sk : svec)
            for (int h = sk; h < n + sk; ++h)
                pre = pre * pochhammer(Laurent::mono(2), h);
        Laurent rhs = (pre * schur_sum(n, r, svec, K, tr)).truncate(tr);
        return std::make_pair(lhs, rhs);
    });
}

VerifyReport verify_qselberg_single(int n, int r, int s, int mpow, int K) {
    Params params = {{"n", std::to_string(n)},
                     {"r", std::to_string(r)},
                     {"s", std::to_string(s)},
                     {"m", std::to_string(mpow)},
                     {"K", std::to_string(K)}};
    int tr = 2 * (K + 1);
    return finish("qselberg-single", std::move(params), tr, [&] {
        Laurent lhs = jackson_bruteforce(integrand_single(n, r, s, mpow), n, K)
                          .smul(mpq_class(1, factorial(n)));

        Laurent pre = Laurent::mono(
            2 * ((r + 1) * static_cast<int>(binom2(n)) +
                 mpow * static_cast<int>(binom3(n))));
        Laurent one_minus_q = Laurent::one() - Laurent::mono(2);
        for (int i = 0; i < n; ++i) pre = pre * one_minus_q;
        for (int h = s; h < n + s; ++h)
            pre = pre * pochhammer(Laurent::mono(2), h);
        for (int rep = 0; rep < mpow - 1; ++rep)
            for (int h = 1; h < n; ++h)
                pre = pre * pochhammer(Laurent::mono(2), h);

        Laurent tot = Laurent::zero(tr);
        for_each_partition(K, n, [&](const Partition& lam) {
            Laurent term = Laurent::mono(2 * weight(lam) * (1 + r));
            term = term * principal_spec(lam, n, s);
            if (mpow > 1) {
                Laurent ps0 = principal_spec(lam, n, 0);
                for (int rep = 0; rep < mpow - 1; ++rep) term = term * ps0;
            }
            tot = tot + term.truncate(tr);
        });
        return std::make_pair(lhs, (pre * tot).truncate(tr));
    });
}

VerifyReport verify_ppar(int n, const Composition& rvec,
                         const Composition& svec, int K) {
    Params params = {{"n", std::to_string(n)},
                     {"r", join_ints(rvec)},
                     {"s", join_ints(svec)},
                     {"K", std::to_string(K)}};
    int tr = 2 * (K + 1);
    return finish("ppar", std::move(params), tr, [&] {
        StaircasePoset poset(n, rvec, svec);
        Laurent lhs = ppartition_gf(poset, K);

        RationalSeries fr;
        int r = 0;
        for (int rk : rvec) r += rk;
        for (size_t k = 0; k < rvec.size(); ++k) {
            for (int h = 1; h < rvec[k]; ++h)
                fr.mul_series(pochhammer(Laurent::mono(2), h));
            for (int h = n + svec[k]; h < n + rvec[k] + svec[k]; ++h)
                fr.div_series(pochhammer(Laurent::mono(2), h));
        }
        fr.mul_series(schur_sum(n, r, svec, K, tr));
        return std::make_pair(lhs, fr.to_series(tr));
    });
}

VerifyReport verify_ppar_profile(int l, int r, const Partition& mu, int K) {
    Params params = {{"l", std::to_string(l)},
                     {"r", std::to_string(r)},
                     {"mu", join_ints(mu)},
                     {"K", std::to_string(K)}};
    int tr = 2 * (K + 1);
    return finish("ppar-profile", std::move(params), tr, [&] {
        StaircasePoset poset(l, {r}, {0});
        Laurent lhs = ppartition_gf(poset, K, &mu);

        RationalSeries fr;
        for (int h = 1; h < r; ++h)
            fr.mul_series(pochhammer(Laurent::mono(2), h));
        for (int h = l; h < l + r; ++h)
            fr.div_series(pochhammer(Laurent::mono(2), h));
        std::vector<int> pts(l);
        for (int i = 1; i <= l; ++i) pts[i - 1] = 2 * (r + i);
        fr.mul_series(schur_at(mu, pts));
        return std::make_pair(lhs, fr.to_series(tr));
    });
}

VerifyReport verify_eval(int which, int n, int r, int s, int K) {
    if (which < 1 || which > 3)
        throw bad_shape("evaluation index must be 1..3");
    Params params = {{"which", std::to_string(which)},
                     {"n", std::to_string(n)},
                     {"r", std::to_string(r)}};
    if (which == 3) params.emplace_back("s", std::to_string(s));
    params.emplace_back("K", std::to_string(K));
    int tr = 2 * (K + 1);
    return finish("eval" + std::to_string(which), std::move(params), tr, [&] {
        // which = 1 fixes s = 0 and plain differences; 2 fixes s = 1;
        // 3 squares the differences and keeps s free.
        Integrand f = which == 1   ? integrand_single(n, r, 0, 1)
                      : which == 2 ? integrand_single(n, r, 1, 1)
                                   : integrand_single(n, r, s, 2);
        Laurent lhs = jackson_partition_sum(f, n, K);

        mpq_class fac = factorial(n);
        RationalSeries fr;
        if (which == 1) {
            fr.mul_series(Laurent::mono(
                2 * ((r + 1) * static_cast<int>(binom2(n)) +
                     static_cast<int>(binom3(n))),
                fac));
            for (int k = 1; k < n; ++k) fr.mul_series(q_factorial(k));
            for (int i = 1; i <= n; ++i) fr.div_bracket(2 * (r + i));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    fr.div_bracket(2 * (2 * r + i + j));
        } else if (which == 2) {
            fr.mul_series(Laurent::mono(
                2 * ((r + 1) * static_cast<int>(binom2(n)) +
                     static_cast<int>(binom3(n))),
                fac));
            for (int k = 1; k <= n; ++k) fr.mul_series(q_factorial(k));
            fr.mul_bracket(2 * ((n + 1) * r + static_cast<int>(binom2(n + 2))));
            for (int i = 1; i <= n + 1; ++i) fr.div_bracket(2 * (r + i));
            for (int i = 1; i <= n + 1; ++i)
                for (int j = i + 1; j <= n + 1; ++j)
                    fr.div_bracket(2 * (2 * r + i + j));
        } else {
            fr.mul_series(Laurent::mono(
                2 * ((r + 1) * static_cast<int>(binom2(n)) +
                     2 * static_cast<int>(binom3(n))),
                fac));
            for (int k = 1; k < n; ++k) fr.mul_series(q_factorial(k));
            for (int k = 0; k < n; ++k) fr.mul_series(q_factorial(s + k));
            for (int i = 1; i <= n + s; ++i)
                for (int j = 1; j <= n; ++j)
                    fr.div_bracket(2 * (r + i + j - 1));
        }
        return std::make_pair(lhs, fr.to_series(tr));
    });
}

VerifyReport verify_variant(int which, int n, int r, int s, int K) {
    if (which < 1 || which > 4)
        throw bad_shape("variant index must be 1..4");
    Params params = {{"which", std::to_string(which)},
                     {"n", std::to_string(n)},
                     {"r", std::to_string(r)},
                     {"s", std::to_string(s)},
                     {"K", std::to_string(K)}};
    // Half-integer exponents are in play, so compare on the t-grid proper.
    int trt = 2 * K + 1;
    return finish("variant" + std::to_string(which), std::move(params), trt,
                  [&] {
        Laurent lhs =
            jackson_partition_sum(integrand_variant(which, n, r, s), n, K)
                .truncate(trt);

        RationalSeries fr;
        fr.mul_series(Laurent::mono(
            2 * ((r + 1) * static_cast<int>(binom2(n)) +
                 2 * static_cast<int>(binom3(n))),
            factorial(n)));
        for (int k = 1; k < n; ++k) fr.mul_series(q_factorial(k));
        if (which != 4)
            for (int k = 1; k <= n; ++k)
                fr.mul_series(q_factorial(s + 2 * k - 2));
        else
            for (int k = 1; k <= n; ++k)
                fr.mul_series(q_factorial(s + 2 * k - 1));

        if (which == 1) {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    fr.mul_bracket(2 * (2 * n + 2 * r + s + i + j - 2));
            for (int i = 1; i < 2 * n + s; ++i)
                for (int j = 1; j <= n; ++j)
                    fr.div_bracket(2 * (r + i + j - 1));
        } else if (which == 2) {
            for (int k = 1; k <= n; ++k)
                fr.mul_series(Laurent::one() +
                              Laurent::mono(s + 2 * k - 1));
            for (int i = 1; i <= n; ++i)
                fr.mul_bracket(2 * n + 2 * r + s + 2 * i - 1);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    fr.mul_bracket(2 * (2 * n + 2 * r + s + i + j - 1));
            for (int i = 1; i <= 2 * n + s; ++i)
                for (int j = 1; j <= n; ++j)
                    fr.div_bracket(2 * (r + i + j - 1));
        } else if (which == 3) {
            for (int k = 1; k <= n; ++k) fr.mul_bracket(s + 2 * k - 1);
            for (int i = 1; i <= n; ++i)
                fr.mul_series(Laurent::one() +
                              Laurent::mono(2 * n + 2 * r + s + 2 * i - 1));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    fr.mul_bracket(2 * (2 * n + 2 * r + s + i + j - 1));
            for (int i = 1; i <= 2 * n + s; ++i)
                for (int j = 1; j <= n; ++j)
                    fr.div_bracket(2 * (r + i + j - 1));
        } else {
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    fr.mul_bracket(2 * (2 * n + 2 * r + s + i + j));
            for (int i = 1; i <= 2 * n + s + 1; ++i)
                for (int j = 1; j <= n; ++j)
                    fr.div_bracket(2 * (r + i + j - 1));
        }
        return std::make_pair(lhs, fr.to_series(trt));
    });
}

VerifyReport verify_rational(int n, int m, int l, int r, int s, int K) {
    Params params = {{"n", std::to_string(n)},   {"m", std::to_string(m)},
                     {"l", std::to_string(l)},   {"r", std::to_string(r)},
                     {"s", std::to_string(s)},   {"K", std::to_string(K)}};
    int tr = 2 * (K + 1);
    int N = n + m + l;
    if (N <= 0) throw bad_shape("two-block form needs n + m + l > 0");
    return finish("rational", std::move(params), tr, [&] {
        Laurent lhs =
            jackson_two_block(integrand_rational(n, m, l, r, s), n, m, K);

        RationalSeries fr;
        fr.mul_series(Laurent::mono(
            2 * ((r + 1) * static_cast<int>(binom2(n)) +
                 (s + 1) * static_cast<int>(binom2(m)) +
                 2 * static_cast<int>(binom3(n)) +
                 2 * static_cast<int>(binom3(m))),
            factorial(n) * factorial(m)));
        for (int k = 1; k < N; ++k) fr.mul_series(q_factorial(k));
        for (int k = 1; k < n; ++k) fr.mul_series(q_factorial(k));
        for (int k = 1; k < m; ++k) fr.mul_series(q_factorial(k));
        for (int k = 1; k < l; ++k) fr.div_series(q_factorial(k));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j)
                fr.mul_bracket(2 * (N + r + s + i + j - 1));
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= N; ++k)
                fr.div_bracket(2 * (r + i + k - 1));
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= N; ++k)
                fr.div_bracket(2 * (s + j + k - 1));
        return std::make_pair(lhs, fr.to_series(tr));
    });
}

namespace {

CharKind kind_of(const std::string& which) {
    if (which == "c") return CharKind::C;
    if (which == "b") return CharKind::B;
    if (which == "bs") return CharKind::Bspin;
    if (which == "d") return CharKind::D;
    if (which == "ds") return CharKind::Dspin;
    throw bad_shape("unknown character kind: " + which);
}

} // namespace

VerifyReport verify_cauchy_points(const std::string& which,
                                  const std::vector<int>& x_tw,
                                  const std::vector<int>& u_tw, int K) {
    CharKind kind = kind_of(which);
    Params params = {{"x", join_ints(x_tw)},
                     {"u", join_ints(u_tw)},
                     {"K", std::to_string(K)}};
    int tr = 2 * K + 1;
    int n = static_cast<int>(u_tw.size());
    bool spin = kind == CharKind::Bspin || kind == CharKind::Dspin;
    return finish("cauchy-" + which, std::move(params), tr, [&] {
        int delta = 0;
        if (n > 0) {
            delta = *std::min_element(u_tw.begin(), u_tw.end());
            if (!x_tw.empty())
                delta -= *std::max_element(x_tw.begin(), x_tw.end());
            if (delta <= 0)
                throw non_convergent(
                    "character sum needs every u-exponent above every "
                    "x-exponent");
        }
        // Spin characters carry a fixed prefactor of valuation -sum(x)/2 that
        // must be budgeted both in the summation cutoff and on the right.
        int off = 0;
        if (spin) {
            for (int a : x_tw) off += a / 2;
        }
        int cut = n > 0 ? (tr + off) / delta + 1 : 0;
        Laurent lhs = Laurent::zero(tr);
        for_each_partition(cut, n, [&](const Partition& lam) {
            Laurent c = char_at(kind, lam, x_tw);
            Laurent s = n > 0 ? schur_at(lam, u_tw) : Laurent::one();
            Laurent term = c * s;
            if (!term.is_zero() && term.val() < weight(lam) * delta - off)
                throw contract_violation(
                    "character-sum term below its valuation bound");
            lhs = lhs + term.truncate(tr);
        });

        RationalSeries fr;
        if (kind == CharKind::B)
            for (int e : u_tw)
                fr.mul_series(Laurent::one() + Laurent::mono(e));
        if (spin)
            for (int a : x_tw) {
                if (a % 2 != 0)
                    throw non_divisible(
                        "spin specialization needs even twice-exponents");
                fr.mul_series(Laurent::mono(a / 2) + Laurent::mono(-a / 2));
            }
        if (kind == CharKind::Dspin)
            for (int e : u_tw)
                fr.mul_series(Laurent::one() - Laurent::mono(e));
        for (int i = 0; i < n; ++i)
            for (int j = (kind == CharKind::D ? i : i + 1); j < n; ++j)
                fr.mul_series(Laurent::one() -
                              Laurent::mono(u_tw[i] + u_tw[j]));
        for (int a : x_tw)
            for (int e : u_tw) {
                fr.div_series(Laurent::one() - Laurent::mono(a + e));
                fr.div_series(Laurent::one() - Laurent::mono(e - a));
            }
        return std::make_pair(lhs, fr.to_series(tr));
    });
}

VerifyReport verify_cauchy_rational_points(const std::vector<int>& x_tw,
                                           const std::vector<int>& u_tw,
                                           const std::vector<int>& v_tw,
                                           int K) {
    Params params = {{"x", join_ints(x_tw)},
                     {"u", join_ints(u_tw)},
                     {"v", join_ints(v_tw)},
                     {"K", std::to_string(K)}};
    int tr = 2 * K + 1;
    int n = static_cast<int>(u_tw.size());
    int m = static_cast<int>(v_tw.size());
    return finish("cauchy-rat", std::move(params), tr, [&] {
        int d1 = n > 0 ? *std::min_element(u_tw.begin(), u_tw.end()) : 1;
        int d2 = m > 0 ? *std::min_element(v_tw.begin(), v_tw.end()) : 1;
        if (m > 0 && !x_tw.empty())
            d2 -= *std::max_element(x_tw.begin(), x_tw.end());
        if (d1 <= 0 || d2 <= 0)
            throw non_convergent("rational character sum fails to converge "
                                 "at these exponents");
        int cut1 = n > 0 ? tr / d1 + 1 : 0;
        int cut2 = m > 0 ? tr / d2 + 1 : 0;
        Laurent lhs = Laurent::zero(tr);
        for_each_partition(cut1, n, [&](const Partition& lam) {
            Laurent t1 = n > 0 ? schur_at(lam, u_tw) : Laurent::one();
            for_each_partition(cut2, m, [&](const Partition& mu) {
                Laurent g = gl_rational_at(lam, mu, x_tw);
                Laurent t2 = m > 0 ? schur_at(mu, v_tw) : Laurent::one();
                Laurent term = g * t1 * t2;
                if (!term.is_zero() &&
                    term.val() < weight(lam) * d1 + weight(mu) * d2)
                    throw contract_violation(
                        "character-sum term below its valuation bound");
                lhs = lhs + term.truncate(tr);
            });
        });

        RationalSeries fr;
        for (int ue : u_tw)
            for (int ve : v_tw)
                fr.mul_series(Laurent::one() - Laurent::mono(ue + ve));
        for (int a : x_tw) {
            for (int ue : u_tw)
                fr.div_series(Laurent::one() - Laurent::mono(a + ue));
            for (int ve : v_tw)
                fr.div_series(Laurent::one() - Laurent::mono(ve - a));
        }
        return std::make_pair(lhs, fr.to_series(tr));
    });
}

VerifyReport verify_cauchy_classical(const std::string& which, int N, int n,
                                     int m, int K) {
    std::vector<int> x(N), u(n);
    if (which == "rat") {
        std::vector<int> v(m);
        for (int i = 1; i <= N; ++i) x[i - 1] = 2 * (i - 1);
        for (int j = 1; j <= n; ++j) u[j - 1] = 2 * (N + j);
        for (int j = 1; j <= m; ++j) v[j - 1] = 2 * (N + j);
        return verify_cauchy_rational_points(x, u, v, K);
    }
    if (which == "bs" || which == "ds") {
        for (int i = 1; i <= N; ++i) x[i - 1] = 2 * (N - i + 1);
        for (int j = 1; j <= n; ++j) u[j - 1] = 2 * (N + j);
    } else {
        for (int i = 1; i <= N; ++i) x[i - 1] = 2 * (N - i) + 1;
        for (int j = 1; j <= n; ++j) u[j - 1] = 2 * (N + j) - 1;
    }
    return verify_cauchy_points(which, x, u, K);
}

// ---------------------------------------------------------------------------
// serialization

namespace {

using nlohmann::json;

json series_json(const Laurent& a) {
    json coeffs = json::array();
    for (const auto& [tw, c] : a.terms())
        coeffs.push_back(json::array({tw, c.get_str()}));
    json j;
    j["coeffs"] = std::move(coeffs);
    if (a.truncated()) j["trunc_twice"] = a.trunc();
    return j;
}

Laurent series_unjson(const json& j) {
    Laurent r;
    if (j.contains("trunc_twice"))
        r = Laurent::zero(j.at("trunc_twice").get<int>());
    for (const auto& pair : j.at("coeffs")) {
        int tw = pair.at(0).get<int>();
        mpq_class c(pair.at(1).get<std::string>());
        c.canonicalize();
        r = r + Laurent::mono(tw, c);
    }
    return r;
}

json report_json(const VerifyReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json j;
    j["identity"] = r.identity_id;
    j["params"] = std::move(params);
    j["trunc_twice"] = r.trunc_twice;
    j["lhs"] = series_json(r.lhs);
    j["rhs"] = series_json(r.rhs);
    j["diff"] = series_json(r.diff);
    j["pass"] = r.pass;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace

std::string series_to_json(const Laurent& a) { return series_json(a).dump(); }

Laurent series_from_json(const std::string& text) {
    return series_unjson(json::parse(text));
}

std::string report_to_json(const VerifyReport& r) {
    return report_json(r).dump(2);
}

std::string reports_to_json(const std::vector<VerifyReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

// ---------------------------------------------------------------------------
// parameter grids

namespace {

// All compositions with the given number of blocks and entries 0..max_entry.
std::vector<Composition> compositions_with(int blocks, int max_entry) {
    std::vector<Composition> out;
    Composition cur(blocks, 0);
    while (true) {
        out.push_back(cur);
        int i = blocks - 1;
        while (i >= 0 && cur[i] == max_entry) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

int poset_size(int n, const Composition& rvec, const Composition& svec) {
    int m = static_cast<int>(rvec.size());
    int rs = 0, r = 0, s = 0;
    for (int k = 0; k < m; ++k) {
        r += rvec[k];
        s += svec[k];
        rs += rvec[k] * svec[k];
    }
    return static_cast<int>(m * binom2(n)) + (r + s + 1) * n + rs;
}

} // namespace

GridSpec grid_from_json(const std::string& text) {
    json j = json::parse(text);
    GridSpec g;
    g.identities = j.at("identities").get<std::vector<std::string>>();
    if (j.contains("n")) g.ns = j.at("n").get<std::vector<int>>();
    if (j.contains("K")) g.K = j.at("K").get<int>();
    if (j.contains("compositions")) {
        const json& c = j.at("compositions");
        if (c.contains("blocks"))
            g.blocks = c.at("blocks").get<std::vector<int>>();
        if (c.contains("max_entry")) g.max_entry = c.at("max_entry").get<int>();
        if (c.contains("max_size")) g.max_size = c.at("max_size").get<int>();
    }
    return g;
}

std::vector<VerifyReport> run_grid(const GridSpec& spec, int jobs) {
    std::vector<std::function<VerifyReport()>> work;
    int K = spec.K;
    for (const std::string& id : spec.identities) {
        if (id == "qko" || id == "schur-form" || id == "ppar") {
            for (int n : spec.ns)
                for (int m : spec.blocks)
                    for (const auto& rv : compositions_with(m, spec.max_entry))
                        for (const auto& sv :
                             compositions_with(m, spec.max_entry)) {
                            if (poset_size(n, rv, sv) > spec.max_size)
                                continue;
                            if (id == "qko")
                                work.push_back([=] {
                                    return verify_qko(n, rv, sv, K);
                                });
                            else if (id == "schur-form")
                                work.push_back([=] {
                                    return verify_schur_form(n, rv, sv, K);
                                });
                            else
                                work.push_back([=] {
                                    return verify_ppar(n, rv, sv, K);
                                });
                        }
        } else if (id == "qselberg-single") {
            for (int n : spec.ns)
                for (int mpow : spec.blocks)
                    for (int r = 0; r <= spec.max_entry; ++r)
                        for (int s = 0; s <= spec.max_entry; ++s)
                            work.push_back([=] {
                                return verify_qselberg_single(n, r, s, mpow,
                                                              K);
                            });
        } else if (id == "ppar-profile") {
            for (int l : spec.ns)
                for (int r = 0; r <= spec.max_entry; ++r)
                    for (const auto& mu :
                         partitions_up_to(spec.max_entry + 2, l))
                        work.push_back([=] {
                            return verify_ppar_profile(l, r, mu, K);
                        });
        } else if (id == "eval1" || id == "eval2" || id == "eval3") {
            int which = id.back() - '0';
            for (int n : spec.ns)
                for (int r = 0; r <= spec.max_entry; ++r) {
                    if (which != 3) {
                        work.push_back(
                            [=] { return verify_eval(which, n, r, 0, K); });
                        continue;
                    }
                    for (int s = 0; s <= spec.max_entry; ++s)
                        work.push_back(
                            [=] { return verify_eval(which, n, r, s, K); });
                }
        } else if (id == "variant1" || id == "variant2" || id == "variant3" ||
                   id == "variant4") {
            int which = id.back() - '0';
            for (int n : spec.ns)
                for (int r = 0; r <= spec.max_entry; ++r)
                    for (int s = 0; s <= spec.max_entry; ++s)
                        work.push_back(
                            [=] { return verify_variant(which, n, r, s, K); });
        } else if (id == "rational") {
            for (int n : spec.ns)
                for (int m : spec.ns)
                    for (int l = 0; l <= spec.max_entry; ++l)
                        for (int r = 0; r <= spec.max_entry; ++r)
                            for (int s = 0; s <= spec.max_entry; ++s) {
                                if (n + m + l == 0) continue;
                                work.push_back([=] {
                                    return verify_rational(n, m, l, r, s, K);
                                });
                            }
        } else if (id.rfind("cauchy-", 0) == 0) {
            std::string which = id.substr(7);
            // the specializations need at least as many character points as
            // Schur variables
            for (int N : spec.ns)
                for (int n : spec.blocks) {
                    if (which != "rat") {
                        if (n > N) continue;
                        work.push_back([=] {
                            return verify_cauchy_classical(which, N, n, 0, K);
                        });
                        continue;
                    }
                    for (int m : spec.blocks) {
                        if (n + m > N) continue;
                        work.push_back([=] {
                            return verify_cauchy_classical(which, N, n, m, K);
                        });
                    }
                }
        } else {
            throw bad_shape("unknown identity id: " + id);
        }
    }

    std::vector<VerifyReport> reports(work.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(work.size()) > 0
                                   ? static_cast<int>(work.size())
                                   : 1);
    if (jobs == 1) {
        for (size_t i = 0; i < work.size(); ++i) reports[i] = work[i]();
        return reports;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mu;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= work.size() || failed.load()) return;
                try {
                    reports[i] = work[i]();
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!failed.exchange(true)) first_error = e.what();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failed.load()) throw error("grid worker failed: " + first_error);
    return reports;
}

} // namespace qsel
