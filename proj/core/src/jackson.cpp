#include "qsel/jackson.hpp"

#include <algorithm>
#include <random>

#include "qsel/errors.hpp"
#include "qsel/qfuncs.hpp"

namespace qsel {

namespace {

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// All pair differences |x_j - x_i| within one block, to the given power.
Laurent pair_diffs(const std::vector<int>& tws, int power) {
    Laurent r = Laurent::one();
    int n = static_cast<int>(tws.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Laurent d = abs_diff(tws[j], tws[i]);
            for (int p = 0; p < power; ++p) r = r * d;
        }
    return r;
}

// Random distinct nonnegative twice-exponents (even, i.e. integer q-powers).
std::vector<int> random_distinct_points(std::mt19937& rng, int n, int hi) {
    std::vector<int> ks(hi + 1);
    for (int i = 0; i <= hi; ++i) ks[i] = 2 * i;
    std::shuffle(ks.begin(), ks.end(), rng);
    ks.resize(n);
    return ks;
}

// The declared symmetry and vanishing properties are what licenses replacing
// the full lattice sum by a partition sum; check them at a few random points
// so a miswired integrand fails loudly instead of silently reducing wrong.
void spot_check_block(const Integrand& f, int block, int n, int K,
                      unsigned seed) {
    if (n < 2) return;
    std::mt19937 rng(seed);
    int hi = std::max(K + 3, 2 * n + 3);
    std::vector<int> other(block == 0 ? f.ny : f.nx);
    {
        auto o = random_distinct_points(rng, static_cast<int>(other.size()), hi);
        other = o;
    }
    auto eval = [&](const std::vector<int>& pts) {
        return block == 0 ? f(pts, other) : f(other, pts);
    };
    for (int trial = 0; trial < 2; ++trial) {
        std::vector<int> pts = random_distinct_points(rng, n, hi);
        Laurent base = eval(pts);
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % (n - 1));
        if (j >= i) ++j;
        std::swap(pts[i], pts[j]);
        if (!(base - eval(pts)).is_zero())
            throw contract_violation(
                "integrand declared symmetric is not symmetric");
        pts[j] = pts[i];
        if (!eval(pts).is_zero())
            throw contract_violation(
                "integrand declared vanishing is nonzero on a diagonal");
    }
}

void require_reducible(const Integrand& f, int K, unsigned seed) {
    if (!f.symmetric || !f.vanishing)
        throw contract_violation(
            "partition-sum reduction needs a symmetric integrand vanishing "
            "on coordinate diagonals");
    spot_check_block(f, 0, f.nx, K, seed);
    if (f.ny > 0) spot_check_block(f, 1, f.ny, K, seed + 1);
}

void lattice_points(int pos, int n, int rem, std::vector<int>& ks,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == n) {
        emit(ks);
        return;
    }
    for (int k = 0; k <= rem; ++k) {
        ks.push_back(k);
        lattice_points(pos + 1, n, rem - k, ks, emit);
        ks.pop_back();
    }
}

Laurent one_minus_q_pow(int n) {
    Laurent r = Laurent::one();
    Laurent f = Laurent::one() - Laurent::mono(2);
    for (int i = 0; i < n; ++i) r = r * f;
    return r;
}

} // namespace

Integrand integrand_qko(int n, const Composition& rvec,
                        const Composition& svec) {
    if (rvec.size() != svec.size() || rvec.empty())
        throw bad_shape("qko integrand needs equal nonempty compositions");
    Integrand f;
    f.nx = n;
    f.symmetric = true;
    f.vanishing = true;
    f.eval = [rvec, svec](const std::vector<int>& tws,
                             const std::vector<int>&) {
        Laurent r = Laurent::one();
        for (size_t k = 0; k < rvec.size(); ++k) {
            for (int tw : tws) {
                r = r * Laurent::mono(tw * rvec[k]);
                r = r * pochhammer(Laurent::mono(2 + tw), svec[k]);
            }
            r = r * pair_diffs(tws, 1);
            if (r.is_zero()) return r;
        }
        return r;
    };
    return f;
}

Integrand integrand_single(int n, int r, int s, int mpow) {
    Integrand f;
    f.nx = n;
    f.symmetric = true;
    f.vanishing = mpow >= 1 || n < 2;
    f.eval = [r, s, mpow](const std::vector<int>& tws,
                             const std::vector<int>&) {
        Laurent v = Laurent::one();
        for (int tw : tws) {
            v = v * Laurent::mono(tw * r);
            v = v * pochhammer(Laurent::mono(2 + tw), s);
        }
        return v * pair_diffs(tws, mpow);
    };
    return f;
}

Integrand integrand_variant(int which, int n, int r, int s) {
    if (which < 1 || which > 4) throw bad_shape("variant index must be 1..4");
    Integrand f;
    f.nx = n;
    f.symmetric = true;
    f.vanishing = true;
    f.eval = [which, r, s](const std::vector<int>& tws,
                              const std::vector<int>&) {
        Laurent v = Laurent::one();
        for (int tw : tws) {
            v = v * Laurent::mono(tw * r);
            v = v * pochhammer(Laurent::mono(2 + tw), s);
            // q^{(s+1)/2} x_i sits at t-exponent (s+1) + tw.
            if (which == 2)
                v = v * (Laurent::one() + Laurent::mono(s + 1 + tw));
            if (which == 3)
                v = v * (Laurent::one() - Laurent::mono(s + 1 + tw));
        }
        int m = static_cast<int>(tws.size());
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j)
                if (i < j || which == 4)
                    v = v * (Laurent::one() -
                             Laurent::mono(2 * (s + 1) + tws[i] + tws[j]));
        return v * pair_diffs(tws, 2);
    };
    return f;
}

Integrand integrand_rational(int n, int m, int l, int r, int s) {
    Integrand f;
    f.nx = n;
    f.ny = m;
    f.symmetric = true;
    f.vanishing = true;
    f.eval = [l, r, s](const std::vector<int>& xt, const std::vector<int>& yt) {
        Laurent v = Laurent::one();
        for (int tw : xt) {
            v = v * Laurent::mono(tw * r);
            v = v * pochhammer(Laurent::mono(2 + tw), l);
        }
        for (int tw : yt) {
            v = v * Laurent::mono(tw * s);
            v = v * pochhammer(Laurent::mono(2 + tw), l);
        }
        for (int ti : xt)
            for (int tj : yt)
                v = v * (Laurent::one() -
                         Laurent::mono(2 * (l + 1) + ti + tj));
        return v * pair_diffs(xt, 2) * pair_diffs(yt, 2);
    };
    return f;
}

Laurent jackson_bruteforce(const Integrand& f, int n, int K) {
    if (K < 0) throw bad_shape("truncation order must be nonnegative");
    int tr = 2 * (K + 1);
    Laurent total = Laurent::zero(tr);
    std::vector<int> ks;
    lattice_points(0, n, K, ks, [&](const std::vector<int>& k) {
        std::vector<int> tws(k.size());
        int wt = 0;
        for (size_t i = 0; i < k.size(); ++i) {
            tws[i] = 2 * k[i];
            wt += k[i];
        }
        Laurent v = f(tws);
        if (!v.is_zero())
            total = total + (v * Laurent::mono(2 * wt)).truncate(tr);
    });
    return (total * one_minus_q_pow(n)).truncate(tr);
}

Laurent jackson_partition_sum(const Integrand& f, int n, int K) {
    if (K < 0) throw bad_shape("truncation order must be nonnegative");
    require_reducible(f, K, 0x5eed + static_cast<unsigned>(n));
    int tr = 2 * (K + 1);
    Laurent total = Laurent::zero(tr);
    for_each_partition(K, n, [&](const Partition& lam) {
        std::vector<int> fr = frame_exponents(lam, n);
        std::vector<int> tws(fr.size());
        for (size_t i = 0; i < fr.size(); ++i) tws[i] = 2 * fr[i];
        Laurent v = f(tws);
        if (!v.is_zero()) {
            int wt = weight(lam) + static_cast<int>(binom2(n));
            total = total + (v * Laurent::mono(2 * wt)).truncate(tr);
        }
    });
    return (total * one_minus_q_pow(n)).smul(factorial(n)).truncate(tr);
}

Laurent jackson_two_block(const Integrand& g, int n, int m, int K) {
    if (K < 0) throw bad_shape("truncation order must be nonnegative");
    require_reducible(g, K, 0x5eed + static_cast<unsigned>(31 * n + m));
    int tr = 2 * (K + 1);
    Laurent total = Laurent::zero(tr);
    int base = static_cast<int>(binom2(n) + binom2(m));
    for_each_partition(K, n, [&](const Partition& lam) {
        std::vector<int> frx = frame_exponents(lam, n);
        std::vector<int> xt(frx.size());
        for (size_t i = 0; i < frx.size(); ++i) xt[i] = 2 * frx[i];
        for_each_partition(K - weight(lam), m, [&](const Partition& mu) {
            std::vector<int> fry = frame_exponents(mu, m);
            std::vector<int> yt(fry.size());
            for (size_t i = 0; i < fry.size(); ++i) yt[i] = 2 * fry[i];
            Laurent v = g(xt, yt);
            if (!v.is_zero()) {
                int wt = weight(lam) + weight(mu) + base;
                total = total + (v * Laurent::mono(2 * wt)).truncate(tr);
            }
        });
    });
    return (total * one_minus_q_pow(n + m))
        .smul(factorial(n) * factorial(m))
        .truncate(tr);
}

Laurent jackson_bruteforce2(const Integrand& g, int n, int m, int K) {
    if (K < 0) throw bad_shape("truncation order must be nonnegative");
    int tr = 2 * (K + 1);
    Laurent total = Laurent::zero(tr);
    std::vector<int> ks;
    lattice_points(0, n + m, K, ks, [&](const std::vector<int>& k) {
        std::vector<int> xt(n), yt(m);
        int wt = 0;
        for (int i = 0; i < n; ++i) xt[i] = 2 * k[i];
        for (int j = 0; j < m; ++j) yt[j] = 2 * k[n + j];
        for (int v : k) wt += v;
        Laurent v = g(xt, yt);
        if (!v.is_zero())
            total = total + (v * Laurent::mono(2 * wt)).truncate(tr);
    });
    return (total * one_minus_q_pow(n + m)).truncate(tr);
}

} // namespace qsel
