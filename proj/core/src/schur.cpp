#include "qsel/schur.hpp"

#include <algorithm>

#include "qsel/qfuncs.hpp"
#include "qsel/rational.hpp"

namespace qsel {

namespace {

Laurent det_leibniz(const std::vector<std::vector<Laurent>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Laurent acc;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Laurent term = Laurent::one();
        for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
        acc = inv % 2 == 0 ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

Laurent det_bareiss(std::vector<std::vector<Laurent>> m) {
    // One-step fraction-free elimination; all divisions are exact by the
    // Bareiss identity.  Row swaps to find a nonzero pivot flip the sign.
    int n = static_cast<int>(m.size());
    Laurent prev = Laurent::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { p = i; break; }
            if (p < 0) return Laurent();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Laurent t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divexact(t, prev);
            }
            m[i][k] = Laurent();
        }
        prev = m[k][k];
    }
    Laurent d = m[n - 1][n - 1];
    return sign == 1 ? d : -d;
}

} // namespace

Laurent det(const std::vector<std::vector<Laurent>>& m) {
    if (m.empty()) return Laurent::one();
    return m.size() <= 6 ? det_leibniz(m) : det_bareiss(m);
}

Laurent schur_at(const Partition& lambda, const std::vector<int>& pts_tw) {
    int n = static_cast<int>(pts_tw.size());
    if (static_cast<int>(lambda.size()) > n)
        throw length_exceeded("partition longer than point list");
    if (n == 0) return lambda.empty() ? Laurent::one() : Laurent();
    std::vector<std::vector<Laurent>> num(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            num[i][j] = Laurent::mono(pts_tw[i] * (part_at(lambda, j) + n - 1 - j));
    Laurent vand = Laurent::one();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vand = vand * (Laurent::mono(pts_tw[i]) - Laurent::mono(pts_tw[j]));
    if (vand.is_zero())
        throw degenerate_denominator("coincident evaluation points");
    return divexact(det(num), vand);
}

Laurent schur_ssyt_oracle(const Partition& lambda, const std::vector<int>& pts_tw) {
    int n = static_cast<int>(pts_tw.size());
    if (static_cast<int>(lambda.size()) > n)
        throw length_exceeded("partition longer than point list");
    if (weight(lambda) > 8 || n > 5)
        throw too_large("ssyt oracle is exponential; use schur_at");
    if (lambda.empty()) return Laurent::one();
    int rows = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(lambda[i], 0);
    Laurent acc;
    // Fill cells row-major; rows weakly increase, columns strictly increase.
    std::function<void(int, int, int)> fill = [&](int r, int c, int wtw) {
        if (r == rows) {
            acc = acc + Laurent::mono(wtw);
            return;
        }
        if (c == lambda[r]) {
            fill(r + 1, 0, wtw);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            fill(r, c + 1, wtw + pts_tw[v - 1]);
        }
    };
    fill(0, 0, 0);
    return acc;
}

Laurent principal_spec(const Partition& lambda, int n, int s) {
    if (static_cast<int>(lambda.size()) > n)
        throw length_exceeded("partition longer than variable count");
    if (n == 0) return lambda.empty() ? Laurent::one() : Laurent();
    std::vector<int> fr = frame_exponents(lambda, n);
    Laurent num = Laurent::one();
    for (int i = 0; i < n; ++i)
        num = num * pochhammer(Laurent::mono(2 * (fr[i] + 1)), s);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            num = num * (Laurent::mono(2 * fr[j]) - Laurent::mono(2 * fr[i]));
    Laurent den = Laurent::one();
    for (int h = s; h <= n + s - 1; ++h)
        den = den * pochhammer(Laurent::mono(2), h);
    return divexact(num, den).shift(-2 * static_cast<int>(binom3(n)));
}

Laurent littlewood_rhs(const std::vector<int>& pts_tw, int prec) {
    RationalSeries fr;
    for (size_t i = 0; i < pts_tw.size(); ++i) {
        if (pts_tw[i] <= 0) throw non_convergent("point exponent must be positive");
        fr.div_series(Laurent::one() - Laurent::mono(pts_tw[i]));
        for (size_t j = i + 1; j < pts_tw.size(); ++j)
            fr.div_series(Laurent::one() - Laurent::mono(pts_tw[i] + pts_tw[j]));
    }
    return fr.to_series(prec);
}

Laurent cauchy_rhs(const std::vector<int>& ptsx_tw, const std::vector<int>& ptsu_tw,
                   int prec) {
    RationalSeries fr;
    for (int a : ptsx_tw)
        for (int e : ptsu_tw) {
            if (a + e <= 0) throw non_convergent("pair exponent must be positive");
            fr.div_series(Laurent::one() - Laurent::mono(a + e));
        }
    return fr.to_series(prec);
}

} // namespace qsel
