#include "qsel/characters.hpp"

#include "qsel/schur.hpp"

namespace qsel {

namespace {

Laurent halve_exponents(const Laurent& a) {
    Laurent r;
    for (const auto& [e, v] : a.terms()) {
        if (e % 2 != 0) throw non_divisible("character value off the t-grid");
        r = r + Laurent::mono(e / 2, v);
    }
    return r;
}

// det over i,j of x_i^{p_j} +- x_i^{-p_j}, with exps2[j] = 2*p_j and
// x_i = t^{pts[i]}, assembled on the quarter grid.
Laurent det_pm(const std::vector<int>& pts_tw, const std::vector<int>& exps2,
               int sign) {
    int n = static_cast<int>(pts_tw.size());
    std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ue = pts_tw[i] * exps2[j];
            m[i][j] = Laurent::mono(ue) + Laurent::mono(-ue, sign);
        }
    return det(m);
}

} // namespace

Laurent char_at(CharKind kind, const Partition& lambda,
                const std::vector<int>& pts_tw) {
    int n = static_cast<int>(pts_tw.size());
    if (static_cast<int>(lambda.size()) > n)
        throw length_exceeded("partition longer than point list");
    std::vector<int> nume(n), dene(n);
    int nsign = -1, dsign = -1;
    mpq_class dscale = 1;
    for (int j = 1; j <= n; ++j) {
        int lj = part_at(lambda, j - 1);
        switch (kind) {
        case CharKind::C:
            nume[j - 1] = 2 * (lj + n - j + 1);
            dene[j - 1] = 2 * (n - j + 1);
            break;
        case CharKind::B:
            nume[j - 1] = 2 * (lj + n - j) + 1;
            dene[j - 1] = 2 * (n - j) + 1;
            break;
        case CharKind::D:
            nume[j - 1] = 2 * (lj + n - j);
            dene[j - 1] = 2 * (n - j);
            nsign = dsign = +1;
            if (part_at(lambda, n - 1) > 0) dscale = mpq_class(1, 2);
            break;
        case CharKind::Bspin:
            nume[j - 1] = 2 * (lj + n - j + 1);
            dene[j - 1] = 2 * (n - j) + 1;
            break;
        case CharKind::Dspin:
            nume[j - 1] = 2 * (lj + n - j) + 1;
            dene[j - 1] = 2 * (n - j);
            nsign = +1;
            dsign = +1;
            dscale = mpq_class(1, 2);
            break;
        }
    }
    Laurent num = det_pm(pts_tw, nume, nsign);
    Laurent den = det_pm(pts_tw, dene, dsign).smul(dscale);
    if (den.is_zero())
        throw degenerate_denominator("points collapse the character denominator");
    return halve_exponents(divexact(num, den));
}

Laurent gl_rational_at(const Partition& lambda, const Partition& mu,
                       const std::vector<int>& pts_tw) {
    int n = static_cast<int>(pts_tw.size());
    if (static_cast<int>(lambda.size() + mu.size()) > n)
        throw length_exceeded("lambda and mu together longer than point list");
    std::vector<int> big(n, 0);
    for (size_t i = 0; i < lambda.size(); ++i) big[i] = lambda[i];
    for (size_t i = 0; i < mu.size(); ++i) big[n - 1 - i] = -mu[i];
    std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = Laurent::mono(pts_tw[i] * (big[j] + n - 1 - j));
    Laurent vand = Laurent::one();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vand = vand * (Laurent::mono(pts_tw[i]) - Laurent::mono(pts_tw[j]));
    if (vand.is_zero())
        throw degenerate_denominator("coincident evaluation points");
    return divexact(det(m), vand);
}

} // namespace qsel
