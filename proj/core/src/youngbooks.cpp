#include "qsel/youngbooks.hpp"

#include <algorithm>
#include <map>

namespace qsel {

namespace {

std::vector<std::uint64_t> below_masks(const StaircasePoset& p, int guard) {
    int N = p.size();
    if (N > guard) throw too_large("poset size exceeds the enumeration guard");
    if (N > 63) throw too_large("poset too large for bitmask enumeration");
    std::vector<std::uint64_t> bm(N, 0);
    for (int b = 0; b < N; ++b)
        for (int a : p.below()[b]) bm[b] |= std::uint64_t(1) << a;
    return bm;
}

} // namespace

StaircasePoset::StaircasePoset(int n, Composition rvec, Composition svec)
    : n_(n), rvec_(std::move(rvec)), svec_(std::move(svec)) {
    if (n_ < 1) throw bad_shape("need n >= 1");
    if (rvec_.empty() || rvec_.size() != svec_.size())
        throw bad_shape("page compositions must be nonempty and equal length");
    for (size_t k = 0; k < rvec_.size(); ++k)
        if (rvec_[k] < 0 || svec_[k] < 0) throw bad_shape("negative page entry");
    int m = static_cast<int>(rvec_.size());
    for (int i = 1; i <= n_; ++i) cells_.push_back({0, i, i});
    for (int k = 1; k <= m; ++k) {
        int rk = rvec_[k - 1], sk = svec_[k - 1];
        for (int i = -rk + 1; i <= n_; ++i) {
            int lo = i <= 0 ? 1 : i;
            for (int j = lo; j <= n_ + sk; ++j) {
                if (i >= 1 && i == j) continue; // shared diagonal cell
                cells_.push_back({k, i, j});
            }
        }
    }
    std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
        if (a.row != b.row) return a.row < b.row;
        if (a.page != b.page) return a.page < b.page;
        return a.col < b.col;
    });
    N_ = static_cast<int>(cells_.size());

    long long r = 0, s = 0, rs = 0;
    for (int k = 0; k < m; ++k) {
        r += rvec_[k];
        s += svec_[k];
        rs += static_cast<long long>(rvec_[k]) * svec_[k];
    }
    if (N_ != m * binom2(n_) + (r + s + 1) * n_ + rs)
        throw bad_shape("cell count disagrees with the closed formula");

    covers_.assign(N_, {});
    below_.assign(N_, {});
    auto find = [&](int k, int i, int j) -> int {
        Cell c{1 <= i && i == j ? 0 : k, i, j};
        return index_of(c);
    };
    for (int a = 0; a < N_; ++a) {
        const Cell& c = cells_[a];
        int klo = c.page == 0 ? 1 : c.page;
        int khi = c.page == 0 ? m : c.page;
        for (int k = klo; k <= khi; ++k) {
            for (auto [i2, j2] : {std::pair{c.row, c.col + 1},
                                  std::pair{c.row + 1, c.col}}) {
                int b = find(k, i2, j2);
                if (b >= 0) {
                    covers_[a].push_back(b);
                    below_[b].push_back(a);
                }
            }
        }
    }
    for (int a = 0; a < N_; ++a) {
        auto dedup = [](std::vector<int>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        dedup(covers_[a]);
        dedup(below_[a]);
        for (int b : covers_[a])
            if (b <= a) throw bad_shape("omega is not a linear extension");
    }
    for (int i = 1; i <= n_; ++i) diag_.push_back(index_of({0, i, i}));
}

int StaircasePoset::index_of(const Cell& c) const {
    auto it = std::lower_bound(
        cells_.begin(), cells_.end(), c, [](const Cell& a, const Cell& b) {
            if (a.row != b.row) return a.row < b.row;
            if (a.page != b.page) return a.page < b.page;
            return a.col < b.col;
        });
    if (it == cells_.end() || !(*it == c)) return -1;
    return static_cast<int>(it - cells_.begin());
}

bool YoungBook::valid() const {
    int N = poset->size();
    if (static_cast<int>(labels.size()) != N) return false;
    std::vector<bool> seen(N + 1, false);
    for (int v : labels) {
        if (v < 1 || v > N || seen[v]) return false;
        seen[v] = true;
    }
    for (int a = 0; a < N; ++a)
        for (int b : poset->covers()[a])
            if (labels[a] >= labels[b]) return false;
    return true;
}

std::set<int> YoungBook::descents() const {
    int N = poset->size();
    std::vector<int> cell_of(N + 1);
    for (int ci = 0; ci < N; ++ci) cell_of[labels[ci]] = ci;
    std::set<int> ds;
    for (int i = 1; i < N; ++i)
        if (poset->descent(poset->cells()[cell_of[i]], poset->cells()[cell_of[i + 1]]))
            ds.insert(i);
    return ds;
}

int YoungBook::maj() const {
    int m = 0;
    for (int i : descents()) m += i;
    return m;
}

void enumerate_young_books(const StaircasePoset& p,
                           const std::function<bool(const YoungBook&)>& fn,
                           int guard) {
    int N = p.size();
    auto bm = below_masks(p, guard);
    YoungBook book{&p, std::vector<int>(N, 0)};
    bool stop = false;
    std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t ideal, int t) {
        if (stop) return;
        if (t > N) {
            if (!fn(book)) stop = true;
            return;
        }
        for (int b = 0; b < N && !stop; ++b) {
            std::uint64_t bit = std::uint64_t(1) << b;
            if ((ideal & bit) || (bm[b] & ideal) != bm[b]) continue;
            book.labels[b] = t;
            rec(ideal | bit, t + 1);
            book.labels[b] = 0;
        }
    };
    rec(0, 1);
}

mpz_class count_extensions(const StaircasePoset& p, int guard) {
    int N = p.size();
    auto bm = below_masks(p, guard);
    std::map<std::uint64_t, mpz_class> cur;
    cur[0] = 1;
    for (int layer = 0; layer < N; ++layer) {
        std::map<std::uint64_t, mpz_class> nxt;
        for (const auto& [ideal, cnt] : cur) {
            for (int b = 0; b < N; ++b) {
                std::uint64_t bit = std::uint64_t(1) << b;
                if ((ideal & bit) || (bm[b] & ideal) != bm[b]) continue;
                nxt[ideal | bit] += cnt;
            }
        }
        cur = std::move(nxt);
    }
    return cur.at((std::uint64_t(1) << N) - 1);
}

long long count_ideals(const StaircasePoset& p, int guard) {
    int N = p.size();
    auto bm = below_masks(p, guard);
    std::set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> stack{0};
    while (!stack.empty()) {
        std::uint64_t ideal = stack.back();
        stack.pop_back();
        for (int b = 0; b < N; ++b) {
            std::uint64_t bit = std::uint64_t(1) << b;
            if ((ideal & bit) || (bm[b] & ideal) != bm[b]) continue;
            if (seen.insert(ideal | bit).second) stack.push_back(ideal | bit);
        }
    }
    return static_cast<long long>(seen.size());
}

Laurent maj_gf(const StaircasePoset& p, int guard) {
    int N = p.size();
    auto bm = below_masks(p, guard);
    // State: (ideal, cell of the largest value placed) -> maj distribution of
    // the partial fillings, as a dense coefficient vector.  Placing value t+1
    // at cell c after value t at cell b contributes a descent at position t.
    using Key = std::pair<std::uint64_t, int>;
    std::map<Key, std::vector<mpz_class>> cur;
    for (int b = 0; b < N; ++b) {
        if (bm[b] == 0) cur[{std::uint64_t(1) << b, b}] = {mpz_class(1)};
    }
    for (int t = 1; t < N; ++t) {
        std::map<Key, std::vector<mpz_class>> nxt;
        for (const auto& [key, poly] : cur) {
            auto [ideal, last] = key;
            for (int c = 0; c < N; ++c) {
                std::uint64_t bit = std::uint64_t(1) << c;
                if ((ideal & bit) || (bm[c] & ideal) != bm[c]) continue;
                int shift =
                    p.descent(p.cells()[last], p.cells()[c]) ? t : 0;
                auto& acc = nxt[{ideal | bit, c}];
                if (acc.size() < poly.size() + shift)
                    acc.resize(poly.size() + shift);
                for (size_t d = 0; d < poly.size(); ++d)
                    acc[d + shift] += poly[d];
            }
        }
        cur = std::move(nxt);
    }
    Laurent gf;
    if (N == 0) return Laurent::one();
    for (const auto& [key, poly] : cur)
        for (size_t d = 0; d < poly.size(); ++d)
            if (poly[d] != 0)
                gf = gf + Laurent::mono(2 * static_cast<int>(d), mpq_class(poly[d]));
    return gf;
}

Laurent ppartition_gf(const StaircasePoset& p, int K, const Partition* profile) {
    int N = p.size();
    int tr = 2 * (K + 1);
    std::vector<int> sigma(N, 0);
    std::vector<int> diag_row(N, 0); // 1-based row for diagonal cells, else 0
    for (int i = 0; i < p.n(); ++i) diag_row[p.diagonal()[i]] = i + 1;
    Laurent acc = Laurent::zero(tr);
    // Assign cells in reverse omega order; every covering successor is then
    // already assigned, and order-reversal means sigma(cell) >= sigma(succ).
    std::function<void(int, int)> rec = [&](int ci, int total) {
        if (ci < 0) {
            acc = acc + Laurent::mono(2 * total).truncate(tr);
            return;
        }
        int lo = 0;
        for (int b : p.covers()[ci]) lo = std::max(lo, sigma[b]);
        if (diag_row[ci] > 0 && profile) {
            int v = part_at(*profile, diag_row[ci] - 1);
            if (v < lo || total + v > K) return;
            sigma[ci] = v;
            rec(ci - 1, total + v);
            return;
        }
        for (int v = lo; total + v <= K; ++v) {
            sigma[ci] = v;
            rec(ci - 1, total + v);
        }
    };
    rec(N - 1, 0);
    return acc;
}

} // namespace qsel
