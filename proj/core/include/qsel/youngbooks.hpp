#pragma once

#include <cstdint>
#include <functional>
#include <set>

#include "qsel/laurent.hpp"
#include "qsel/partitions.hpp"

namespace qsel {

// A staircase page with parameters (n, r_k, s_k) has rows -r_k+1 .. n and
// columns 1 .. n+s_k; rows with positive label start at their diagonal column
// (the lower-left staircase is cut away).  The diagonal cells (i,i) are shared
// by all pages and carry page number 0.  A filling of all N cells with 1..N
// increasing along rows and columns is a Young book; equivalently a linear
// extension of the cell poset under the right/down covering relation, where a
// diagonal cell is adjacent to its neighbours in every page.
struct Cell {
    int page; // 0 = shared diagonal
    int row;
    int col;
    bool operator==(const Cell& o) const {
        return page == o.page && row == o.row && col == o.col;
    }
};

class StaircasePoset {
public:
    StaircasePoset(int n, Composition rvec, Composition svec);

    int n() const { return n_; }
    const Composition& rvec() const { return rvec_; }
    const Composition& svec() const { return svec_; }
    int size() const { return N_; }

    // Cells in omega order: by row label, then page (diagonal first), then
    // column.  omega itself is a linear extension (checked at build time).
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<std::vector<int>>& covers() const { return covers_; }
    const std::vector<std::vector<int>>& below() const { return below_; }
    const std::vector<int>& diagonal() const { return diag_; }

    int index_of(const Cell& c) const;

    // The pair (value i at cell a, value i+1 at cell b) is a descent when b's
    // row label is smaller, or both are non-diagonal cells in the same row
    // with b on an earlier page.
    bool descent(const Cell& a, const Cell& b) const {
        if (b.row < a.row) return true;
        return b.row == a.row && a.page != 0 && b.page != 0 && b.page < a.page;
    }

private:
    int n_, N_;
    Composition rvec_, svec_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> covers_, below_;
    std::vector<int> diag_;
};

// A Young book as a bijective filling: labels[ci] is the entry 1..N written
// in cell ci (omega index).
struct YoungBook {
    const StaircasePoset* poset;
    std::vector<int> labels;

    bool valid() const;
    std::set<int> descents() const;
    int maj() const;
};

// Stream every Young book of the poset (lexicographic backtracking over
// currently minimal cells); return false from the callback to stop early.
// Guarded: throws too_large when size() > guard.
void enumerate_young_books(const StaircasePoset& p,
                           const std::function<bool(const YoungBook&)>& fn,
                           int guard = 25);

// Number of linear extensions by dynamic programming over order ideals,
// layered by ideal size.  Exact (big integer).
mpz_class count_extensions(const StaircasePoset& p, int guard = 25);

// Number of order ideals (a cheap size probe for the DP engines).
long long count_ideals(const StaircasePoset& p, int guard = 25);

// The full major-index generating function sum_B q^{maj(B)} as an exact
// polynomial, by dynamic programming over (order ideal, last-added cell)
// states.  These posets are antichain-poor, so the state space stays tiny even
// where the raw number of extensions is astronomical.
Laurent maj_gf(const StaircasePoset& p, int guard = 25);

// sum q^{|sigma|} over order-reversing maps sigma with |sigma| <= K, truncated
// at q^{K+1}; with a profile, restricted to maps whose diagonal reading is
// exactly that partition.
Laurent ppartition_gf(const StaircasePoset& p, int K,
                      const Partition* profile = nullptr);

} // namespace qsel
