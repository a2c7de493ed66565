#pragma once

#include <functional>
#include <vector>

#include "qsel/errors.hpp"

namespace qsel {

// A partition is a weakly decreasing vector of positive parts; trailing zeros
// are never stored.  A composition is an arbitrary vector of nonnegative
// parts (page data for staircases).
using Partition = std::vector<int>;
using Composition = std::vector<int>;

inline long long binom2(long long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }
inline long long binom3(long long n) { return n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0; }

// Visit every partition with |lambda| <= max_size and at most max_length
// parts, exactly once, graded by size and reverse-lexicographic within a
// grade: (), (1), (2), (1,1), (3), (2,1), (1,1,1), ...
void for_each_partition(int max_size, int max_length,
                        const std::function<void(const Partition&)>& fn);

std::vector<Partition> partitions_up_to(int max_size, int max_length);

// (lambda_1 + n-1, lambda_2 + n-2, ..., lambda_n): the strictly decreasing
// exponent frame that places a length-<=n partition on the q-power lattice.
// Throws length_exceeded if lambda has more than n parts.
std::vector<int> frame_exponents(const Partition& lambda, int n);

inline int part_at(const Partition& p, int i) {
    return i < static_cast<int>(p.size()) ? p[i] : 0;
}

inline int weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

} // namespace qsel
