#include "qsel/partitions.hpp"

namespace qsel {

void for_each_partition(int max_size, int max_length,
                        const std::function<void(const Partition&)>& fn) {
    // Graded enumeration: all partitions of k for k = 0..max_size, each grade
    // in reverse-lexicographic order (largest first part first).
    for (int k = 0; k <= max_size; ++k) {
        Partition cur;
        std::function<bool(int, int, int)> grade = [&](int remaining, int max_part,
                                                       int len) -> bool {
            if (remaining == 0) {
                fn(cur);
                return true;
            }
            if (len == 0) return false;
            bool any = false;
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                cur.push_back(p);
                any = grade(remaining - p, p, len - 1) || any;
                cur.pop_back();
            }
            return any;
        };
        grade(k, k, max_length);
    }
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
    std::vector<Partition> out;
    for_each_partition(max_size, max_length,
                       [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<int> frame_exponents(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.size()) > n)
        throw length_exceeded("partition longer than frame length");
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = part_at(lambda, i) + n - 1 - i;
    return f;
}

} // namespace qsel
