#include "qsel/qfuncs.hpp"

namespace qsel {

Laurent pochhammer(const Laurent& x, int s) {
    Laurent r = Laurent::one();
    for (int i = 0; i < s; ++i)
        r = r * (Laurent::one() - x.shift(2 * i));
    return r;
}

Laurent q_int(int tw) {
    if (tw <= 0) throw non_divisible("q_int needs a positive exponent");
    Laurent r;
    int step = tw % 2 == 0 ? 2 : 1;
    for (int e = 0; e < tw; e += step) r = r + Laurent::mono(e);
    return r;
}

Laurent q_factorial(int n) {
    Laurent r = Laurent::one();
    for (int i = 1; i <= n; ++i) r = r * q_int(2 * i);
    return r;
}

Laurent f_q(int l) {
    Laurent r = Laurent::one();
    for (int i = 1; i <= l - 1; ++i) r = r * q_factorial(i);
    return r;
}

Laurent abs_diff(int tw_a, int tw_b) {
    if (tw_a == tw_b) return Laurent();
    return Laurent::mono(std::min(tw_a, tw_b)) - Laurent::mono(std::max(tw_a, tw_b));
}

} // namespace qsel
