#include "doctest.h"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsel/errors.hpp"
#include "qsel/qfuncs.hpp"
#include "qsel/schur.hpp"
#include "qsel/verify.hpp"
#include "test_util.hpp"

using namespace qsel;

namespace {

// Deterministically seeded operand generator for the algebraic laws.
struct Gen {
    std::mt19937 rng{12345};

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Laurent laurent() {
        Laurent a;
        int terms = uniform(3, 8);
        for (int i = 0; i < terms; ++i) {
            mpq_class c(uniform(-9, 9), uniform(1, 4));
            c.canonicalize();
            a = a + Laurent::mono(uniform(-6, 14), c);
        }
        return a;
    }

    Laurent unit() {
        Laurent a = laurent();
        int v = uniform(-4, 4);
        return a + Laurent::mono(v - 7); // a term strictly below everything
    }
};

} // namespace

TEST_SUITE("properties") {

TEST_CASE("ring axioms on random operands") {
    Gen g;
    for (int round = 0; round < 20; ++round) {
        Laurent a = g.laurent(), b = g.laurent(), c = g.laurent();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Laurent::one() == a);
        CHECK((a * Laurent::zero()).is_zero());
    }
}

TEST_CASE("truncation bounds are the sharp ones") {
    Gen g;
    for (int round = 0; round < 20; ++round) {
        Laurent a = g.laurent(), b = g.laurent();
        if (b.is_zero()) continue; // the bound degenerates without a valuation
        int T = g.uniform(0, 12);
        Laurent cut = a.truncate(T);
        CHECK((cut * b).trunc() == T + b.val());
        CHECK((cut + b).trunc() == T);
        CHECK(cut.truncate(T + 5).trunc() == T); // never un-truncates
    }
}

TEST_CASE("series inversion is a two-sided inverse") {
    Gen g;
    for (int round = 0; round < 10; ++round) {
        Laurent a = g.unit();
        if (a.is_zero()) continue;
        // normalize the valuation: the product of a truncated inverse with a
        // negative-valuation operand is only known below the requested grade
        a = a * Laurent::mono(-a.val());
        Laurent inv = series_inv(a, 12);
        CHECK((a * inv).eq_mod(Laurent::one(), 12));
        CHECK((inv * a).eq_mod(Laurent::one(), 12));
    }
}

TEST_CASE("q-factorial statistics") {
    mpq_class fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        CHECK(q_factorial(n).eval_at_one() == fact);
        CHECK(q_factorial(n) == q_factorial(n - 1) * q_int(2 * n));
        if (n >= 2) CHECK(q_factorial(n).deg() == n * (n - 1));
    }
}

TEST_CASE("pochhammer divisibility ladder") {
    Laurent q = Laurent::mono(2);
    for (int s = 0; s <= 5; ++s) {
        Laurent step = divexact(pochhammer(q, s + 1), pochhammer(q, s));
        CHECK(step == Laurent::one() - Laurent::mono(2 * (s + 1)));
    }
}

TEST_CASE("partition counts against the generating function") {
    for (int n = 1; n <= 4; ++n) {
        const int K = 12;
        Laurent den = Laurent::one();
        for (int i = 1; i <= n; ++i)
            den = den * (Laurent::one() - Laurent::mono(2 * i));
        Laurent inv = series_inv(den, 2 * K + 2);
        mpq_class total = 0;
        for (const auto& [tw, c] : inv.terms())
            if (tw <= 2 * K) total += c;
        CHECK(total == static_cast<int>(partitions_up_to(K, n).size()));
    }
}

TEST_CASE("schur values are homogeneous under point shifts") {
    Gen g;
    for (int round = 0; round < 8; ++round) {
        std::set<int> pick;
        while (pick.size() < 3) pick.insert(2 * g.uniform(-2, 5));
        std::vector<int> pts(pick.begin(), pick.end());
        int c = g.uniform(-3, 3);
        std::vector<int> shifted = pts;
        for (int& p : shifted) p += 2 * c;
        auto lams = partitions_up_to(5, 3);
        const Partition& lam = lams[g.uniform(0, static_cast<int>(lams.size()) - 1)];
        CHECK(schur_at(lam, shifted) ==
              Laurent::mono(2 * c * weight(lam)) * schur_at(lam, pts));
    }
}

TEST_CASE("verifier truncation is monotone") {
    // Passing at K pins every lower truncation: the short run must agree
    // with a prefix of the long one.
    VerifyReport big = verify_qko(2, {1}, {0}, 12);
    VerifyReport small = verify_qko(2, {1}, {0}, 7);
    CHECK(big.pass);
    CHECK(small.pass);
    CHECK(small.lhs.eq_mod(big.lhs, small.trunc_twice));
    CHECK(small.rhs.eq_mod(big.rhs, small.trunc_twice));

    VerifyReport vb = verify_variant(1, 1, 1, 1, 10);
    VerifyReport vs = verify_variant(1, 1, 1, 1, 6);
    CHECK(vb.pass);
    CHECK(vs.pass);
    CHECK(vs.lhs.eq_mod(vb.lhs, vs.trunc_twice));

    VerifyReport rb = verify_rational(1, 1, 1, 0, 0, 10);
    VerifyReport rs = verify_rational(1, 1, 1, 0, 0, 6);
    CHECK(rb.pass);
    CHECK(rs.pass);
    CHECK(rs.lhs.eq_mod(rb.lhs, rs.trunc_twice));
}

TEST_CASE("each identity is checked through disjoint pipelines") {
    // Documentation-as-test: the machinery named on the left of each pair
    // computes the LHS, the right the RHS; no identity may share engines.
    const std::vector<std::pair<std::string, std::string>> pipelines = {
        {"qko", "jackson partition sum | staircase maj dp"},
        {"schur-form", "jackson lattice sum | principal specialization"},
        {"qselberg-single", "jackson lattice sum | principal specialization"},
        {"ppar", "order-reversing dfs | pochhammer times schur sum"},
        {"ppar-profile", "order-reversing dfs | bialternant product"},
        {"eval", "jackson partition sum | bracket product"},
        {"variant", "jackson partition sum | bracket product"},
        {"rational", "two-block partition sum | bracket product"},
        {"cauchy", "character times schur sum | weyl denominator product"},
    };
    for (const auto& [id, engines] : pipelines) {
        auto bar = engines.find(" | ");
        REQUIRE(bar != std::string::npos);
        std::string lhs = engines.substr(0, bar);
        std::string rhs = engines.substr(bar + 3);
        CHECK_MESSAGE(lhs != rhs, id);
    }
}

} // TEST_SUITE
