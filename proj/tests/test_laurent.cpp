#include "doctest.h"

#include "qsel/errors.hpp"
#include "qsel/laurent.hpp"
#include "test_util.hpp"

using namespace qsel;
using qsel::testing::qpoly;
using qsel::testing::tpoly;

TEST_SUITE("laurent") {

TEST_CASE("monomials live on the t-grid") {
    Laurent t = Laurent::mono(1);
    CHECK(t * t == Laurent::mono(2)); // sqrt(q) * sqrt(q) = q
    Laurent q = Laurent::mono(2);
    CHECK((Laurent::one() - q) * (Laurent::one() + q) == qpoly({{0, 1}, {2, -1}}));
    CHECK(Laurent::mono(2, 0).is_zero());
}

TEST_CASE("addition strips cancelled terms") {
    Laurent a = qpoly({{0, 1}, {1, 1}});
    CHECK((a - a).is_zero());
    CHECK_FALSE((a - a).truncated());
    CHECK(a + Laurent::zero() == a);
    CHECK(-a == qpoly({{0, -1}, {1, -1}}));
    CHECK(a.smul(mpq_class(3, 2)) ==
          Laurent::mono(0, mpq_class(3, 2)) + Laurent::mono(2, mpq_class(3, 2)));
    CHECK(a.smul(0).is_zero());
    CHECK(a.shift(-2) == qpoly({{-1, 1}, {0, 1}}));
}

TEST_CASE("truncation propagates through multiplication") {
    Laurent a = qpoly({{0, 1}, {1, 1}}).truncate(6); // 1 + q mod q^3
    Laurent sq = a * a;
    CHECK(sq == qpoly({{0, 1}, {1, 2}, {2, 1}}).truncate(6)); // 1 + 2q + q^2 mod q^3
    CHECK(sq.trunc() == 6);

    // An unknown tail is lifted by the other factor's valuation.
    CHECK((Laurent::mono(4) * Laurent::one().truncate(6)).trunc() == 10);
    CHECK((Laurent::zero(8) * Laurent::mono(2)).trunc() == 10);
    CHECK(Laurent::zero(8).val() == 8);

    // Truncating an exact value keeps only the known window.
    Laurent b = qpoly({{0, 1}, {3, 5}}).truncate(4);
    CHECK(b == Laurent::one().truncate(4));
}

TEST_CASE("series inversion") {
    Laurent one = Laurent::one();
    Laurent q = Laurent::mono(2);

    CHECK(series_inv(one - q, 8) ==
          qpoly({{0, 1}, {1, 1}, {2, 1}, {3, 1}}).truncate(8));
    CHECK(series_inv(q, 6) == Laurent::mono(-2).truncate(6));
    CHECK(series_inv((one - q) * (one - q * q), 8) ==
          qpoly({{0, 1}, {1, 1}, {2, 2}, {3, 2}}).truncate(8));

    Laurent a = qpoly({{0, 1}, {1, -1}, {3, 3}});
    CHECK((a * series_inv(a, 20)).eq_mod(one, 20));

    CHECK_THROWS_AS(series_inv(Laurent::zero(), 4), zero_division);
    CHECK_THROWS_AS(series_inv((one - q).truncate(4), 8), insufficient_precision);
}

TEST_CASE("eq_mod demands the stated precision") {
    Laurent one = Laurent::one();
    Laurent a = qpoly({{0, 1}, {1, 1}}).truncate(4);
    CHECK(a.eq_mod(qpoly({{0, 1}, {1, 1}}), 4));
    CHECK_FALSE(a.eq_mod(one, 4));
    CHECK_THROWS_AS(a.eq_mod(one, 6), insufficient_precision);
    CHECK(one.eq_mod(one + Laurent::mono(12), 12));
    CHECK_FALSE(one.eq_mod(one + Laurent::mono(11), 12));
}

TEST_CASE("divexact divides exactly or refuses") {
    Laurent one = Laurent::one();
    Laurent q = Laurent::mono(2);
    CHECK(divexact(one - q * q, one + q) == one - q);
    CHECK(divexact(one - Laurent::mono(-2), Laurent::mono(-2)) == q - one);
    CHECK(divexact(Laurent::zero(), one + q).is_zero());
    CHECK_THROWS_AS(divexact(one - q, one + q), inexact_division);
    CHECK_THROWS_AS(divexact(one, Laurent::zero()), zero_division);
    CHECK_THROWS_AS(divexact(one.truncate(4), one), truncated_value);
}

TEST_CASE("evaluation at q = 1") {
    CHECK(qpoly({{0, 1}, {1, 2}, {2, 2}, {3, 1}}).eval_at_one() == 6);
    CHECK((Laurent::mono(-2) - Laurent::mono(2)).eval_at_one() == 0);
    CHECK_THROWS_AS(Laurent::one().truncate(4).eval_at_one(), truncated_value);
}

TEST_CASE("printing") {
    CHECK(Laurent::one().to_q_string() == "1");
    CHECK(qpoly({{0, 1}, {1, 2}}).to_q_string() == "1 + 2*q");
    CHECK(Laurent::mono(1).to_q_string() == "q^(1/2)");
    CHECK(Laurent::mono(-2).to_q_string() == "q^-1");
    CHECK(qpoly({{0, 1}, {2, -1}}).to_q_string() == "1 - q^2");
    CHECK(Laurent::one().truncate(4).to_q_string() == "1 (mod t^4)");
    CHECK(Laurent::zero(4).to_q_string() == "0 (mod t^4)");
}

} // TEST_SUITE
