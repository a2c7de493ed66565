#include "doctest.h"

#include <algorithm>

#include "qsel/errors.hpp"
#include "qsel/rational.hpp"
#include "qsel/verify.hpp"
#include "test_util.hpp"

using namespace qsel;
using qsel::testing::qpoly;

TEST_SUITE("verify") {

TEST_CASE("multi-page integral against the descent statistic") {
    VerifyReport rep = verify_qko(1, {0}, {0}, 10);
    CHECK(rep.pass);
    CHECK(rep.identity_id == "qko");
    CHECK(rep.trunc_twice == 22);
    CHECK(rep.diff.is_zero());
    CHECK(std::count_if(rep.params.begin(), rep.params.end(),
                        [](const auto& kv) { return kv.first == "n"; }) == 1);

    CHECK(verify_qko(2, {1}, {1}, 14).pass);
    CHECK(verify_qko(2, {0, 1}, {1, 0}, 10).pass);
}

TEST_CASE("schur-sum closed forms") {
    CHECK(verify_schur_form(1, {1}, {1}, 10).pass);
    CHECK(verify_schur_form(2, {0, 1}, {1, 0}, 8).pass);
    CHECK(verify_qselberg_single(2, 1, 1, 2, 10).pass);
    CHECK(verify_qselberg_single(1, 0, 2, 1, 10).pass);
}

TEST_CASE("order-reversing map closed forms") {
    CHECK(verify_ppar(2, {1}, {1}, 12).pass);
    CHECK(verify_ppar(1, {2}, {0}, 10).pass);
    CHECK(verify_ppar(2, {1, 1}, {0, 0}, 8).pass);
    CHECK(verify_ppar_profile(2, 1, {1}, 10).pass);
    CHECK(verify_ppar_profile(1, 2, {}, 8).pass);
    CHECK(verify_ppar_profile(2, 0, {2, 1}, 8).pass);
    CHECK(verify_ppar_profile(3, 1, {2, 1}, 8).pass);
}

TEST_CASE("closed product evaluations") {
    CHECK(verify_eval(1, 2, 1, 0, 16).pass);
    CHECK(verify_eval(2, 2, 0, 0, 16).pass);
    CHECK(verify_eval(3, 2, 1, 1, 16).pass);
    CHECK(verify_eval(3, 1, 0, 2, 16).pass);
    CHECK_THROWS_AS(verify_eval(4, 1, 0, 0, 8), bad_shape);
}

TEST_CASE("squared-difference variants on the t-grid") {
    CHECK(verify_variant(1, 1, 0, 1, 10).pass);
    CHECK(verify_variant(2, 2, 0, 0, 10).pass);
    CHECK(verify_variant(3, 1, 1, 0, 10).pass);
    CHECK(verify_variant(4, 2, 0, 1, 10).pass);
    VerifyReport rep = verify_variant(1, 1, 0, 0, 10);
    CHECK(rep.pass);
    CHECK(rep.trunc_twice == 21); // genuinely a t-grid comparison
    CHECK_THROWS_AS(verify_variant(5, 1, 0, 0, 8), bad_shape);
}

TEST_CASE("two-block rational form") {
    CHECK(verify_rational(1, 1, 1, 0, 0, 10).pass);
    CHECK(verify_rational(2, 1, 0, 1, 0, 8).pass);
    CHECK(verify_rational(0, 1, 1, 0, 1, 8).pass);
    CHECK_THROWS_AS(verify_rational(0, 0, 0, 1, 1, 8), bad_shape);
}

TEST_CASE("character sums at geometric points") {
    VerifyReport rep = verify_cauchy_points("c", {1}, {4}, 6);
    CHECK(rep.pass);
    CHECK(rep.identity_id == "cauchy-c");
    RationalSeries fr; // 1 / ((1 - q^{5/2}) (1 - q^{3/2}))
    fr.div_series(Laurent::one() - Laurent::mono(5));
    fr.div_series(Laurent::one() - Laurent::mono(3));
    CHECK(rep.rhs.eq_mod(fr.to_series(13), 13));

    VerifyReport deg = verify_cauchy_points("d", {2, 4}, {}, 5);
    CHECK(deg.pass);
    CHECK(deg.rhs.eq_mod(Laurent::one(), 11));

    for (const char* which : {"c", "b", "bs", "d", "ds"})
        CHECK(verify_cauchy_classical(which, 2, 1, 0, 8).pass);
    CHECK(verify_cauchy_classical("rat", 2, 1, 1, 8).pass);
    CHECK(verify_cauchy_rational_points({2, 4}, {6}, {6}, 8).pass);

    CHECK_THROWS_AS(verify_cauchy_points("c", {4}, {4}, 5), non_convergent);
    CHECK_THROWS_AS(verify_cauchy_points("x", {2}, {4}, 5), bad_shape);
}

TEST_CASE("series serialization round trip") {
    Laurent a = qpoly({{0, 1}, {1, -3}}) + Laurent::mono(1) +
                Laurent::mono(-4, mpq_class(22, 7));
    CHECK(series_from_json(series_to_json(a)) == a);
    Laurent b = a.truncate(9);
    CHECK(series_from_json(series_to_json(b)) == b);
    CHECK(series_to_json(b).find("trunc_twice") != std::string::npos);
    CHECK(series_from_json(series_to_json(Laurent::zero())).is_zero());
}

TEST_CASE("report serialization") {
    VerifyReport rep = verify_eval(1, 1, 0, 0, 6);
    std::string j = report_to_json(rep);
    CHECK(j.find("\"identity\"") != std::string::npos);
    CHECK(j.find("\"eval1\"") != std::string::npos);
    CHECK(j.find("\"pass\"") != std::string::npos);
    std::string arr = reports_to_json({rep, rep});
    CHECK(arr.front() == '[');
}

TEST_CASE("grid parsing") {
    GridSpec spec = grid_from_json(R"({"identities": ["eval1"],
                                       "n": [1, 2], "K": 6})");
    CHECK(spec.identities == std::vector<std::string>{"eval1"});
    CHECK(spec.ns == std::vector<int>{1, 2});
    CHECK(spec.K == 6);
    CHECK(spec.blocks == std::vector<int>{1, 2}); // defaults survive
    CHECK(spec.max_entry == 2);
    CHECK(spec.max_size == 25);

    GridSpec full = grid_from_json(
        R"({"identities": ["qko"], "n": [1],
            "compositions": {"blocks": [1], "max_entry": 1, "max_size": 9},
            "K": 5})");
    CHECK(full.blocks == std::vector<int>{1});
    CHECK(full.max_entry == 1);
    CHECK(full.max_size == 9);
}

TEST_CASE("grid execution is deterministic across thread counts") {
    GridSpec spec;
    spec.identities = {"eval1", "cauchy-c"};
    spec.ns = {1, 2};
    spec.blocks = {1, 2};
    spec.max_entry = 1;
    spec.K = 5;
    std::vector<VerifyReport> serial = run_grid(spec, 1);
    std::vector<VerifyReport> parallel = run_grid(spec, 4);
    // eval1: 2 n-values x 2 r-values; cauchy-c: (N,n) in {(1,1),(2,1),(2,2)}.
    REQUIRE(serial.size() == 7);
    REQUIRE(parallel.size() == serial.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].identity_id == parallel[i].identity_id);
        CHECK(serial[i].params == parallel[i].params);
        CHECK(serial[i].pass);
        CHECK(parallel[i].pass);
        CHECK(serial[i].lhs == parallel[i].lhs);
    }

    GridSpec bogus;
    bogus.identities = {"no-such-identity"};
    CHECK_THROWS_AS(run_grid(bogus, 1), bad_shape);
}

} // TEST_SUITE
