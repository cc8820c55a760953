#include "momest/io.hpp"
#include "momest/types.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <limits>

using namespace momest;

TEST_CASE("validate_instance accepts well-formed weights") {
    CHECK_NOTHROW(validate_instance({{1.0, 2.0, 0.0}, ""}));
    CHECK_NOTHROW(validate_instance({{5.0}, "single"}));
}

TEST_CASE("validate_instance rejects bad weights with the offending index") {
    try {
        validate_instance({{1.0, -3.0}, ""});
        FAIL("expected InvalidWeight");
    } catch (const InvalidWeight& e) {
        CHECK(std::string(e.what()).find("index 1") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_instance({{std::nan(""), 1.0}, ""}), InvalidWeight);
    CHECK_THROWS_AS(
        validate_instance({{std::numeric_limits<double>::infinity()}, ""}), InvalidWeight);
    CHECK_THROWS_AS(validate_instance({{}, ""}), EmptyInstance);
}

TEST_CASE("estimator params enforce their ranges") {
    CHECK_NOTHROW(EstimatorParams(2.0, 0.1, 0.05));
    // eps1 defaults to eps/2
    CHECK(EstimatorParams(2.0, 0.2, 0.1).eps1 == doctest::Approx(0.1));

    CHECK_THROWS_AS(EstimatorParams(0.0, 0.1, 0.1), InvalidParams);
    CHECK_THROWS_AS(EstimatorParams(-1.0, 0.1, 0.1), InvalidParams);
    CHECK_THROWS_AS(EstimatorParams(2.0, 0.0, 0.1), InvalidParams);
    CHECK_THROWS_AS(EstimatorParams(2.0, 1.0, 0.1), InvalidParams);
    CHECK_THROWS_AS(EstimatorParams(2.0, 0.1, 0.0), InvalidParams);
    CHECK_THROWS_AS(EstimatorParams(2.0, 0.1, 1.0), InvalidParams);
    // eps1 >= eps is rejected
    CHECK_THROWS_AS(EstimatorParams(2.0, 0.1, 0.1, 0.1), InvalidParams);
    CHECK_THROWS_AS(EstimatorParams(2.0, 0.1, 0.1, 0.2), InvalidParams);
}

TEST_CASE("constant profiles") {
    const ConstantProfile paper = ConstantProfile::paper();
    CHECK(paper.sum_c == 480.0);
    CHECK(paper.inner_c == 48.0);
    CHECK(paper.outer_c == 48.0);
    const ConstantProfile test = ConstantProfile::test();
    CHECK(test.sum_c == 10.0);
    CHECK(test.inner_c == 3.0);
    CHECK(test.outer_c == 9.0);
    CHECK_THROWS_AS(ConstantProfile::custom(0.0, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(ConstantProfile::custom(1.0, -1.0, 1.0), InvalidParams);
}

TEST_CASE("instance file round-trips weights bit-exactly") {
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        const WeightedInstance inst = test::random_instance(seed, 40);
        const WeightedInstance back = parse_instance(serialize_instance(inst));
        REQUIRE(back.size() == inst.size());
        for (std::uint64_t i = 0; i < inst.size(); ++i) {
            CHECK(back.weights[i] == inst.weights[i]);
        }
        CHECK(back.label == inst.label);
    }

    // Extremes survive the 17-digit round trip too.
    WeightedInstance edge;
    edge.weights = {0.0, 5e-324, 1.7976931348623157e308, 1.0 / 3.0, 0.1};
    edge.label = "edge";
    const WeightedInstance back = parse_instance(serialize_instance(edge));
    for (std::uint64_t i = 0; i < edge.size(); ++i) {
        CHECK(back.weights[i] == edge.weights[i]);
    }
}

TEST_CASE("instance file parser rejects malformed input") {
    CHECK_THROWS_AS(parse_instance(""), IoError);
    CHECK_THROWS_AS(parse_instance("weights-v2 1\n1.0\n"), IoError);
    CHECK_THROWS_AS(parse_instance("weights-v1 3\n1.0\n2.0\n"), IoError);
    CHECK_THROWS_AS(parse_instance("weights-v1 1\nnot-a-number\n"), IoError);
    CHECK_THROWS_AS(parse_instance("weights-v1 1\n1.0\ntrailing junk\n"), IoError);
    // Declared n = 0 parses but fails validation.
    CHECK_THROWS_AS(parse_instance("weights-v1 0\n"), EmptyInstance);
    // A negative weight parses but fails validation.
    CHECK_THROWS_AS(parse_instance("weights-v1 1\n-3\n"), InvalidWeight);
    // Trailing comments are fine.
    CHECK_NOTHROW(parse_instance("weights-v1 1\n1.0\n# a comment\n"));
}
