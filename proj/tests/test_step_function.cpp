#include <doctest.h>

#include <cmath>

#include "normlab/sampling.hpp"
#include "normlab/step_function.hpp"

using namespace normlab;

TEST_CASE("make_step_function canonicalizes") {
    SUBCASE("adjacent equal values merge") {
        StepFunction f = StepFunction::make({{0, 1, 2}, {1, 2, 2}});
        REQUIRE(f.pieces().size() == 1);
        CHECK(f.pieces()[0].iv.lo == 0.0);
        CHECK(f.pieces()[0].iv.hi == 2.0);
        CHECK(f.pieces()[0].value == 2.0);
    }
    SUBCASE("empty input is the zero function") {
        StepFunction f = StepFunction::make({});
        CHECK(f.is_zero());
        CHECK(f.integral() == 0.0);
    }
    SUBCASE("conflicting overlap throws") {
        CHECK_THROWS_AS(StepFunction::make({{0, 2, 1}, {1, 3, 2}}), std::invalid_argument);
    }
    SUBCASE("degenerate interval throws") {
        CHECK_THROWS_AS(StepFunction::make({{2, 2, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(StepFunction::make({{3, 2, 1}}), std::invalid_argument);
    }
    SUBCASE("zero pieces are dropped, unsorted input sorted") {
        StepFunction f = StepFunction::make({{5, 6, 3}, {0, 1, 0}, {1, 2, 4}});
        REQUIRE(f.pieces().size() == 2);
        CHECK(f.pieces()[0].value == 4.0);
        CHECK(f.pieces()[1].value == 3.0);
    }
}

TEST_CASE("restrict") {
    StepFunction f = StepFunction::indicator(0, 4);
    SUBCASE("intersects the support") {
        IntervalSet F(std::vector<Interval>{{1, 2}, {3, 5}});
        StepFunction g = restrict_to(f, F);
        REQUIRE(g.pieces().size() == 2);
        CHECK(g.pieces()[0].iv.lo == doctest::Approx(1.0));
        CHECK(g.pieces()[0].iv.hi == doctest::Approx(2.0));
        CHECK(g.pieces()[1].iv.hi == doctest::Approx(4.0));
    }
    SUBCASE("restricting to own support is the identity") {
        StepFunction g = restrict_to(f, f.support());
        CHECK(equimeasurable(f, g, 0.0));
        CHECK(g.pieces().size() == 1);
    }
    SUBCASE("restricting to nothing gives zero") {
        CHECK(restrict_to(f, IntervalSet{}).is_zero());
    }
}

TEST_CASE("distribution function of a simple two-step function") {
    StepFunction f = StepFunction::make({{0, 1, 2}, {1, 3, 1}});
    DistributionFunction d = distribution(f);
    CHECK(d(0.0) == doctest::Approx(3.0));
    CHECK(d(0.5) == doctest::Approx(3.0));
    CHECK(d(1.0) == doctest::Approx(1.0));
    CHECK(d(1.5) == doctest::Approx(1.0));
    CHECK(d(2.0) == doctest::Approx(0.0));
    CHECK(d(5.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(d(-1.0), std::invalid_argument);
}

TEST_CASE("distribution of the zero function vanishes") {
    DistributionFunction d = distribution(StepFunction{});
    CHECK(d(0.0) == 0.0);
    CHECK(d(7.0) == 0.0);
}

TEST_CASE("distribution of a sampled divergence profile follows s^-2 - 1") {
    // Step discretization of t -> (t+1)^(-1/2) on (0, r]; for sampled s in
    // ((1+r)^(-1/2), 1) the measure above s is s^-2 - 1 up to one cell width.
    const double r = 9.0;
    const int n = 512;
    std::vector<std::tuple<double, double, double>> raw;
    for (int i = 1; i <= n; ++i) {
        double lo = r * (i - 1) / n, hi = r * i / n;
        raw.emplace_back(lo, hi, 1.0 / std::sqrt(hi + 1.0));
    }
    StepFunction f = StepFunction::make(raw);
    DistributionFunction d = distribution(f);
    double cell = r / n;
    for (double s : {0.4, 0.5, 0.7, 0.9}) {
        double expected = 1.0 / (s * s) - 1.0;
        CHECK(std::fabs(d(s) - expected) <= cell + 1e-12);
    }
}

TEST_CASE("decreasing rearrangement") {
    SUBCASE("reorders values descending") {
        StepFunction f = StepFunction::make({{0, 1, 1}, {1, 2, 3}});
        StepFunction g = decreasing_rearrangement(f);
        REQUIRE(g.pieces().size() == 2);
        CHECK(g.pieces()[0].value == 3.0);
        CHECK(g.pieces()[0].iv.hi == doctest::Approx(1.0));
        CHECK(g.pieces()[1].value == 1.0);
        CHECK(g.pieces()[1].iv.hi == doctest::Approx(2.0));
    }
    SUBCASE("already nonincreasing on (0, L] is unchanged") {
        StepFunction f = StepFunction::make({{0, 1, 5}, {1, 3, 2}});
        CHECK(equimeasurable(f, decreasing_rearrangement(f), 0.0));
        CHECK(decreasing_rearrangement(f).pieces()[0].iv.lo == 0.0);
    }
    SUBCASE("aggregates equal values across separated pieces") {
        StepFunction f = StepFunction::make({{0, 1, 2}, {5, 6, 2}, {2, 3, 7}});
        StepFunction g = decreasing_rearrangement(f);
        REQUIRE(g.pieces().size() == 2);
        CHECK(g.pieces()[0].value == 7.0);
        CHECK(g.pieces()[0].iv.hi == doctest::Approx(1.0));
        CHECK(g.pieces()[1].value == 2.0);
        CHECK(g.pieces()[1].iv.hi == doctest::Approx(3.0));
    }
}

TEST_CASE("equimeasurable") {
    StepFunction f = StepFunction::make({{0, 1, 2}, {1, 3, 1}});
    SUBCASE("shifts are equimeasurable") {
        StepFunction g = StepFunction::make({{4, 5, 2}, {5, 7, 1}});
        CHECK(equimeasurable(f, g, 0.0));
    }
    SUBCASE("scaling breaks it") {
        CHECK_FALSE(equimeasurable(f, f.scaled(2.0), 1e-6));
    }
    SUBCASE("negative tolerance throws") {
        CHECK_THROWS_AS(equimeasurable(f, f, -1.0), std::invalid_argument);
    }
}

TEST_CASE("step function invariant sweep on random inputs") {
    Rng rng(12345);
    for (int i = 0; i < 200; ++i) {
        StepFunction f = random_step_function(rng);
        StepFunction fstar = decreasing_rearrangement(f);

        // rearrangement preserves the distribution function exactly
        DistributionFunction df = distribution(f), dg = distribution(fstar);
        REQUIRE(df.steps().size() == dg.steps().size());
        for (std::size_t k = 0; k < df.steps().size(); ++k) {
            CHECK(df.steps()[k].threshold == dg.steps()[k].threshold);
            CHECK(df.steps()[k].measure_above ==
                  doctest::Approx(dg.steps()[k].measure_above).epsilon(1e-12));
        }

        // integral preserved
        CHECK(f.integral() == doctest::Approx(fstar.integral()).epsilon(1e-12));

        // equimeasurable is reflexive and symmetric
        CHECK(equimeasurable(f, f, 0.0));
        CHECK(equimeasurable(f, fstar, 1e-9) == equimeasurable(fstar, f, 1e-9));

        // restriction only shrinks the distribution
        IntervalSet F = random_interval_set(rng);
        DistributionFunction dr = distribution(restrict_to(f, F));
        for (double s : {0.0, 0.1, 1.0, 3.0, 9.0}) CHECK(dr(s) <= df(s) + 1e-12);
    }
}
