#include <doctest.h>

#include <cmath>

#include "normlab/garling_seq.hpp"
#include "normlab/sampling.hpp"
#include "normlab/weights.hpp"

using namespace normlab;

namespace {
SequenceWeights harmonic_weights(double p) {
    return SequenceWeights({1.0, 0.5, 1.0 / 3.0, 0.25}, p);
}
}  // namespace

TEST_CASE("gnorm on pinned examples") {
    SUBCASE("single unit vector") {
        CHECK(gnorm({1.0}, SequenceWeights({1.0}, 1.0)) == doctest::Approx(1.0));
    }
    SUBCASE("(2,3,1) with harmonic weights takes the identity subsequence") {
        CHECK(gnorm({2, 3, 1}, harmonic_weights(1.0)) == doctest::Approx(23.0 / 6.0));
    }
    SUBCASE("zeros are skipped without wasting slots") {
        CHECK(gnorm({0, 5, 0, 5}, harmonic_weights(1.0)) == doctest::Approx(7.5));
    }
    SUBCASE("empty sequence") {
        CHECK(gnorm({}, harmonic_weights(1.0)) == 0.0);
    }
}

TEST_CASE("gnorm_bruteforce") {
    SUBCASE("matches the pinned examples") {
        CHECK(gnorm_bruteforce({2, 3, 1}, harmonic_weights(1.0)) == doctest::Approx(23.0 / 6.0));
        CHECK(gnorm_bruteforce({0, 5, 0, 5}, harmonic_weights(1.0)) == doctest::Approx(7.5));
    }
    SUBCASE("zero sequence and singletons") {
        CHECK(gnorm_bruteforce({0, 0}, harmonic_weights(2.0)) == 0.0);
        // single nonzero value a at any index gives a * w(1)^(1/p)
        CHECK(gnorm_bruteforce({0, 0, 3}, harmonic_weights(2.0)) == doctest::Approx(3.0));
    }
    SUBCASE("refuses oversized input") {
        FiniteSequence big(21, 1.0);
        CHECK_THROWS_AS(gnorm_bruteforce(big, SequenceWeights::power(0.5, 1.0, 21)),
                        std::length_error);
    }
}

TEST_CASE("gnorm equals the brute-force oracle on random instances") {
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        auto f = random_sequence(rng, 12);
        double p = (i % 3 == 0) ? 1.0 : (i % 3 == 1 ? 1.5 : 2.0);
        SequenceWeights w = SequenceWeights::power(rng.uniform(0.2, 1.0), p, f.size() + 1);
        double a = gnorm(f, w), b = gnorm_bruteforce(f, w);
        CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, b));
    }
}

TEST_CASE("gnorm on nonincreasing input takes the identity subsequence") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        int n = static_cast<int>(rng.uniform_int(1, 12));
        FiniteSequence f(n);
        double v = rng.uniform(5.0, 10.0);
        for (int j = 0; j < n; ++j) {
            f[j] = v;
            v *= rng.uniform(0.5, 1.0);
        }
        SequenceWeights w = SequenceWeights::power(0.5, 1.0, n);
        double direct = 0.0;
        for (int j = 0; j < n; ++j) direct += f[j] * w.at(j + 1);
        CHECK(gnorm(f, w) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("gnorm structural invariants") {
    Rng rng(555);
    SequenceWeights w = SequenceWeights::power(0.5, 1.5, 16);
    for (int i = 0; i < 100; ++i) {
        auto f = random_sequence(rng, 10);

        // homogeneity
        double c = rng.uniform(0.1, 4.0);
        FiniteSequence cf = f;
        for (double& v : cf) v *= c;
        CHECK(gnorm(cf, w) == doctest::Approx(c * gnorm(f, w)).epsilon(1e-10));

        // 1-unconditionality: |a| <= |b| pointwise implies gnorm(a) <= gnorm(b)
        FiniteSequence smaller = f;
        for (double& v : smaller) v *= rng.uniform(0.0, 1.0);
        CHECK(gnorm(smaller, w) <= gnorm(f, w) + 1e-10);

        // 1-subsymmetry: spreading the coefficients along an increasing index
        // subset agrees with restricting to that subset.
        FiniteSequence spread(f.size() * 2, 0.0);
        FiniteSequence masked(f.size(), 0.0);
        std::size_t pos = 0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (rng.uniform() < 0.6) {
                masked[j] = f[j];
                spread[pos] = f[j];
                pos += 1 + static_cast<std::size_t>(rng.uniform_int(0, 1));
            }
        }
        CHECK(gnorm(spread, w) == doctest::Approx(gnorm(masked, w)).epsilon(1e-12));
    }
}

TEST_CASE("weights_from_W") {
    WeightFunction W = WeightFunction::power(0.5);
    SequenceWeights w = weights_from_W(W, 8);
    CHECK(W.cumulative(1.0) == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)));
    CHECK(w.at(1) == doctest::Approx(1.0));
    CHECK(w.at(2) ==
          doctest::Approx((std::sqrt(3.0) - std::sqrt(2.0)) / (std::sqrt(2.0) - 1.0)));
    for (std::size_t k = 2; k <= 8; ++k) CHECK(w.at(k) <= w.at(k - 1) + 1e-15);
}

TEST_CASE("ryff_matching") {
    SUBCASE("value-sorted positional matching") {
        auto m = ryff_matching({3, 0, 2}, {2, 3, 0});
        REQUIRE(m.size() == 2);
        CHECK(m[0] == std::pair<std::size_t, std::size_t>{0, 1});
        CHECK(m[1] == std::pair<std::size_t, std::size_t>{2, 0});
    }
    SUBCASE("identity on equal inputs") {
        auto m = ryff_matching({1, 0, 4}, {1, 0, 4});
        for (auto [a, b] : m) CHECK(a == b);
    }
    SUBCASE("ties break by index") {
        auto m = ryff_matching({1, 1, 0}, {0, 1, 1});
        REQUIRE(m.size() == 2);
        CHECK(m[0] == std::pair<std::size_t, std::size_t>{0, 1});
        CHECK(m[1] == std::pair<std::size_t, std::size_t>{1, 2});
    }
    SUBCASE("rejects non-equimeasurable inputs") {
        CHECK_THROWS_AS(ryff_matching({1, 2}, {1, 3}), std::invalid_argument);
        CHECK_THROWS_AS(ryff_matching({1, 2}, {1, 0}), std::invalid_argument);
    }
    SUBCASE("random pairs: g(m(i)) = f(i) and m is a support bijection") {
        Rng rng(31);
        for (int t = 0; t < 50; ++t) {
            auto f = random_sequence(rng, 10);
            // permute |f| into g
            FiniteSequence g(f.size(), 0.0);
            std::vector<std::size_t> perm(f.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[rng.uniform_int(0, static_cast<std::int64_t>(i) - 1)]);
            for (std::size_t i = 0; i < f.size(); ++i) g[perm[i]] = std::fabs(f[i]);
            auto m = ryff_matching(f, g);
            std::vector<bool> hit(g.size(), false);
            for (auto [i, j] : m) {
                CHECK(g[j] == doctest::Approx(std::fabs(f[i])));
                CHECK_FALSE(hit[j]);
                hit[j] = true;
            }
        }
    }
}

TEST_CASE("sequence weight validation") {
    CHECK_THROWS_AS(SequenceWeights({1.0, 2.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SequenceWeights({1.0, -0.5}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SequenceWeights({1.0}, 0.5), std::invalid_argument);
    SequenceWeights fixed({1.0, 0.5}, 1.0);
    CHECK_THROWS_AS(fixed.at(3), std::out_of_range);
    SequenceWeights lazy = SequenceWeights::power(1.0, 1.0, 2);
    CHECK(lazy.at(10) == doctest::Approx(0.1));
}
