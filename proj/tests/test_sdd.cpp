// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sphdir/rng.hpp"
#include "sphdir/sdd.hpp"
#include "sphdir/types.hpp"

using namespace sphdir;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Uniform random point on the positive orthant: normalized |N(0,1)| draws.
SpherePoint random_orthant_point(std::size_t p, RandomSource& rng) {
    std::vector<double> x(p);
    for (double& v : x) v = std::fabs(rng.normal());
    return SpherePoint::normalized(std::move(x));
}

AlphaVector random_alpha(std::size_t p, double lo, double hi,
                         RandomSource& rng) {
    std::vector<double> a(p);
    for (double& v : a) v = lo + rng.uniform() * (hi - lo);
    return AlphaVector(std::move(a));
}

}  // namespace

TEST_CASE("AlphaVector validates and caches the sum") {
    const AlphaVector a({1.5, 2.5, 3.0});
    CHECK(a.alpha0() == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(a.dim() == 3);
    CHECK_THROWS_AS(AlphaVector({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(AlphaVector({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(AlphaVector({1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(AlphaVector({1.0, std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
}

TEST_CASE("SpherePoint enforces the orthant and the unit norm") {
    CHECK_NOTHROW(SpherePoint({kInvSqrt2, kInvSqrt2}));
    CHECK_NOTHROW(SpherePoint({1.0, 0.0}));
    CHECK_THROWS_AS(SpherePoint({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(SpherePoint({-kInvSqrt2, kInvSqrt2}), std::invalid_argument);
    CHECK_THROWS_AS(SpherePoint({1.0}), std::invalid_argument);
    const SpherePoint q = SpherePoint::normalized({3.0, 4.0});
    CHECK(q[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(q[1] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK_THROWS_AS(SpherePoint::normalized({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("log_normalizer closed forms") {
    // 2^1 Gamma(2)/Gamma(1)^2 = 2
    CHECK(log_normalizer(AlphaVector({1.0, 1.0})) ==
          doctest::Approx(0.693147180559945309).epsilon(1e-14));
    // uniform cases collapse to 2/pi in both dimensions
    CHECK(log_normalizer(AlphaVector({0.5, 0.5})) ==
          doctest::Approx(-0.451582705289454865).epsilon(1e-13));
    CHECK(log_normalizer(AlphaVector({0.5, 0.5, 0.5})) ==
          doctest::Approx(-0.451582705289454865).epsilon(1e-13));
}

TEST_CASE("log_density and density reference values") {
    // density 2 x1 x2 = 1 at the diagonal
    CHECK(log_density(SpherePoint({kInvSqrt2, kInvSqrt2}),
                      AlphaVector({1.0, 1.0})) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(density(SpherePoint({kInvSqrt2, kInvSqrt2}), AlphaVector({1.0, 1.0})) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // p=2, alpha=(3,3): 2 * Gamma(6)/Gamma(3)^2 * (1/sqrt(2))^10 = 60/32
    CHECK(density(SpherePoint({kInvSqrt2, kInvSqrt2}), AlphaVector({3.0, 3.0})) ==
          doctest::Approx(1.875).epsilon(1e-13));
    // uniform p=3 constant
    RandomSource rng(5);
    const AlphaVector half({0.5, 0.5, 0.5});
    CHECK(log_density(random_orthant_point(3, rng), half) ==
          doctest::Approx(-0.451582705289454865).epsilon(1e-13));
    CHECK(density(SpherePoint({1.0, 0.0, 0.0}), half) ==
          doctest::Approx(0.636619772367581343).epsilon(1e-13));
}

TEST_CASE("boundary zeros: vanishing, neutral, and divergent exponents") {
    const SpherePoint edge({1.0, 0.0});
    // exponent positive: density is zero
    CHECK(log_density(edge, AlphaVector({1.0, 1.0})) ==
          -std::numeric_limits<double>::infinity());
    CHECK(density(edge, AlphaVector({1.0, 1.0})) == 0.0);
    // exponent exactly zero: the factor drops out; here the whole density is 1
    CHECK(log_density(edge, AlphaVector({1.0, 0.5})) ==
          doctest::Approx(0.0).epsilon(1e-14));
    // exponent negative: divergent, reported as an error
    CHECK_THROWS_AS(log_density(edge, AlphaVector({1.0, 0.4})),
                    std::domain_error);
    CHECK_THROWS_AS(density(edge, AlphaVector({1.0, 0.4})), std::domain_error);
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(log_density(SpherePoint({kInvSqrt2, kInvSqrt2}),
                                AlphaVector({1.0, 1.0, 1.0})),
                    std::invalid_argument);
}

TEST_CASE("moments closed forms") {
    SUBCASE("p=2 symmetric unit alpha") {
        const MomentSummary m = moments(AlphaVector({1.0, 1.0}));
        // E(x_i) = (sqrt(pi)/2) / (0.75 sqrt(pi)) = 2/3; matches the angular
        // integral of 2 cos^2 t sin t as well.
        CHECK(m.mean[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(m.mean[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(m.mu[0] == doctest::Approx(0.886226925452758014).epsilon(1e-14));
        CHECK(m.mu0 == doctest::Approx(1.32934038817913702).epsilon(1e-14));
        CHECK(m.second_raw[0] == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("second raw moments are alpha_i/alpha0 and sum to 1") {
        const MomentSummary m = moments(AlphaVector({2.0, 2.0, 2.0}));
        for (double v : m.second_raw)
            CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        RandomSource rng(7);
        for (int rep = 0; rep < 20; ++rep) {
            const AlphaVector a = random_alpha(2 + rep % 4, 0.2, 30.0, rng);
            const MomentSummary mm = moments(a);
            double sum = 0.0;
            for (double v : mm.second_raw) sum += v;
            CHECK(std::fabs(sum - 1.0) <= 1e-14);
            // mean = C * mean_direction elementwise; direction is unit norm
            double dir2 = 0.0;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                CHECK(mm.mean[i] ==
                      doctest::Approx(mm.resultant_length * mm.mean_direction[i])
                          .epsilon(1e-13));
                dir2 += mm.mean_direction[i] * mm.mean_direction[i];
            }
            CHECK(std::fabs(std::sqrt(dir2) - 1.0) <= 1e-14);
            CHECK(mm.resultant_length > 0.0);
            CHECK(mm.resultant_length < 1.0);
        }
    }
    SUBCASE("symmetric concentration pushes the mean to 1/sqrt(p)") {
        const MomentSummary m = moments(AlphaVector({1e6, 1e6, 1e6}));
        for (double v : m.mean)
            CHECK(std::fabs(v - 0.577350269189625765) < 1e-6);
    }
}

TEST_CASE("covariance entries and identities") {
    SUBCASE("p=2 symmetric unit alpha closed form") {
        const SymMatrix s = covariance(AlphaVector({1.0, 1.0}));
        CHECK(s(0, 0) == doctest::Approx(1.0 / 18.0).epsilon(1e-13));
        CHECK(s(1, 1) == doctest::Approx(1.0 / 18.0).epsilon(1e-13));
        // off-diagonal: (1/2 - 1/mu0^2) mu1 mu2 = pi/8 - 4/9
        CHECK(s(0, 1) ==
              doctest::Approx(-0.0517453627457202896).epsilon(1e-12));
        CHECK(s(0, 1) == s(1, 0));
    }
    SUBCASE("three printed forms agree and trace = 1 - C^2") {
        RandomSource rng(8);
        for (int rep = 0; rep < 50; ++rep) {
            const std::size_t p = 2 + rep % 5;
            const AlphaVector a = random_alpha(p, 0.3, 30.0, rng);
            const SymMatrix s1 = covariance(a);
            const SymMatrix s2 = covariance_rank_one_form(a);
            const SymMatrix s3 = covariance_mean_direction_form(a);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < p; ++j) {
                    CHECK(std::fabs(s1(i, j) - s2(i, j)) <= 1e-12);
                    CHECK(std::fabs(s1(i, j) - s3(i, j)) <= 1e-12);
                }
            const MomentSummary m = moments(a);
            CHECK(std::fabs(s1.trace() -
                            (1.0 - m.resultant_length * m.resultant_length)) <=
                  1e-12);
        }
    }
    SUBCASE("covariance vanishes as concentration grows") {
        const SymMatrix s = covariance(AlphaVector({1e6, 1e6, 1e6}));
        CHECK(s.max_abs() < 1e-5);
    }
}

TEST_CASE("mode closed form") {
    const SpherePoint m3 = mode(AlphaVector({2.0, 2.0, 2.0}));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(m3[i] == doctest::Approx(0.577350269189625765).epsilon(1e-13));
    const SpherePoint m2 = mode(AlphaVector({1.0, 3.0}));
    CHECK(m2[0] == doctest::Approx(0.408248290463863016).epsilon(1e-13));
    CHECK(m2[1] == doctest::Approx(0.912870929175276856).epsilon(1e-13));
    CHECK_THROWS_AS(mode(AlphaVector({0.4, 2.0, 2.0})), std::domain_error);
    CHECK_THROWS_AS(mode(AlphaVector({0.5, 2.0})), std::domain_error);
}

TEST_CASE("mode maximizes the log density") {
    RandomSource rng(9);
    for (const auto& av : {std::vector<double>{0.8, 1.7},
                           std::vector<double>{2.0, 5.0, 0.9},
                           std::vector<double>{4.0, 1.2, 2.5, 3.3}}) {
        const AlphaVector a(av);
        const double at_mode = log_density(mode(a), a);
        for (int rep = 0; rep < 1000; ++rep) {
            const SpherePoint x = random_orthant_point(a.dim(), rng);
            CHECK(log_density(x, a) <= at_mode + 1e-12);
        }
    }
}

TEST_CASE("uniform case: constant density equal to the reciprocal area") {
    RandomSource rng(10);
    for (std::size_t p : {std::size_t{2}, std::size_t{3}}) {
        const AlphaVector a(std::vector<double>(p, 0.5));
        CHECK(is_uniform(a));
        const double expected = uniform_log_density(p);
        // both orthants have area pi/2, so the constant is 2/pi either way
        CHECK(expected == doctest::Approx(-0.451582705289454865).epsilon(1e-13));
        for (int rep = 0; rep < 100; ++rep) {
            const SpherePoint x = random_orthant_point(p, rng);
            CHECK(std::fabs(log_density(x, a) - expected) <= 1e-12);
        }
    }
    CHECK_FALSE(is_uniform(AlphaVector({0.5, 0.6})));
    // p=9: 2^8 Gamma(4.5) / pi^4.5
    CHECK(uniform_log_density(9) ==
          doctest::Approx(2.84762952899970391).epsilon(1e-13));
}

TEST_CASE("mean approaches the symmetric mode monotonically") {
    for (std::size_t p : {std::size_t{2}, std::size_t{3}}) {
        const double target = 1.0 / std::sqrt(static_cast<double>(p));
        double prev = std::numeric_limits<double>::infinity();
        for (double a : {10.0, 100.0, 1e4}) {
            const MomentSummary m = moments(AlphaVector(std::vector<double>(p, a)));
            const double gap = std::fabs(m.mean[0] - target);
            CHECK(gap < prev);
            prev = gap;
        }
    }
}

TEST_CASE("smallest_eigenvalue on a known matrix") {
    SymMatrix m(2);
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    m(0, 1) = m(1, 0) = 1.0;
    CHECK(smallest_eigenvalue(m) == doctest::Approx(1.0).epsilon(1e-12));
}
