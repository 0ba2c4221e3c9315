// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sphdir/rng.hpp"
#include "sphdir/specfun.hpp"

using namespace sphdir;

TEST_CASE("log_gamma at exact reference points") {
    CHECK(std::fabs(specfun::log_gamma(1.0)) < 5e-14);
    CHECK(std::fabs(specfun::log_gamma(2.0)) < 5e-14);
    // Gamma(1/2) = sqrt(pi)
    CHECK(specfun::log_gamma(0.5) ==
          doctest::Approx(0.572364942924700087).epsilon(1e-14));
    // Gamma(10) = 9!
    CHECK(specfun::log_gamma(10.0) ==
          doctest::Approx(12.8018274800814696).epsilon(1e-14));
}

TEST_CASE("log_gamma recurrence lgamma(x+1) = lgamma(x) + ln x") {
    RandomSource rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double x = 0.01 + rng.uniform() * 99.99;
        const double lhs = specfun::log_gamma(x + 1.0);
        const double rhs = specfun::log_gamma(x) + std::log(x);
        CHECK(std::fabs(lhs - rhs) <=
              1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)}));
    }
}

TEST_CASE("digamma at exact reference points") {
    // psi(1) = -euler_gamma
    CHECK(specfun::digamma(1.0) ==
          doctest::Approx(-0.577215664901532861).epsilon(1e-13));
    // psi(1/2) = -euler_gamma - 2 ln 2
    CHECK(specfun::digamma(0.5) ==
          doctest::Approx(-1.96351002602142348).epsilon(1e-13));
    // psi(2) = 1 - euler_gamma
    CHECK(specfun::digamma(2.0) ==
          doctest::Approx(0.422784335098467139).epsilon(1e-13));
}

TEST_CASE("digamma is the derivative of log_gamma") {
    RandomSource rng(12);
    const double h = 1e-6;
    for (int i = 0; i < 200; ++i) {
        const double x = 0.1 + rng.uniform() * 49.9;
        const double fd =
            (specfun::log_gamma(x + h) - specfun::log_gamma(x - h)) / (2.0 * h);
        CHECK(std::fabs(specfun::digamma(x) - fd) <= 1e-6);
    }
}

TEST_CASE("gamma_half_ratio reference values") {
    // Gamma(3/2)/Gamma(1) = sqrt(pi)/2
    CHECK(specfun::gamma_half_ratio(1.0) ==
          doctest::Approx(0.886226925452758014).epsilon(1e-14));
    // Gamma(5/2)/Gamma(2) = 0.75 sqrt(pi)
    CHECK(specfun::gamma_half_ratio(2.0) ==
          doctest::Approx(1.32934038817913702).epsilon(1e-14));
    // Large-argument value tracks sqrt(x)(1 - 1/(8x) + ...)
    CHECK(specfun::gamma_half_ratio(1e8) ==
          doctest::Approx(9999.9999875000000078).epsilon(1e-12));
}

TEST_CASE("gamma_half_ratio approaches sqrt(x) from below") {
    for (double x : {1e4, 1e6, 1e8}) {
        const double dev = specfun::gamma_half_ratio(x) / std::sqrt(x) - 1.0;
        CHECK(std::fabs(dev) < 1.0 / (8.0 * x) + 1e-10);
    }
}

TEST_CASE("gamma_half_ratio monotone and bracketed by sqrt(x-1/4), sqrt(x)") {
    double prev = 0.0;
    for (double x : {0.3, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6}) {
        const double r = specfun::gamma_half_ratio(x);
        CHECK(r > prev);
        CHECK(r > std::sqrt(x - 0.25));
        CHECK(r < std::sqrt(x));
        prev = r;
    }
}

TEST_CASE("gamma_ratio carries its shift and stays positive") {
    const specfun::GammaRatio r = specfun::gamma_ratio(3.0, 2.0);
    CHECK(r.numerator_shift == 2.0);
    // Gamma(5)/Gamma(3) = 24/2 = 12
    CHECK(r.value == doctest::Approx(12.0).epsilon(1e-13));
    CHECK(specfun::gamma_ratio(1e300, 0.0).value == doctest::Approx(1.0));
    CHECK(specfun::gamma_ratio(250.0, 0.5).value > 0.0);
}

TEST_CASE("domain errors for nonpositive arguments") {
    CHECK_THROWS_AS(specfun::log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::log_gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(specfun::digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::digamma(-3.0), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma_half_ratio(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma_half_ratio(-0.1), std::domain_error);
}
