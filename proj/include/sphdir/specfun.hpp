// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace sphdir::specfun {

/// Ratio Gamma(x + shift) / Gamma(x), kept together with the shift that
/// produced it. Always evaluated in log space so that large arguments
/// never overflow.
struct GammaRatio {
    double numerator_shift;
    double value;
};

/// ln Gamma(x) for x > 0. Stirling series after an upward recurrence
/// shift into x >= 10. Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0. Recurrence shift into x >= 6,
/// then an eight-term asymptotic series. Throws std::domain_error for
/// x <= 0.
double digamma(double x);

/// ln Gamma(x + shift) - ln Gamma(x) for x > 0, shift >= 0.
///
/// For large x the two log-gamma values agree to many digits and the
/// naive difference loses most of its precision, so this switches to a
/// direct expansion of the difference. Needed for ratios like
/// Gamma(x + 1/2)/Gamma(x) at x ~ 1e8 where the result must track
/// sqrt(x) to full precision.
double log_gamma_ratio(double x, double shift);

/// Gamma(x + 1/2) / Gamma(x), the half-step ratio that builds every
/// first moment of the distribution. Monotone increasing in x and
/// bounded by sqrt(x - 1/4) < ratio < sqrt(x) for x > 1/4.
double gamma_half_ratio(double x);

/// General ratio Gamma(x + shift)/Gamma(x) carried with its shift.
GammaRatio gamma_ratio(double x, double shift);

}  // namespace sphdir::specfun
