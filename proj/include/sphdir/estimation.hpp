// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphdir/optim.hpp"
#include "sphdir/sample_matrix.hpp"
#include "sphdir/types.hpp"

namespace sphdir {

enum class FitMethod { mom, mle };

const char* fit_method_name(FitMethod m);

struct FitOptions {
    double eps_lower = 1e-6;    // box lower bound on every alpha_k
    double gtol = 1e-8;         // MLE projected-gradient tolerance (1/n scale)
    double step_tol = 1e-8;     // MLE ||alpha step|| tolerance
    long max_iter = 500;        // MLE optimizer iteration cap
    int memory = 10;            // L-BFGS history
    double mom_tol = 1e-13;     // MOM stop: |delta alpha0| < mom_tol * alpha0
    long mom_max_iter = 200000;
    bool mom_anchor_largest = false;  // anchor the first-moment equation at
                                      // the coordinate with largest mean
};

struct FitResult {
    AlphaVector alpha_hat;
    FitMethod method;
    long iterations = 0;
    bool converged = false;
    // MLE: projected-gradient inf-norm of the per-observation objective;
    // MOM: final |delta alpha0| / alpha0.
    double final_criterion = 0.0;
    std::optional<double> norm_error_vs_truth;  // percent, when truth known
    std::vector<std::string> notes;
};

/// -log L(alpha) = -n(p-1)ln2 - n lnGamma(alpha0) + n sum lnGamma(alpha_j)
///                 - sum_j (2 alpha_j - 1) S_j.
/// Throws std::domain_error when the sufficient statistics are not finite
/// (zero coordinates present in the data).
double neg_log_likelihood(const AlphaVector& alpha, const SampleMatrix& data);

/// Gradient: d/d alpha_k (-log L) = n [psi(alpha_k) - psi(alpha0)] - 2 S_k.
std::vector<double> nll_gradient(const AlphaVector& alpha,
                                 const SampleMatrix& data);

/// Maximum likelihood via box-constrained L-BFGS from alpha = (1,...,1)
/// (or `start`). If the first run fails to converge, retries once from the
/// method-of-moments estimate.
FitResult fit_mle(const SampleMatrix& data,
                  const std::optional<AlphaVector>& start = std::nullopt,
                  const FitOptions& options = {});

/// Method of moments on the sample's empirical moments.
FitResult fit_mom(const SampleMatrix& data, const FitOptions& options = {});

/// Method of moments on externally supplied moments: m1[k] = E(x_k),
/// m2[k] = E(x_k^2). The fixed point alternates alpha_j = alpha0 * m2[j]
/// (j != anchor) with a 1-D bracketed root solve of
/// Gamma(a+1/2)/Gamma(a) = m1[anchor] * Gamma(alpha0+1/2)/Gamma(alpha0)
/// for the anchor coordinate.
FitResult fit_mom_from_moments(const std::vector<double>& m1,
                               const std::vector<double>& m2,
                               const FitOptions& options = {});

/// 100 * ||estimate - truth||_2 / ||truth||_2.
double norm_error_pct(const AlphaVector& estimate, const AlphaVector& truth);

}  // namespace sphdir
