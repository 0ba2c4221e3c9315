// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "sphdir/rng.hpp"
#include "sphdir/sample_matrix.hpp"
#include "sphdir/types.hpp"

namespace sphdir {

/// One Gamma(shape, 1) draw by the Marsaglia-Tsang squeeze method; for
/// shape < 1 uses the boost Gamma(a) = Gamma(a+1) * U^(1/a).
double sample_gamma(double shape, RandomSource& source);

/// One Dirichlet(alpha) draw: independent gammas normalized by their sum.
std::vector<double> sample_dirichlet(const AlphaVector& alpha,
                                     RandomSource& source);

/// n independent draws from the spherical-Dirichlet distribution: the
/// square-root map applied to Dirichlet draws, renormalized so every row is
/// unit-norm to 1e-12.
SampleMatrix sample_sdd(const AlphaVector& alpha, std::size_t n,
                        RandomSource& source);

}  // namespace sphdir
