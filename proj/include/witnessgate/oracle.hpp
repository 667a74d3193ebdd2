#pragma once

// Floating-point estimate of the minimal local value
//   mu = min over unit v, w of <v (x) w| X |v (x) w>
// by see-saw minimization from seeded starts. The objective is linear in the
// state, and the extreme points of the separable set are pure products, so
// minimizing over product vectors gives the minimum over separable states.

#include "witnessgate/hermitian.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace witnessgate {

using CVector = std::vector<std::complex<double>>;

struct OracleOptions {
    int restarts = 0;  // random starts; 0 means 8 * dA * dB
    double tol = 1e-13;
    std::uint64_t seed = 1;
    int max_iterations = 5000;
};

struct OracleEstimate {
    double mu_hat = 0;
    CVector argmin_v;
    CVector argmin_w;
    int restarts = 0;  // starts actually run, including the axis starts
    bool converged = false;
};

OracleEstimate estimate_mu(const BipartiteHermitian& X, const OracleOptions& opts = {});

/// Smallest eigenvalue in double precision.
double lambda_min(const BipartiteHermitian& X);

/// Exact <v (x) w|X|v (x) w> / (|v|^2 |w|^2) at the dyadic rationals nearest
/// the given double vectors.
Rational exact_objective(const BipartiteHermitian& X, const CVector& v, const CVector& w);

}  // namespace witnessgate
