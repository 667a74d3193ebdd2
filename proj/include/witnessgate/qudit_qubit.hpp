#pragma once

// Necessary block-positivity test for d x 2 operators from the trace of X_w
// and its order-2 principal minors.

#include "witnessgate/witness2x2.hpp"

#include <optional>
#include <string>

namespace witnessgate {

struct PairSelector {
    int l;
    int k;
    PairSelector(int l_, int k_) : l(l_), k(k_) {
        if (l_ < 1 || l_ >= k_) throw std::invalid_argument("pair selector needs 1 <= l < k");
    }
};

CCoefficients pair_c_coefficients(const BipartiteHermitian& X, const PairSelector& sel);

/// Coefficient-wise sum over all pairs: W of the sum of 2x2 principal minors.
CCoefficients summed_c_coefficients(const BipartiteHermitian& X);

struct NecessaryResult {
    enum class Outcome { Fails, Inconclusive } outcome = Outcome::Inconclusive;
    /// "trace", "sum" or "pair"; empty when inconclusive.
    std::string violated;
    std::optional<PairSelector> pair;
    std::optional<std::pair<Rational, Rational>> counterexample;  // (r, t)
    std::optional<ProductCertificate> certificate;
};

/// A product vector with negative expectation given some w for which X_w has
/// a negative diagonal entry or a negative 2x2 principal minor.
ProductCertificate certificate_from_w(const BipartiteHermitian& X, const GaussVector& w);

/// w realizing a determinant failure of the coefficients c at (r, t),
/// preferring basis vectors when c1 < 0 or c6 < 0.
GaussVector determinant_failure_w(const CCoefficients& c, const std::pair<Rational, Rational>& rt);

/// Checks the trace condition, every pair (l, k), then the summed minors.
/// Any failure proves X is not block-positive.
NecessaryResult necessary_block_positive(const BipartiteHermitian& X);

const char* to_string(NecessaryResult::Outcome o);

}  // namespace witnessgate
