#pragma once

// Exact classification of Hermitian operators on C^2 (x) C^2: PSD test,
// trace condition, det(X_w) >= 0 for all w via W(r, t), and product-vector
// certificates for operators that are not block-positive.

#include "witnessgate/hermitian.hpp"
#include "witnessgate/quartic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace witnessgate {

struct TraceData {
    Rational tau1;
    Rational tau2;
    GaussRational xi;
};

/// tau1 = sum_i X_{i1,i1}, tau2 = sum_i X_{i2,i2}, xi = sum_i X_{i1,i2}; dB = 2.
TraceData trace_tau_xi(const BipartiteHermitian& X);

/// tr(X_w) >= 0 for all w:  tau1 + tau2 >= 0 and tau1 tau2 >= |xi|^2.
bool trace_condition(const TraceData& td);

/// c1..c6 of the 2x2 block pair (rows l, k of H_A, 1-based) of a d x 2
/// operator: det of the pair's 2x2 block of X_w, w = (1, z), equals
/// c1|z|^4 + 2Re(c2 z|z|^2) + 2Re(c3 z^2) + c4|z|^2 + 2Re(c5 z) + c6.
CCoefficients block_pair_coefficients(const BipartiteHermitian& X, int l, int k);

/// The coefficients of a 2 x 2 operator, written out entry by entry.
CCoefficients c_coefficients(const BipartiteHermitian& X);

/// Polynomial in r whose coefficients are polynomials in t.
struct BivariateRT {
    std::vector<QPoly> by_r;  // by_r[k] multiplies r^k

    [[nodiscard]] Rational eval(const Rational& r, const Rational& t) const;
    /// Specialization at t, as a polynomial in r.
    [[nodiscard]] QPoly at_t(const Rational& t) const;
};

/// W(r, t) = (t^2+1)^2 det(X_w) for w = (1, r e^{i phi}), cos phi = (1-t^2)/(1+t^2).
BivariateRT build_W(const CCoefficients& c);
/// V(r, t): the same with w = (r e^{-i phi}, 1); W's r-coefficients reversed.
BivariateRT build_V(const CCoefficients& c);

/// w = (1, r ((1 - t^2) + 2t i) / (1 + t^2)).
GaussVector stereographic_w(const Rational& r, const Rational& t);

struct DetResult {
    bool holds = true;
    /// W(r, t) < 0 there, when !holds.
    std::optional<std::pair<Rational, Rational>> counterexample;
    std::string reason;
};

/// det(X_w) >= 0 for every w in C^2, decided from the coefficients alone.
DetResult det_nonneg_all_w(const CCoefficients& c);

struct ProductCertificate {
    GaussVector v;
    GaussVector w;
    Rational value;  // <v (x) w| X |v (x) w> < 0
};

struct PositiveSemidefinite {};
struct EntanglementWitness {
    /// False only when the g_Delta test rules weak optimality out.
    bool weakly_optimal_possible = true;
};
struct NotBlockPositive {
    ProductCertificate certificate;
    std::string failure_site;
};
struct NotWitnessMultiNegative {
    int n_neg = 0;
};

using Verdict = std::variant<PositiveSemidefinite, EntanglementWitness, NotBlockPositive, NotWitnessMultiNegative>;

const char* verdict_name(const Verdict& v);

struct FailureSite {
    enum class Kind { Trace, Determinant } kind;
    std::optional<std::pair<Rational, Rational>> rt;  // for Determinant
};

/// A rational v with <v|M|v> < 0 for a Hermitian 2x2 (or larger, using the
/// leading 2x2 block of the pair (p, q)) matrix M that is not PSD on that block.
GaussVector negative_direction_2x2(const GaussMatrix& M, std::size_t p = 0, std::size_t q = 1);

/// Exactly verified certificate; throws std::logic_error when the recovered
/// vector is not negative.
ProductCertificate extract_certificate(const BipartiteHermitian& X, const FailureSite& site);

/// Necessary condition for weak optimality: g_Delta has a real root (or
/// vanishes identically). Requires c1 > 0 and c6 > 0.
bool weak_optimality_necessary(const BipartiteHermitian& X);

Verdict classify(const BipartiteHermitian& X);

}  // namespace witnessgate
