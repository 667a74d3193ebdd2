#pragma once

// Buchberger's algorithm (lex or graded reverse lex, reduced output) and the Lagrange-system
// elimination used as a sufficient block-positivity test.

#include "witnessgate/hermitian.hpp"
#include "witnessgate/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace witnessgate {

struct GroebnerLimits {
    long max_pairs = 100000;
    long max_terms = 100000;
    /// Search depth for the elimination polynomial when the quotient ring
    /// is infinite-dimensional.
    int max_elimination_degree = 256;
};

struct GroebnerCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroebnerStats {
    long pairs_processed = 0;
    long zero_reductions = 0;
    std::size_t max_terms_seen = 0;
};

struct GroebnerBasis {
    std::vector<MultiPoly> generators;  // reduced, monic, decreasing leading terms
    TermOrder order = TermOrder::Lex;
    GroebnerStats stats;
};

/// Full normal form of f modulo G (every term reduced).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

/// Reduced Groebner basis (lex unless asked otherwise). Pairs are taken in
/// normal-strategy order (smallest lcm first) after the product and chain
/// criteria. Throws GroebnerCapExceeded past either limit.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits = {},
                         TermOrder order = TermOrder::Lex);

/// Element of a lex basis involving only `var` (the last variable).
std::optional<QPoly> univariate_element(const GroebnerBasis& G, int var);

/// Monic generator of I intersected with Q[var] for a basis in any order:
/// the first linear dependency among the normal forms of 1, var, var^2, ...
/// For a lex basis with var last this is the univariate element. Empty when
/// no dependency shows up through max_degree.
std::optional<QPoly> elimination_polynomial(const GroebnerBasis& G, int var, int max_degree);

/// Number of standard monomials, or empty when the ideal is not
/// zero-dimensional (or the count passes `cap`).
std::optional<long> quotient_dimension(const GroebnerBasis& G, long cap = 1000000);

// --- Lagrange formulation -----------------------------------------------------

/// Coordinates of the contracted factor's unit vector plus the multiplier
/// and slack. For a qubit factor X_w depends on w only through
/// w w^dagger = (I + x sx + y sy + z sz) / 2, so the Bloch vector [x, y, z]
/// on the unit sphere is used. Otherwise the real parts and imaginary parts
/// [w1r, w2r, w2i, ..., wdr, wdi] with w1 real (the global phase is free).
/// Then lambda, then k.
struct LagrangeLayout {
    int d = 0;  // dimension of the contracted factor
    bool bloch = false;
    [[nodiscard]] int n_w() const { return bloch ? 3 : 2 * d - 1; }
    [[nodiscard]] int lambda() const { return n_w(); }
    [[nodiscard]] int k() const { return n_w() + 1; }
    [[nodiscard]] int nvars() const { return n_w() + 2; }
    [[nodiscard]] std::vector<std::string> names() const;
};

/// Which tensor factor is contracted: the smaller one (B on ties). X_w then
/// has the order of the other factor.
struct Contraction {
    bool over_b = true;
    int contracted_dim = 0;
    int order = 0;
    LagrangeLayout layout;
};
Contraction contraction_for(const BipartiteHermitian& X);

/// Sum of the order-n principal minors of X_w as a real polynomial in the
/// layout's coordinates.
MultiPoly minors_sum(const BipartiteHermitian& X, int n, const LagrangeLayout& layout);
MultiPoly minors_sum(const BipartiteHermitian& X, int n);

/// F = sum of squares of the sphere coordinates - 1.
MultiPoly sphere_constraint(const LagrangeLayout& layout);

/// Partials of L = M + k^2 + lambda F: one per sphere coordinate, then
/// d/dk = 2k and d/dlambda = F.
std::vector<MultiPoly> lagrange_system(const MultiPoly& M, const LagrangeLayout& layout);

/// Generators whose variety projects onto k as k^2 = -M at the critical
/// points of M on the unit sphere: the coordinate partials, F and M + k^2.
/// In w coordinates M is a form of degree 2n and Euler's identity adds
/// lambda - n k^2.
std::vector<MultiPoly> elimination_system(const MultiPoly& M, const LagrangeLayout& layout, int n);

struct MinorCheck {
    int n = 0;
    std::string method;   // "trace", "minors", "groebner"
    std::string outcome;  // "nonneg", "fails", "nonzero-root", "no-univariate", "cap"
    std::optional<QPoly> g_last;
};

struct SufficientResult {
    enum class Outcome { BlockPositive, Inconclusive } outcome = Outcome::Inconclusive;
    std::vector<MinorCheck> checks;
};

const char* to_string(SufficientResult::Outcome o);

struct SufficientOptions {
    GroebnerLimits limits;
    /// Basis order for the elimination. Graded reverse lex followed by the
    /// elimination polynomial yields the same g_-1 as a lex basis, faster.
    TermOrder order = TermOrder::GrevLex;
    /// Decide n = 1 and n = 2 exactly with the trace and summed-minor tests
    /// when the contracted factor is a qubit; otherwise eliminate every n.
    bool combined = true;
};

/// Result of the elimination for a single n.
MinorCheck groebner_minor_check(const BipartiteHermitian& X, int n, const GroebnerLimits& limits,
                                TermOrder order = TermOrder::GrevLex);

SufficientResult sufficient_block_positive(const BipartiteHermitian& X, const SufficientOptions& opts = {});

}  // namespace witnessgate
