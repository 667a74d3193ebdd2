#include "helpers.hpp"
#include "witnessgate/families.hpp"
#include "witnessgate/witness2x2.hpp"

#include <doctest.h>

using namespace wg_test;

namespace {

Rational det2(const GaussMatrix& M) {
    const GaussRational d = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    REQUIRE(d.is_real());
    return d.re;
}

}  // namespace

TEST_CASE("canonical verdicts") {
    CHECK(std::string(verdict_name(classify(swap22()))) == "EntanglementWitness");
    CHECK(std::holds_alternative<PositiveSemidefinite>(classify(BipartiteHermitian::identity(2, 2))));
    const Verdict v = classify(diag(2, 2, {1, 1, 1, -1}));
    REQUIRE(std::holds_alternative<NotBlockPositive>(v));
    const auto& c = std::get<NotBlockPositive>(v).certificate;
    CHECK(c.v == GaussVector{GaussRational(), GaussRational(q(1))});
    CHECK(c.w == GaussVector{GaussRational(), GaussRational(q(1))});
    CHECK(c.value == -1);
    CHECK(std::holds_alternative<NotWitnessMultiNegative>(classify(diag(2, 2, {1, -1, 1, -1}))));
}

TEST_CASE("minus identity certificate") {
    const ProductCertificate c = extract_certificate(BipartiteHermitian::identity(2, 2).scaled(q(-1)),
                                                     FailureSite{FailureSite::Kind::Trace, std::nullopt});
    CHECK(c.v == GaussVector{GaussRational(q(1)), GaussRational()});
    CHECK(c.w == GaussVector{GaussRational(q(1)), GaussRational()});
    CHECK(c.value == -1);
}

TEST_CASE("trace data") {
    CHECK(trace_tau_xi(BipartiteHermitian::identity(3, 2)).tau1 == 3);
    const TraceData z = trace_tau_xi(diag(2, 2, {0, 0, 0, 0}));
    CHECK((z.tau1 == 0 && z.tau2 == 0 && z.xi.is_zero()));
    CHECK(trace_condition(trace_tau_xi(swap22())));
    CHECK_FALSE(trace_condition(TraceData{q(1), q(1), GaussRational(q(1), q(1))}));
}

TEST_CASE("coefficients of standard operators") {
    CHECK(c_coefficients(BipartiteHermitian::identity(2, 2)) ==
          CCoefficients{q(1), GaussRational(), GaussRational(), q(2), GaussRational(), q(1)});
    // X_w = w w^dagger for SWAP, so det(X_w) vanishes identically.
    const CCoefficients s = c_coefficients(swap22());
    CHECK(s == CCoefficients{});
    CHECK(det_nonneg_all_w(s).holds);
    CHECK(det_nonneg_all_w(c_coefficients(BipartiteHermitian::identity(2, 2))).holds);
    const DetResult neg = det_nonneg_all_w(CCoefficients{q(-1), GaussRational(), GaussRational(), q(2), GaussRational(), q(1)});
    CHECK_FALSE(neg.holds);
    REQUIRE(neg.counterexample);
    CHECK(build_W(CCoefficients{q(-1), GaussRational(), GaussRational(), q(2), GaussRational(), q(1)})
              .eval(neg.counterexample->first, neg.counterexample->second) < 0);
}

TEST_CASE("W is the cleared determinant of X_w") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> n(-12, 12), d(1, 6);
    for (int m = 0; m < 20; ++m) {
        const auto X = random_hermitian(rng, 2, 2);
        const CCoefficients c = c_coefficients(X);
        CHECK(c == block_pair_coefficients(X, 1, 2));
        const BivariateRT W = build_W(c), V = build_V(c);
        CHECK(W.by_r.size() == V.by_r.size());
        for (std::size_t k = 0; k < W.by_r.size(); ++k) CHECK(V.by_r[k] == W.by_r[W.by_r.size() - 1 - k]);
        for (int p = 0; p < 100; ++p) {
            const Rational r = make_rational(n(rng), d(rng)), t = make_rational(n(rng), d(rng));
            const Rational s = t * t + 1;
            CHECK(W.eval(r, t) == s * s * det2(contract_b(X, stereographic_w(r, t))));
        }
    }
}

TEST_CASE("random 4x4 verdicts are consistent") {
    std::mt19937_64 rng(41);
    for (int m = 0; m < 150; ++m) {
        const auto X = random_hermitian(rng, 2, 2);
        const Verdict v = classify(X);
        const EigenSignature sig = eigen_signature(X);
        CHECK(std::holds_alternative<PositiveSemidefinite>(v) == (sig.n_neg == 0));
        if (const auto* nb = std::get_if<NotBlockPositive>(&v)) {
            CHECK(nb->certificate.value < 0);
            CHECK(product_expectation(X, nb->certificate.v, nb->certificate.w) == nb->certificate.value);
        }
        // Positive scaling keeps the verdict.
        CHECK(std::string(verdict_name(classify(X.scaled(q(7, 3))))) == verdict_name(v));
    }
}

TEST_CASE("weak optimality flag") {
    for (const Rational& a : {q(-17, 50), q(-8, 25), q(3, 10), q(2, 5), q(12, 25)}) {
        const auto X = family_e(a);
        REQUIRE(std::holds_alternative<EntanglementWitness>(classify(X)));
        const QPoly g = build_g_delta(c_coefficients(X));
        const bool expected = g.is_zero() || (!g.is_constant() && count_roots(squarefree_part(g), AllReals{}) > 0);
        CHECK(weak_optimality_necessary(X) == expected);
    }
    CHECK_THROWS(weak_optimality_necessary(swap22()));
}

TEST_CASE("g_delta is the r-discriminant of W") {
    std::mt19937_64 rng(111);
    std::uniform_int_distribution<long> n(-9, 9), d(1, 5);
    for (int m = 0; m < 25; ++m) {
        const CCoefficients c = c_coefficients(random_hermitian(rng, 2, 2));
        const QPoly g = build_g_delta(c);
        const BivariateRT W = build_W(c);
        for (int p = 0; p < 8; ++p) {
            const Rational t = make_rational(n(rng), d(rng));
            const QPoly w = W.at_t(t);
            if (w.degree() != 4) continue;
            const Quartic qw{w.coeff(4), w.coeff(3), w.coeff(2), w.coeff(1), w.coeff(0)};
            const Rational s = t * t + 1;
            CHECK(g.eval(t) * 16 * s * s * s * s == quartic_discriminant(qw));
        }
    }
}
