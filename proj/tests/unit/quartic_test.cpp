#include "helpers.hpp"
#include "witnessgate/quartic.hpp"

#include <doctest.h>

using namespace wg_test;

namespace {
Quartic quartic(long a4, long a3, long a2, long a1, long a0) { return {q(a4), q(a3), q(a2), q(a1), q(a0)}; }
}  // namespace

TEST_CASE("quartic nonnegativity") {
    CHECK(quartic_nonneg(quartic(1, 0, 0, 0, 1)));
    CHECK(quartic_nonneg(quartic(1, 0, -2, 0, 1)));
    CHECK_FALSE(quartic_nonneg(quartic(1, 0, -3, 0, 1)));
    CHECK(quartic_discriminant(quartic(1, 0, 0, 0, 1)) > 0);
}

TEST_CASE("symmetric quartic") {
    CHECK(quartic_nonneg_symmetric(quartic(1, 1, 0, -1, 1)));
    CHECK(quartic_nonneg(quartic(1, 1, 0, -1, 1)));
    CHECK(quartic_nonneg_symmetric(quartic(1, 0, -2, 0, 1)));
    CHECK_FALSE(quartic_nonneg_symmetric(quartic(1, 4, 0, -4, 1)));
    CHECK(quartic(1, 4, 0, -4, 1).to_poly().eval(q(1, 2)) == q(-7, 16));
    CHECK_THROWS(quartic_nonneg_symmetric(quartic(1, 1, 0, 1, 1)));
}

TEST_CASE("reverse quartic") {
    const Quartic r = reverse_quartic(quartic(1, 2, 3, 4, 5));
    CHECK(r.a4 == 5);
    CHECK(r.a3 == 4);
    CHECK(r.a0 == 1);
    const Quartic p = quartic(1, 2, 3, 2, 1);
    const Quartic rp = reverse_quartic(p);
    CHECK((rp.a4 == p.a4 && rp.a3 == p.a3 && rp.a2 == p.a2 && rp.a1 == p.a1 && rp.a0 == p.a0));
}

TEST_CASE("random quartics agree with the multiplicity test") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-12, 12), pos(1, 12);
    for (int i = 0; i < 400; ++i) {
        const Quartic qq = quartic(pos(rng), c(rng), c(rng), c(rng), pos(rng));
        const bool a = quartic_nonneg(qq);
        CHECK(a == nonneg(qq.to_poly(), AllReals{}));
        CHECK(a == quartic_nonneg(reverse_quartic(qq)));
    }
    // Squares and near-squares exercise the boundary.
    for (int i = 0; i < 200; ++i) {
        const QPoly s({make_rational(c(rng), 3), make_rational(c(rng), 5), Rational(pos(rng))});
        const QPoly sq = s * s;
        const Quartic qq{sq.coeff(4), sq.coeff(3), sq.coeff(2), sq.coeff(1), sq.coeff(0)};
        if (sgn(qq.a0) <= 0) continue;
        CHECK(quartic_nonneg(qq));
        Quartic dip = qq;
        dip.a2 -= make_rational(1, 1000);
        CHECK(quartic_nonneg(dip) == nonneg(dip.to_poly(), AllReals{}));
    }
}

TEST_CASE("discriminant sign is invariant under positive scalings") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-9, 9), pos(1, 9);
    for (int i = 0; i < 200; ++i) {
        const Quartic qq = quartic(pos(rng), c(rng), c(rng), c(rng), pos(rng));
        const Rational s = make_rational(pos(rng), pos(rng)), k = make_rational(pos(rng), pos(rng));
        const Quartic scaled{k * qq.a4 * s * s * s * s, k * qq.a3 * s * s * s, k * qq.a2 * s * s, k * qq.a1 * s, k * qq.a0};
        CHECK(sgn(quartic_discriminant(scaled)) == sgn(quartic_discriminant(qq)));
    }
}

TEST_CASE("lambda and chi") {
    CHECK(build_lambda(GaussRational(q(0), q(1))) == poly({0, 2}));
    CHECK(build_lambda(GaussRational(q(1))) == poly({-1, 0, 1}));
    CHECK(build_lambda(GaussRational()).is_zero());
    CHECK(build_chi<Rational>(GaussRational(), q(2)) == poly({2, 0, 4, 0, 2}));
    CHECK(build_chi<Rational>(GaussRational(q(1)), q(0)) == poly({2, 0, -12, 0, 2}));
    CHECK(build_chi<Rational>(GaussRational(q(0), q(1)), q(0)) == poly({0, -8, 0, 8}));
}

TEST_CASE("g bundle") {
    const CCoefficients id{q(1), GaussRational(), GaussRational(), q(2), GaussRational(), q(1)};
    const GBundle g = build_g_bundle(id);
    const QPoly T2 = poly({1, 0, 2, 0, 1});
    CHECK(to_rational_poly(g.g2) == Rational(4) * T2);
    CHECK(to_rational_poly(g.g1) == Rational(16) * T2);
    CHECK(to_rational_poly(g.g3) == Rational(4) * T2);
    CHECK(g.g_delta.is_zero());

    const CCoefficients c2{q(1), GaussRational(), GaussRational(), q(0), GaussRational(), q(1)};
    CHECK(to_rational_poly(build_g_bundle(c2).g2) == Rational(2) * T2);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> n(-6, 6), p(1, 6);
    for (int i = 0; i < 50; ++i) {
        CCoefficients c{make_rational(p(rng), p(rng)), GaussRational(), GaussRational(q(n(rng)), q(n(rng))),
                        q(n(rng)), GaussRational(), make_rational(p(rng), p(rng))};
        const GBundle b = build_g_bundle(c);
        const SurdPoly scale = SurdPoly::constant(QuadSurd(Rational(4) * c.c1 * c.c6));
        CHECK(b.g1 == scale * b.g2);
        CHECK(b.g4 == scale * SurdPoly(build_chi<QuadSurd>(c.c3, QuadSurd(c.c4)) -
                                       SurdPoly::constant(QuadSurd(q(0), q(2), c.c1 * c.c6)) * to_surd_poly(T2)));
        // All Lambda terms vanish: g_Delta is c1 c6 times a square.
        CHECK(nonneg(b.g_delta, AllReals{}));
    }
}
