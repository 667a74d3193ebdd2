#include "witnessgate/quartic.hpp"

namespace witnessgate {

Rational quartic_discriminant(const Quartic& q) {
    const Rational &a = q.a4, &b = q.a3, &c = q.a2, &d = q.a1, &e = q.a0;
    Rational r = 256 * a * a * a * e * e * e;
    r -= 192 * a * a * b * d * e * e;
    r -= 128 * a * a * c * c * e * e;
    r += 144 * a * a * c * d * d * e;
    r -= 27 * a * a * d * d * d * d;
    r += 144 * a * b * b * c * e * e;
    r -= 6 * a * b * b * d * d * e;
    r -= 80 * a * b * c * c * d * e;
    r += 18 * a * b * c * d * d * d;
    r += 16 * a * c * c * c * c * e;
    r -= 4 * a * c * c * c * d * d;
    r -= 27 * b * b * b * b * e * e;
    r += 18 * b * b * b * c * d * e;
    r -= 4 * b * b * b * d * d * d;
    r -= 4 * b * b * c * c * c * e;
    r += b * b * c * c * d * d;
    return r;
}

NormalizedConditions normalized_conditions(const Quartic& q) {
    if (sgn(q.a4) <= 0 || sgn(q.a0) <= 0)
        throw std::invalid_argument("quartic_nonneg requires a4 > 0 and a0 > 0");
    // With s = sqrt(a4 a0): beta = a2 / s, and
    //   (alpha -/+ gamma)^2 (beta + 2 or beta - 2) comparisons become
    //   (a3 s -/+ a1 a4)^2 <= 16 a4^2 a0 (a2 +/- 2 s).
    // Each right side is checked for sign before the squared form is used.
    const QuadSurd s = QuadSurd::sqrt(q.a4 * q.a0);
    const QuadSurd a2(q.a2);
    const QuadSurd plus2 = a2 + QuadSurd(2) * s;   // s (beta + 2)
    const QuadSurd minus2 = a2 - QuadSurd(2) * s;  // s (beta - 2)
    const QuadSurd upper6 = QuadSurd(6) * s - a2;   // s (6 - beta)
    const QuadSurd scale(Rational(16 * q.a4 * q.a4 * q.a0));

    NormalizedConditions nc{};
    nc.disc_sign = sign(quartic_discriminant(q));
    nc.beta_range_ok = sign(plus2) != Sign::Negative && sign(upper6) != Sign::Negative;

    const QuadSurd diff = QuadSurd(q.a3) * s - QuadSurd(Rational(q.a1 * q.a4));
    nc.cond_diff_ok = sign(plus2) != Sign::Negative && sign(scale * plus2 - diff * diff) != Sign::Negative;

    const QuadSurd sum = QuadSurd(q.a3) * s + QuadSurd(Rational(q.a1 * q.a4));
    nc.cond_sum_ok = sign(upper6) == Sign::Negative && sign(scale * minus2 - sum * sum) != Sign::Negative;
    return nc;
}

bool quartic_nonneg(const Quartic& q) {
    const NormalizedConditions nc = normalized_conditions(q);
    return nc.disc_sign != Sign::Negative && nc.cond_diff_ok && (nc.beta_range_ok || nc.cond_sum_ok);
}

CCoefficients& CCoefficients::operator+=(const CCoefficients& o) {
    c1 += o.c1;
    c2 += o.c2;
    c3 += o.c3;
    c4 += o.c4;
    c5 += o.c5;
    c6 += o.c6;
    return *this;
}

QPoly build_lambda(const GaussRational& c) {
    return QPoly({Rational(-c.re), Rational(2 * c.im), c.re});
}

QPoly build_g_delta(const CCoefficients& c) {
    const QPoly T = QPoly({Rational(1), Rational(0), Rational(1)});
    const QPoly T2 = T * T;
    const QPoly T4 = T2 * T2;
    const QPoly L2 = build_lambda(c.c2);
    const QPoly L5 = build_lambda(c.c5);
    const QPoly X = build_chi<Rational>(c.c3, c.c4);
    const QPoly X2 = X * X;
    const QPoly L2sq = L2 * L2;
    const QPoly L5sq = L5 * L5;
    const Rational &c1 = c.c1, &c6 = c.c6;
    const Rational c1c6 = c1 * c6;

    QPoly g = Rational(-27 * c6 * c6) * T4 * L2sq * L2sq;
    g -= Rational(2) * T2 * L2sq * L2 * L5 * (Rational(8) * L5sq - Rational(9 * c6) * X);
    g += L2sq * (-(L5sq * (Rational(6 * c1c6) * T4 - X2)) + Rational(c6) * X * (Rational(36 * c1c6) * T4 - X2));
    g += Rational(c1) * (Rational(-27 * c1) * T4 * L5sq * L5sq + L5sq * X * (Rational(36 * c1c6) * T4 - X2));
    const QPoly inner = Rational(-4 * c1c6) * T4 + X2;
    g += Rational(c1c6) * inner * inner;
    g -= Rational(2 * c1) * T2 * L2 * L5 *
         (Rational(-9) * L5sq * X + Rational(2 * c6) * (Rational(12 * c1c6) * T4 + Rational(5) * X2));
    return g;
}

GBundle build_g_bundle(const CCoefficients& c) {
    if (sgn(c.c1) <= 0 || sgn(c.c6) <= 0) throw std::invalid_argument("g-bundle requires c1 > 0 and c6 > 0");
    const Rational radicand = c.c1 * c.c6;
    const QuadSurd s = QuadSurd::sqrt(radicand);
    const SurdPoly T2 = to_surd_poly(QPoly({Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)}));
    const SurdPoly chi = to_surd_poly(build_chi<Rational>(c.c3, c.c4));
    const SurdPoly L2 = to_surd_poly(build_lambda(c.c2));
    const SurdPoly L5 = to_surd_poly(build_lambda(c.c5));

    // (sqrt(c1) L5 -/+ sqrt(c6) L2)^2 expanded so only sqrt(c1 c6) appears.
    const SurdPoly squares = QuadSurd(c.c1) * (L5 * L5) + QuadSurd(c.c6) * (L2 * L2);
    const SurdPoly cross = QuadSurd(2) * s * (L5 * L2);
    const QuadSurd four_c1c6(4 * radicand);

    GBundle b;
    b.radicand = radicand;
    b.g_delta = build_g_delta(c);
    b.g2 = chi + QuadSurd(2) * s * T2;
    b.g1 = four_c1c6 * b.g2 - (squares - cross);
    b.g3 = build_chi<QuadSurd>(-c.c3, QuadSurd(6) * s - QuadSurd(c.c4));
    b.g4 = four_c1c6 * (chi - QuadSurd(2) * s * T2) - (squares + cross);
    return b;
}

}  // namespace witnessgate
