#pragma once

// Quartic nonnegativity (discriminant plus normalized-coefficient
// conditions, all cleared into Q(sqrt(a4 a0))) and the polynomials that encode
// det(X_w) >= 0 for a 2x2 block pair.

#include "witnessgate/scalars.hpp"
#include "witnessgate/unipoly.hpp"

namespace witnessgate {

template <class K>
struct BasicQuartic {
    K a4, a3, a2, a1, a0;

    [[nodiscard]] UniPoly<K> to_poly() const { return UniPoly<K>({a0, a1, a2, a3, a4}); }
};

using Quartic = BasicQuartic<Rational>;

/// The quartic conditions for the normalized f(r) = r^4 + alpha r^3 + beta r^2 +
/// gamma r + 1, each evaluated without fractional powers.
struct NormalizedConditions {
    Sign disc_sign;     // sign of the discriminant
    bool beta_range_ok; // -2 <= beta <= 6
    bool cond_diff_ok;  // |alpha - gamma| <= 4 sqrt(beta + 2)
    bool cond_sum_ok;   // beta > 6 and |alpha + gamma| <= 4 sqrt(beta - 2)
};

/// Discriminant of a4 t^4 + ... + a0.
Rational quartic_discriminant(const Quartic& q);

/// Requires a4 > 0 and a0 > 0.
NormalizedConditions normalized_conditions(const Quartic& q);

/// q(t) >= 0 for all real t. Requires a4 > 0 and a0 > 0.
bool quartic_nonneg(const Quartic& q);

/// Symmetric pattern a4 = a0 > 0, a3 = -a1: nonneg iff a2 + 2 a0 >= 0 and
/// a3^2 <= 4 a0 (a2 + 2 a0).
template <class K>
bool quartic_nonneg_symmetric(const BasicQuartic<K>& q) {
    if (!(q.a4 == q.a0) || !(q.a3 == -q.a1))
        throw std::invalid_argument("quartic is not of the symmetric pattern");
    if (sign(q.a0) != Sign::Positive) throw std::invalid_argument("symmetric quartic needs a0 > 0");
    const K shifted = q.a2 + K(2) * q.a0;
    if (sign(shifted) == Sign::Negative) return false;
    return sign(K(4) * q.a0 * shifted - q.a3 * q.a3) != Sign::Negative;
}

template <class K>
BasicQuartic<K> reverse_quartic(const BasicQuartic<K>& q) {
    return {q.a0, q.a1, q.a2, q.a3, q.a4};
}

/// The six projected-determinant coefficients of a 2x2 block pair.
struct CCoefficients {
    Rational c1;
    GaussRational c2;
    GaussRational c3;
    Rational c4;
    GaussRational c5;
    Rational c6;

    friend bool operator==(const CCoefficients&, const CCoefficients&) = default;
    CCoefficients& operator+=(const CCoefficients& o);
};

/// Re(c) t^2 + 2 Im(c) t - Re(c).
QPoly build_lambda(const GaussRational& c);

/// (c4 + 2Re c3) t^4 + 8Im(c3) t^3 + 2(c4 - 6Re c3) t^2 - 8Im(c3) t + (c4 + 2Re c3).
template <class K>
UniPoly<K> build_chi(const GaussRational& c3, const K& c4) {
    const K re(c3.re), im(c3.im);
    const K outer = c4 + K(2) * re;
    return UniPoly<K>({outer, K(-8) * im, K(2) * (c4 - K(6) * re), K(8) * im, outer});
}

struct GBundle {
    QPoly g_delta;
    SurdPoly g1, g2, g3, g4;
    Rational radicand;  // c1 c6
};

/// Numerator of the discriminant of W(., t) as a polynomial in t.
QPoly build_g_delta(const CCoefficients& c);

/// Requires c1 > 0 and c6 > 0.
GBundle build_g_bundle(const CCoefficients& c);

}  // namespace witnessgate
