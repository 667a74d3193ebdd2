#include "witnessgate/witness2x2.hpp"

#include <array>

namespace witnessgate {

TraceData trace_tau_xi(const BipartiteHermitian& X) {
    if (X.dB() != 2) throw std::invalid_argument("trace data needs dB = 2");
    TraceData td{Rational(0), Rational(0), GaussRational()};
    for (int i = 1; i <= X.dA(); ++i) {
        td.tau1 += X.x(i, 1, i, 1).re;
        td.tau2 += X.x(i, 2, i, 2).re;
        td.xi += X.x(i, 1, i, 2);
    }
    return td;
}

bool trace_condition(const TraceData& td) {
    return sgn(td.tau1 + td.tau2) >= 0 && td.tau1 * td.tau2 >= td.xi.norm2();
}

namespace {

// Polynomial in z and conj(z) of degree <= 2 in each.
using ZPoly = std::array<std::array<GaussRational, 3>, 3>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (a[i][j].is_zero()) continue;
            for (int k = 0; i + k < 3; ++k)
                for (int l = 0; j + l < 3; ++l) out[i + k][j + l] += a[i][j] * b[k][l];
        }
    return out;
}

// Entry (p, q) of X_w for w = (1, z): X_{p1,q1} + z X_{p1,q2} + conj(z) X_{p2,q1} + |z|^2 X_{p2,q2}.
ZPoly projected_entry(const BipartiteHermitian& X, int p, int q) {
    ZPoly e{};
    e[0][0] = X.x(p, 1, q, 1);
    e[1][0] = X.x(p, 1, q, 2);
    e[0][1] = X.x(p, 2, q, 1);
    e[1][1] = X.x(p, 2, q, 2);
    return e;
}

}  // namespace

CCoefficients block_pair_coefficients(const BipartiteHermitian& X, int l, int k) {
    if (X.dB() != 2) throw std::invalid_argument("block pair coefficients need dB = 2");
    if (l < 1 || k > X.dA() || l >= k) throw std::invalid_argument("block pair needs 1 <= l < k <= dA");
    const ZPoly diag = zmul(projected_entry(X, l, l), projected_entry(X, k, k));
    const ZPoly off = zmul(projected_entry(X, l, k), projected_entry(X, k, l));
    ZPoly det{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) det[i][j] = diag[i][j] - off[i][j];
    return {det[2][2].re, det[2][1], det[2][0], det[1][1].re, det[1][0], det[0][0].re};
}

CCoefficients c_coefficients(const BipartiteHermitian& X) {
    if (X.dA() != 2 || X.dB() != 2) throw std::invalid_argument("c-coefficients need a 2 x 2 operator");
    auto x = [&](int i, int j, int ip, int jp) { return X.x(i, j, ip, jp); };
    auto cj = [&](int i, int j, int ip, int jp) { return X.x(i, j, ip, jp).conj(); };
    CCoefficients c;
    c.c1 = (x(1, 2, 1, 2) * x(2, 2, 2, 2)).re - x(1, 2, 2, 2).norm2();
    c.c2 = x(2, 2, 2, 2) * x(1, 1, 1, 2) + x(1, 2, 1, 2) * x(2, 1, 2, 2) - x(1, 2, 2, 2) * cj(1, 2, 2, 1) -
           cj(1, 2, 2, 2) * x(1, 1, 2, 2);
    c.c3 = x(1, 1, 1, 2) * x(2, 1, 2, 2) - x(1, 1, 2, 2) * cj(1, 2, 2, 1);
    const GaussRational c4 = x(1, 1, 1, 2) * cj(2, 1, 2, 2) - x(1, 2, 2, 2) * cj(1, 1, 2, 1) +
                             cj(1, 1, 1, 2) * x(2, 1, 2, 2) - cj(1, 2, 2, 2) * x(1, 1, 2, 1) +
                             x(1, 1, 1, 1) * x(2, 2, 2, 2) + x(1, 2, 1, 2) * x(2, 1, 2, 1) -
                             GaussRational(x(1, 1, 2, 2).norm2()) - GaussRational(x(1, 2, 2, 1).norm2());
    c.c4 = c4.re;
    c.c5 = x(1, 1, 1, 1) * x(2, 1, 2, 2) + x(2, 1, 2, 1) * x(1, 1, 1, 2) - cj(1, 1, 2, 1) * x(1, 1, 2, 2) -
           x(1, 1, 2, 1) * cj(1, 2, 2, 1);
    c.c6 = (x(1, 1, 1, 1) * x(2, 1, 2, 1)).re - x(1, 1, 2, 1).norm2();
    return c;
}

// ---------------------------------------------------------------------------

Rational BivariateRT::eval(const Rational& r, const Rational& t) const {
    Rational acc(0);
    for (auto it = by_r.rbegin(); it != by_r.rend(); ++it) acc = acc * r + it->eval(t);
    return acc;
}

QPoly BivariateRT::at_t(const Rational& t) const {
    std::vector<Rational> c;
    c.reserve(by_r.size());
    for (const auto& p : by_r) c.push_back(p.eval(t));
    return QPoly(std::move(c));
}

BivariateRT build_W(const CCoefficients& c) {
    const QPoly T({Rational(1), Rational(0), Rational(1)});
    const QPoly T2 = T * T;
    BivariateRT W;
    W.by_r = {Rational(c.c6) * T2, Rational(-2) * T * build_lambda(c.c5), build_chi<Rational>(c.c3, c.c4),
              Rational(-2) * T * build_lambda(c.c2), Rational(c.c1) * T2};
    return W;
}

BivariateRT build_V(const CCoefficients& c) {
    BivariateRT V = build_W(c);
    std::reverse(V.by_r.begin(), V.by_r.end());
    return V;
}

GaussVector stereographic_w(const Rational& r, const Rational& t) {
    const Rational denom = 1 + t * t;
    return {GaussRational(1), GaussRational(Rational(r * (1 - t * t) / denom), Rational(2 * r * t / denom))};
}

// ---------------------------------------------------------------------------

namespace {

using RT = std::pair<Rational, Rational>;

// (r, t) with W(r, t) < 0, looking first at t0 and then at t0 +/- 2^-k.
RT locate_negative(const BivariateRT& W, const Rational& t0) {
    Rational eps(1);
    for (int step = 0; step <= 64; ++step) {
        for (const Rational& t : step == 0 ? std::vector<Rational>{t0} : std::vector<Rational>{t0 + eps, t0 - eps}) {
            const QPoly w = W.at_t(t);
            if (auto r = find_negative_point(w, AllReals{})) return {*r, t};
        }
        if (step > 0) eps /= 2;
    }
    throw std::logic_error("no negative value of W found near t = " + format_rational(t0));
}

// Some t where the nonzero quadratic Lambda does not vanish.
Rational nonroot_of(const QPoly& p) {
    for (long k = 0;; ++k)
        if (p.sign_at(Rational(k)) != Sign::Zero) return Rational(k);
}

DetResult fail_at(const BivariateRT& W, const Rational& t0, std::string reason) {
    return {false, locate_negative(W, t0), std::move(reason)};
}

template <class K>
std::optional<Rational> failing_point(const UniPoly<K>& g) {
    if (nonneg(g, AllReals{})) return std::nullopt;
    auto t = find_negative_point(g, AllReals{});
    if (!t) throw std::logic_error("nonneg failed but no negative point was found");
    return t;
}

bool symmetric_quartic_nonneg(const SurdPoly& g) {
    if (g.degree() == 4 && sign(g.leading()) == Sign::Positive)
        return quartic_nonneg_symmetric(BasicQuartic<QuadSurd>{g.coeff(4), g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0)});
    return nonneg(g, AllReals{});
}

}  // namespace

DetResult det_nonneg_all_w(const CCoefficients& c) {
    const BivariateRT W = build_W(c);
    const int s1 = sgn(c.c1), s6 = sgn(c.c6);
    if (s1 < 0) return fail_at(W, Rational(0), "c1 < 0");
    if (s6 < 0) return {false, RT{Rational(0), Rational(0)}, "c6 < 0"};

    const QPoly L2 = build_lambda(c.c2);
    const QPoly L5 = build_lambda(c.c5);
    const QPoly chi = build_chi<Rational>(c.c3, c.c4);

    if (s1 == 0 && !L2.is_zero()) return fail_at(W, nonroot_of(L2), "c1 = 0 and c2 != 0");
    if (s6 == 0 && !L5.is_zero()) return fail_at(W, nonroot_of(L5), "c6 = 0 and c5 != 0");

    if (s1 == 0 && s6 == 0) {
        if (auto t = failing_point(chi)) return fail_at(W, *t, "chi not nonnegative");
        return {};
    }
    if (s1 == 0) {
        const QPoly g5 = Rational(c.c6) * chi - L5 * L5;
        if (auto t = failing_point(g5)) return fail_at(W, *t, "g5 not nonnegative");
        return {};
    }
    if (s6 == 0) {
        const QPoly g6 = Rational(c.c1) * chi - L2 * L2;
        if (auto t = failing_point(g6)) return fail_at(W, *t, "g6 not nonnegative");
        return {};
    }

    const GBundle b = build_g_bundle(c);
    if (auto t = failing_point(b.g1)) return fail_at(W, *t, "g1 not nonnegative");
    if (!symmetric_quartic_nonneg(b.g2)) {
        auto t = find_negative_point(b.g2, AllReals{});
        if (!t) throw std::logic_error("g2 negative point not found");
        return fail_at(W, *t, "g2 not nonnegative");
    }
    const AlternativeResult alt = eval_alternative(b.g3, b.g4, AllReals{});
    if (!alt.holds) return fail_at(W, *alt.witness_point, "g3 >= 0 or g4 >= 0 fails");
    if (auto t = failing_point(b.g_delta)) return fail_at(W, *t, "g_delta not nonnegative");
    return {};
}

// ---------------------------------------------------------------------------

const char* verdict_name(const Verdict& v) {
    struct Namer {
        const char* operator()(const PositiveSemidefinite&) const { return "PositiveSemidefinite"; }
        const char* operator()(const EntanglementWitness&) const { return "EntanglementWitness"; }
        const char* operator()(const NotBlockPositive&) const { return "NotBlockPositive"; }
        const char* operator()(const NotWitnessMultiNegative&) const { return "NotWitnessMultiNegative"; }
    };
    return std::visit(Namer{}, v);
}

GaussVector negative_direction_2x2(const GaussMatrix& M, std::size_t p, std::size_t q) {
    GaussVector v(M.size());
    const Rational& m11 = M[p][p].re;
    const Rational& m22 = M[q][q].re;
    if (sgn(m11) < 0) {
        v[p] = GaussRational(1);
        return v;
    }
    if (sgn(m22) < 0) {
        v[q] = GaussRational(1);
        return v;
    }
    const GaussRational& m12 = M[p][q];
    const Rational n = m12.norm2();
    if (m11 * m22 >= n) throw std::logic_error("2x2 block is positive semidefinite");
    // v = (1, -s conj(m12)) gives m11 - 2 s |m12|^2 + s^2 |m12|^2 m22.
    const Rational s = sgn(m22) > 0 ? Rational(1 / m22) : Rational(m11 / n + 1);
    v[p] = GaussRational(1);
    v[q] = -(GaussRational(s) * m12.conj());
    return v;
}

namespace {

GaussVector trace_failure_w(const TraceData& td) {
    if (sgn(td.tau1) < 0) return {GaussRational(1), GaussRational(0)};
    if (sgn(td.tau2) < 0) return {GaussRational(0), GaussRational(1)};
    // tau1 tau2 < |xi|^2 with both taus nonnegative, so xi != 0.
    // w = (1, -s conj(xi)) gives tau1 - 2 s |xi|^2 + s^2 |xi|^2 tau2.
    const Rational n = td.xi.norm2();
    const Rational s = sgn(td.tau2) > 0 ? Rational(1 / td.tau2) : Rational(td.tau1 / n + 1);
    return {GaussRational(1), -(GaussRational(s) * td.xi.conj())};
}

}  // namespace

ProductCertificate extract_certificate(const BipartiteHermitian& X, const FailureSite& site) {
    if (X.dB() != 2) throw std::invalid_argument("certificates are built for dB = 2");
    ProductCertificate cert;
    if (site.kind == FailureSite::Kind::Trace) {
        cert.w = trace_failure_w(trace_tau_xi(X));
        const GaussMatrix M = contract_b(X, cert.w);
        // tr(M) < 0, so some diagonal entry is negative.
        cert.v.assign(M.size(), GaussRational());
        for (std::size_t i = 0; i < M.size(); ++i)
            if (sgn(M[i][i].re) < 0) {
                cert.v[i] = GaussRational(1);
                break;
            }
    } else {
        if (!site.rt) throw std::invalid_argument("determinant failure needs (r, t)");
        if (X.dA() != 2) throw std::invalid_argument("determinant certificates here need dA = 2");
        const CCoefficients c = c_coefficients(X);
        if (sgn(c.c1) < 0)
            cert.w = {GaussRational(0), GaussRational(1)};  // det(X_w) = c1
        else if (sgn(c.c6) < 0)
            cert.w = {GaussRational(1), GaussRational(0)};  // det(X_w) = c6
        else
            cert.w = stereographic_w(site.rt->first, site.rt->second);
        cert.v = negative_direction_2x2(contract_b(X, cert.w));
    }
    cert.value = product_expectation(X, cert.v, cert.w);
    if (sgn(cert.value) >= 0) throw std::logic_error("certificate does not evaluate negative");
    return cert;
}

namespace {

bool weak_optimality_from(const CCoefficients& c) {
    const QPoly gd = build_g_delta(c);
    if (gd.is_zero()) return true;
    if (gd.is_constant()) return false;
    return count_roots(gd, AllReals{}) > 0;
}

}  // namespace

bool weak_optimality_necessary(const BipartiteHermitian& X) {
    const CCoefficients c = c_coefficients(X);
    if (sgn(c.c1) <= 0 || sgn(c.c6) <= 0)
        throw std::invalid_argument("weak optimality test needs c1 > 0 and c6 > 0");
    return weak_optimality_from(c);
}

Verdict classify(const BipartiteHermitian& X) {
    if (X.dA() != 2 || X.dB() != 2) throw std::invalid_argument("classify needs a 2 x 2 operator");
    const EigenSignature sig = eigen_signature(X);
    if (sig.n_neg == 0) return PositiveSemidefinite{};
    if (sig.n_neg >= 2) return NotWitnessMultiNegative{sig.n_neg};

    if (!trace_condition(trace_tau_xi(X)))
        return NotBlockPositive{extract_certificate(X, {FailureSite::Kind::Trace, std::nullopt}), "trace"};

    const CCoefficients c = c_coefficients(X);
    const DetResult det = det_nonneg_all_w(c);
    if (!det.holds)
        return NotBlockPositive{extract_certificate(X, {FailureSite::Kind::Determinant, det.counterexample}),
                                "determinant: " + det.reason};

    EntanglementWitness ew;
    if (sgn(c.c1) > 0 && sgn(c.c6) > 0) ew.weakly_optimal_possible = weak_optimality_from(c);
    return ew;
}

}  // namespace witnessgate
