#include "witnessgate/qudit_qubit.hpp"

namespace witnessgate {

CCoefficients pair_c_coefficients(const BipartiteHermitian& X, const PairSelector& sel) {
    if (sel.k > X.dA()) throw std::invalid_argument("pair selector exceeds dA");
    return block_pair_coefficients(X, sel.l, sel.k);
}

CCoefficients summed_c_coefficients(const BipartiteHermitian& X) {
    CCoefficients sum{};
    for (int l = 1; l <= X.dA(); ++l)
        for (int k = l + 1; k <= X.dA(); ++k) sum += block_pair_coefficients(X, l, k);
    return sum;
}

GaussVector determinant_failure_w(const CCoefficients& c, const std::pair<Rational, Rational>& rt) {
    if (sgn(c.c1) < 0) return {GaussRational(0), GaussRational(1)};
    if (sgn(c.c6) < 0) return {GaussRational(1), GaussRational(0)};
    return stereographic_w(rt.first, rt.second);
}

ProductCertificate certificate_from_w(const BipartiteHermitian& X, const GaussVector& w) {
    const GaussMatrix M = contract_b(X, w);
    ProductCertificate cert;
    cert.w = w;
    const std::size_t n = M.size();
    for (std::size_t i = 0; i < n && cert.v.empty(); ++i)
        if (sgn(M[i][i].re) < 0) {
            cert.v.assign(n, GaussRational());
            cert.v[i] = GaussRational(1);
        }
    for (std::size_t p = 0; p < n && cert.v.empty(); ++p)
        for (std::size_t q = p + 1; q < n && cert.v.empty(); ++q)
            if (M[p][p].re * M[q][q].re < M[p][q].norm2()) cert.v = negative_direction_2x2(M, p, q);
    if (cert.v.empty()) throw std::logic_error("X_w has no negative diagonal entry or 2x2 minor");
    cert.value = product_expectation(X, cert.v, cert.w);
    if (sgn(cert.value) >= 0) throw std::logic_error("certificate does not evaluate negative");
    return cert;
}

NecessaryResult necessary_block_positive(const BipartiteHermitian& X) {
    if (X.dB() != 2) throw std::invalid_argument("qudit-qubit criterion needs dB = 2");
    NecessaryResult res;
    if (!trace_condition(trace_tau_xi(X))) {
        res.outcome = NecessaryResult::Outcome::Fails;
        res.violated = "trace";
        res.certificate = extract_certificate(X, {FailureSite::Kind::Trace, std::nullopt});
        return res;
    }
    auto fail_with = [&](const CCoefficients& c, const DetResult& det, std::string where) {
        res.outcome = NecessaryResult::Outcome::Fails;
        res.violated = std::move(where);
        res.counterexample = det.counterexample;
        res.certificate = certificate_from_w(X, determinant_failure_w(c, *det.counterexample));
        return res;
    };
    for (int l = 1; l <= X.dA(); ++l)
        for (int k = l + 1; k <= X.dA(); ++k) {
            const CCoefficients c = block_pair_coefficients(X, l, k);
            const DetResult det = det_nonneg_all_w(c);
            if (!det.holds) {
                res.pair = PairSelector(l, k);
                return fail_with(c, det, "pair");
            }
        }
    const CCoefficients sum = summed_c_coefficients(X);
    const DetResult det = det_nonneg_all_w(sum);
    if (!det.holds) return fail_with(sum, det, "sum");
    return res;
}

const char* to_string(NecessaryResult::Outcome o) {
    return o == NecessaryResult::Outcome::Fails ? "Fails" : "Inconclusive";
}

}  // namespace witnessgate
