#include "witnessgate/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <random>

namespace witnessgate {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat to_eigen(const BipartiteHermitian& X) {
    const int n = X.dim();
    Mat m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = {to_double(X.at(r, c).re), to_double(X.at(r, c).im)};
    return m;
}

// X_w on H_A and X^v on H_B.
Mat project_b(const Mat& X, int dA, int dB, const Vec& w) {
    Mat out = Mat::Zero(dA, dA);
    for (int i = 0; i < dA; ++i)
        for (int ip = 0; ip < dA; ++ip)
            for (int j = 0; j < dB; ++j)
                for (int jp = 0; jp < dB; ++jp) out(i, ip) += std::conj(w(j)) * X(i * dB + j, ip * dB + jp) * w(jp);
    return out;
}

Mat project_a(const Mat& X, int dA, int dB, const Vec& v) {
    Mat out = Mat::Zero(dB, dB);
    for (int j = 0; j < dB; ++j)
        for (int jp = 0; jp < dB; ++jp)
            for (int i = 0; i < dA; ++i)
                for (int ip = 0; ip < dA; ++ip) out(j, jp) += std::conj(v(i)) * X(i * dB + j, ip * dB + jp) * v(ip);
    return out;
}

std::pair<double, Vec> min_eigen(const Mat& M) {
    const Mat H = (M + M.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

struct Run {
    double value;
    Vec v;
    Vec w;
    bool converged;
};

Run seesaw(const Mat& X, int dA, int dB, Vec w, const OracleOptions& opts) {
    w.normalize();
    auto [value, v] = min_eigen(project_b(X, dA, dB, w));
    for (int it = 0; it < opts.max_iterations; ++it) {
        auto [vw, wn] = min_eigen(project_a(X, dA, dB, v));
        auto [vv, vn] = min_eigen(project_b(X, dA, dB, wn));
        const double prev = value;
        // Each half step minimizes over one factor, so the objective never increases.
        if (vv <= value) {
            value = vv;
            v = vn;
            w = wn;
        }
        if (prev - vv <= opts.tol * std::max(1.0, std::abs(vv))) return {value, v, w, true};
    }
    return {value, v, w, false};
}

CVector to_cvector(const Vec& x) {
    CVector out(static_cast<std::size_t>(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = x(i);
    return out;
}

}  // namespace

OracleEstimate estimate_mu(const BipartiteHermitian& X, const OracleOptions& opts) {
    const int dA = X.dA(), dB = X.dB();
    const Mat M = to_eigen(X);

    std::vector<Vec> starts;
    // Axis-aligned starts: basis vectors and their pairwise balanced sums.
    for (int j = 0; j < dB; ++j) {
        Vec e = Vec::Zero(dB);
        e(j) = 1;
        starts.push_back(e);
        for (int k = j + 1; k < dB; ++k)
            for (const std::complex<double> ph : {std::complex<double>(1, 0), std::complex<double>(-1, 0),
                                                  std::complex<double>(0, 1), std::complex<double>(0, -1)}) {
                Vec s = Vec::Zero(dB);
                s(j) = 1;
                s(k) = ph;
                starts.push_back(s);
            }
    }
    const int n_random = opts.restarts > 0 ? opts.restarts : 8 * dA * dB;
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int r = 0; r < n_random; ++r) {
        Vec s(dB);
        for (int j = 0; j < dB; ++j) s(j) = {normal(rng), normal(rng)};
        if (s.norm() == 0) s(0) = 1;
        starts.push_back(s);
    }

    OracleEstimate best;
    best.mu_hat = std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
        const Run run = seesaw(M, dA, dB, s, opts);
        if (run.value < best.mu_hat) {
            best.mu_hat = run.value;
            best.argmin_v = to_cvector(run.v);
            best.argmin_w = to_cvector(run.w);
            best.converged = run.converged;
        }
    }
    best.restarts = static_cast<int>(starts.size());
    return best;
}

double lambda_min(const BipartiteHermitian& X) {
    Eigen::SelfAdjointEigenSolver<Mat> es(to_eigen(X), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

Rational exact_objective(const BipartiteHermitian& X, const CVector& v, const CVector& w) {
    auto rationalize = [](const CVector& x) {
        GaussVector out;
        Rational norm(0);
        for (const auto& z : x) {
            GaussRational g(Rational(z.real()), Rational(z.imag()));
            norm += g.re * g.re + g.im * g.im;
            out.push_back(std::move(g));
        }
        return std::pair{out, norm};
    };
    const auto [ev, nv] = rationalize(v);
    const auto [ew, nw] = rationalize(w);
    if (sgn(nv) == 0 || sgn(nw) == 0) throw std::invalid_argument("zero vector");
    return product_expectation(X, ev, ew) / (nv * nw);
}

}  // namespace witnessgate
