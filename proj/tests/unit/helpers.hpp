#pragma once

#include "witnessgate/hermitian.hpp"
#include "witnessgate/multipoly.hpp"

#include <random>

namespace wg_test {

using namespace witnessgate;

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline QPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

inline QPoly linear_root(const Rational& r) { return QPoly({Rational(-r), Rational(1)}); }

inline BipartiteHermitian diag(int dA, int dB, std::initializer_list<long> d) {
    const auto n = static_cast<std::size_t>(dA * dB);
    GaussMatrix m(n, GaussVector(n));
    std::size_t i = 0;
    for (long x : d) m[i][i] = GaussRational(Rational(x)), ++i;
    return {dA, dB, std::move(m)};
}

inline BipartiteHermitian swap22() {
    GaussMatrix m(4, GaussVector(4));
    m[0][0] = 1;
    m[1][2] = 1;
    m[2][1] = 1;
    m[3][3] = 1;
    return {2, 2, std::move(m)};
}

/// Random Hermitian matrix with entries p/q, |p| <= 10, 1 <= q <= 10.
inline BipartiteHermitian random_hermitian(std::mt19937_64& rng, int dA, int dB) {
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    auto r = [&] { return make_rational(num(rng), den(rng)); };
    const auto n = static_cast<std::size_t>(dA * dB);
    GaussMatrix m(n, GaussVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = GaussRational(r());
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = GaussRational(r(), r());
            m[j][i] = m[i][j].conj();
        }
    }
    return {dA, dB, std::move(m)};
}

inline GaussVector random_gauss_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    GaussVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    return v;
}

}  // namespace wg_test
