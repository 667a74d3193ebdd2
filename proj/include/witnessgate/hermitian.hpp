#pragma once

// Hermitian operators on H_A (x) H_B with entries in Q(i), product-vector
// expectations and partial contractions.

#include "witnessgate/scalars.hpp"
#include "witnessgate/unipoly.hpp"

#include <string>
#include <vector>

namespace witnessgate {

using GaussVector = std::vector<GaussRational>;
using GaussMatrix = std::vector<std::vector<GaussRational>>;

struct NotHermitian : std::invalid_argument {
    NotHermitian(int r, int c);
    int row;
    int col;
};

struct MalformedMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Square matrix over Q(i) acting on H_A (x) H_B. Flat index of the tensor
/// pair (i, j), 1-based, is (i - 1) * dB + j - 1; i runs over H_A.
class BipartiteHermitian {
public:
    /// Validates shape and Hermiticity (NotHermitian names the first bad pair).
    BipartiteHermitian(int dA, int dB, GaussMatrix entries);

    static BipartiteHermitian identity(int dA, int dB);

    [[nodiscard]] int dA() const { return dA_; }
    [[nodiscard]] int dB() const { return dB_; }
    [[nodiscard]] int dim() const { return dA_ * dB_; }
    [[nodiscard]] const GaussMatrix& entries() const { return m_; }
    [[nodiscard]] const GaussRational& at(int r, int c) const {
        return m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    /// X_{ij,i'j'} with 1-based tensor indices.
    [[nodiscard]] const GaussRational& x(int i, int j, int ip, int jp) const {
        return at((i - 1) * dB_ + j - 1, (ip - 1) * dB_ + jp - 1);
    }

    [[nodiscard]] BipartiteHermitian scaled(const Rational& s) const;
    /// The same operator on H_B (x) H_A.
    [[nodiscard]] BipartiteHermitian swapped() const;

private:
    int dA_;
    int dB_;
    GaussMatrix m_;
};

/// Parses {"dA": .., "dB": .., "entries": [[scalar strings]]}. Throws
/// MalformedMatrix for syntax/shape problems and NotHermitian otherwise.
BipartiteHermitian parse_matrix_json(const std::string& text);
BipartiteHermitian load_matrix_file(const std::string& path);
std::string matrix_to_json(const BipartiteHermitian& X);

/// <v (x) w| X |v (x) w>, exact.
Rational product_expectation(const BipartiteHermitian& X, const GaussVector& v, const GaussVector& w);

/// (X_w)_{ii'} = sum_{jj'} conj(w_j) X_{ij,i'j'} w_j'  (dA x dA).
GaussMatrix contract_b(const BipartiteHermitian& X, const GaussVector& w);
/// (X^v)_{jj'} = sum_{ii'} conj(v_i) X_{ij,i'j'} v_i'  (dB x dB).
GaussMatrix contract_a(const BipartiteHermitian& X, const GaussVector& v);

/// <v| M |v> for Hermitian M; the imaginary part must vanish.
Rational hermitian_form(const GaussMatrix& M, const GaussVector& v);

/// Characteristic polynomial det(lambda I - M) by the Faddeev-LeVerrier
/// recursion; rational because M is Hermitian.
QPoly characteristic_polynomial(const GaussMatrix& M);

struct EigenSignature {
    int n_neg = 0;
    int n_zero = 0;
    int n_pos = 0;
    friend bool operator==(const EigenSignature&, const EigenSignature&) = default;
};

/// Eigenvalue sign counts with multiplicity.
EigenSignature eigen_signature(const GaussMatrix& M);
EigenSignature eigen_signature(const BipartiteHermitian& X);

}  // namespace witnessgate
