#pragma once

// Sparse multivariate polynomials over Q with a lex or graded reverse lex
// term order (variable 0 is the largest).

#include "witnessgate/scalars.hpp"
#include "witnessgate/unipoly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace witnessgate {

inline constexpr int kMaxVars = 12;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    [[nodiscard]] int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    [[nodiscard]] bool is_one() const { return degree() == 0; }
    [[nodiscard]] bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    [[nodiscard]] bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
        return m;
    }
    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
        return m;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
        return m;
    }
    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
        return m;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Lex comparison: negative when a < b.
inline int lex_compare(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

enum class TermOrder { Lex, GrevLex };

/// Graded reverse lex comparison: negative when a < b.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

inline int order_compare(TermOrder o, const Monomial& a, const Monomial& b) {
    return o == TermOrder::Lex ? lex_compare(a, b) : grevlex_compare(a, b);
}

struct Term {
    Monomial m;
    Rational c;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars, TermOrder order = TermOrder::Lex) : nvars_(nvars), order_(order) {}
    static MultiPoly constant(int nvars, const Rational& c, TermOrder order = TermOrder::Lex);
    static MultiPoly variable(int nvars, int i, TermOrder order = TermOrder::Lex);
    /// Terms in any order; like terms are combined and zeros dropped.
    static MultiPoly from_terms(int nvars, std::vector<Term> terms, TermOrder order = TermOrder::Lex);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] TermOrder order() const { return order_; }
    /// The same polynomial with its terms sorted for another order.
    [[nodiscard]] MultiPoly with_order(TermOrder order) const;
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Terms sorted in decreasing term order.
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const Term& leading() const;
    [[nodiscard]] int total_degree() const;

    [[nodiscard]] MultiPoly monic() const;
    [[nodiscard]] MultiPoly derivative(int var) const;
    [[nodiscard]] Rational eval(const std::vector<Rational>& point) const;
    /// True when only variable `var` occurs.
    [[nodiscard]] bool is_univariate_in(int var) const;
    /// Coefficients in `var` (requires is_univariate_in(var)).
    [[nodiscard]] QPoly to_univariate(int var) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) { return a * Rational(-1); }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// this - c * m * g, the reduction step.
    void sub_scaled(const Rational& c, const Monomial& m, const MultiPoly& g);

    [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    TermOrder order_ = TermOrder::Lex;
    std::vector<Term> terms_;
};

}  // namespace witnessgate
