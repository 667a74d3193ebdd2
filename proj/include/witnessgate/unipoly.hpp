#pragma once

// Dense univariate polynomials over an exact ordered field (Rational or
// QuadSurd), with Euclidean gcd, Sturm chains, real root counting, the
// multiplicity-sequence nonnegativity test and the mesh / sign-table machinery
// for deciding alternatives g1(t) >= 0 or g2(t) >= 0.

#include "witnessgate/scalars.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace witnessgate {

template <class K>
class UniPoly {
public:
    UniPoly() = default;
    /// Coefficients lowest degree first; trailing zeros are trimmed.
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(K c) { return UniPoly(std::vector<K>{std::move(c)}); }
    static UniPoly monomial(K c, int deg) {
        std::vector<K> v(static_cast<std::size_t>(deg) + 1, K(0));
        v.back() = std::move(c);
        return UniPoly(std::move(v));
    }
    static UniPoly identity() { return monomial(K(1), 1); }

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] const std::vector<K>& coeffs() const { return c_; }
    [[nodiscard]] K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : K(0);
    }
    [[nodiscard]] const K& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    [[nodiscard]] UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<int>(i));
        return UniPoly(std::move(d));
    }

    template <class P>
    [[nodiscard]] K eval(const P& x) const {
        K acc(0);
        const K xx(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xx + *it;
        return acc;
    }

    [[nodiscard]] Sign sign_at(const Rational& x) const { return sign(eval(x)); }

    /// Sign of f(t) as t -> +inf (to_plus) or -inf.
    [[nodiscard]] Sign sign_at_infinity(bool to_plus) const {
        if (c_.empty()) return Sign::Zero;
        const Sign s = sign(c_.back());
        return (to_plus || degree() % 2 == 0) ? s : -s;
    }

    [[nodiscard]] UniPoly monic() const {
        if (c_.empty()) return {};
        const K lc = c_.back();
        std::vector<K> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / lc;
        return UniPoly(std::move(v));
    }

    /// Coefficient list reversed (t^n f(1/t) for nonzero constant term).
    [[nodiscard]] UniPoly reversed() const {
        std::vector<K> v(c_.rbegin(), c_.rend());
        return UniPoly(std::move(v));
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const K& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(const UniPoly& a) { return a * K(-1); }
    friend UniPoly operator*(UniPoly a, const K& s) { return a *= s; }
    friend UniPoly operator*(const K& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (witnessgate::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    [[nodiscard]] UniPoly pow(unsigned e) const {
        UniPoly result = constant(K(1));
        for (unsigned i = 0; i < e; ++i) result = result * *this;
        return result;
    }

    [[nodiscard]] std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && witnessgate::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

using QPoly = UniPoly<Rational>;
using SurdPoly = UniPoly<QuadSurd>;

/// Lifts a rational polynomial into Q(sqrt D).
SurdPoly to_surd_poly(const QPoly& p);
/// Converts back when every coefficient is rational; throws otherwise.
QPoly to_rational_poly(const SurdPoly& p);

struct RationalInterval {
    Rational lo;
    Rational hi;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (!(lo < hi)) throw std::invalid_argument("RationalInterval requires lo < hi");
    }
};

struct AllReals {};

using Domain = std::variant<RationalInterval, AllReals>;

struct EndpointIsRoot : std::domain_error {
    explicit EndpointIsRoot(const Rational& at)
        : std::domain_error("interval endpoint " + format_rational(at) + " is a root"), point(at) {}
    Rational point;
};

template <class K>
struct SturmChain {
    std::vector<UniPoly<K>> polynomials;

    /// Sign variations at x; zero entries are skipped, which makes the count
    /// right-continuous in x.
    [[nodiscard]] int variations_at(const Rational& x) const;
    [[nodiscard]] int variations_at_infinity(bool to_plus) const;
};

struct MultiplicitySequence {
    std::vector<int> d;
};

// --- Euclidean algebra -------------------------------------------------------

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& f, const UniPoly<K>& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> rem = f.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {UniPoly<K>{}, f};
    std::vector<K> quot(static_cast<std::size_t>(f.degree() - dg + 1), K(0));
    const K& lc = g.leading();
    for (int k = f.degree() - dg; k >= 0; --k) {
        const K q = rem[static_cast<std::size_t>(k + dg)] / lc;
        quot[static_cast<std::size_t>(k)] = q;
        if (is_zero(q)) continue;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * g.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {UniPoly<K>(std::move(quot)), UniPoly<K>(std::move(rem))};
}

template <class K>
UniPoly<K> rem(const UniPoly<K>& f, const UniPoly<K>& g) {
    return divmod(f, g).second;
}

/// Exact quotient; throws std::domain_error when g does not divide f.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& f, const UniPoly<K>& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

/// Monic gcd by Euclid's algorithm; gcd(f, 0) = monic(f).
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> f, UniPoly<K> g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        UniPoly<K> r = rem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

/// f / gcd(f, f'): same roots as f, each of multiplicity one.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
    if (f.is_constant()) return UniPoly<K>::constant(K(1));
    return exact_div(f, poly_gcd(f, f.derivative())).monic();
}

template <class K>
bool is_squarefree(const UniPoly<K>& f) {
    return !f.is_zero() && poly_gcd(f, f.derivative()).degree() == 0;
}

// --- Sturm -------------------------------------------------------------------

/// Chain {f0, f1, -f2, -f3, f4, f5, ...} with f1 = f0' and f_{i+1} the plain
/// remainder of f_{i-1} by f_i. Elementwise equal to the classical negated
/// remainder sequence.
template <class K>
SturmChain<K> sturm_chain(const UniPoly<K>& f) {
    if (f.is_constant()) throw std::invalid_argument("Sturm chain needs a nonconstant polynomial");
    if (!is_squarefree(f)) throw std::invalid_argument("Sturm chain needs a squarefree polynomial");
    std::vector<UniPoly<K>> plain{f, f.derivative()};
    while (!plain.back().is_zero() && plain.back().degree() > 0) {
        UniPoly<K> r = rem(plain[plain.size() - 2], plain.back());
        if (r.is_zero()) break;
        plain.push_back(std::move(r));
    }
    SturmChain<K> chain;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        const bool negate = (i % 4 == 2) || (i % 4 == 3);
        chain.polynomials.push_back(negate ? -plain[i] : plain[i]);
    }
    return chain;
}

namespace detail {
inline int count_variations(const std::vector<Sign>& signs) {
    int count = 0;
    Sign prev = Sign::Zero;
    for (Sign s : signs) {
        if (s == Sign::Zero) continue;
        if (prev != Sign::Zero && s != prev) ++count;
        prev = s;
    }
    return count;
}
}  // namespace detail

template <class K>
int SturmChain<K>::variations_at(const Rational& x) const {
    std::vector<Sign> signs;
    signs.reserve(polynomials.size());
    for (const auto& p : polynomials) signs.push_back(p.sign_at(x));
    return detail::count_variations(signs);
}

template <class K>
int SturmChain<K>::variations_at_infinity(bool to_plus) const {
    std::vector<Sign> signs;
    signs.reserve(polynomials.size());
    for (const auto& p : polynomials) signs.push_back(p.sign_at_infinity(to_plus));
    return detail::count_variations(signs);
}

namespace detail {

/// Distinct roots of squarefree f inside the open interval (lo, hi); an
/// absent bound means infinity. Endpoints may be roots.
template <class K>
int count_open(const SturmChain<K>& chain, const std::optional<Rational>& lo,
               const std::optional<Rational>& hi) {
    const int v_lo = lo ? chain.variations_at(*lo) : chain.variations_at_infinity(false);
    const int v_hi = hi ? chain.variations_at(*hi) : chain.variations_at_infinity(true);
    int n = v_lo - v_hi;  // roots in (lo, hi]
    if (hi && chain.polynomials.front().sign_at(*hi) == Sign::Zero) --n;
    return n;
}

}  // namespace detail

/// Number of distinct real roots of f in the open interval (lo, hi), with
/// missing bounds standing for -inf / +inf. Endpoints may be roots of f.
template <class K>
int count_roots_open(const UniPoly<K>& f, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi) {
    if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (lo && hi && !(*lo < *hi)) return 0;
    const UniPoly<K> g = squarefree_part(f);
    if (g.is_constant()) return 0;
    return detail::count_open(sturm_chain(g), lo, hi);
}

/// Distinct real roots of f in the domain. For intervals, both endpoints must
/// be non-roots (EndpointIsRoot otherwise).
template <class K>
int count_roots(const UniPoly<K>& f, const Domain& domain) {
    if (const auto* iv = std::get_if<RationalInterval>(&domain)) {
        if (f.sign_at(iv->lo) == Sign::Zero) throw EndpointIsRoot(iv->lo);
        if (f.sign_at(iv->hi) == Sign::Zero) throw EndpointIsRoot(iv->hi);
        return count_roots_open(f, iv->lo, iv->hi);
    }
    return count_roots_open<K>(f, std::nullopt, std::nullopt);
}

/// Cauchy bound 1 + max |a_i / a_n|; every real root lies in (-B, B). For
/// coefficients in Q(sqrt D) a rational upper bound of each ratio is used.
template <class K>
Rational cauchy_bound(const UniPoly<K>& f) {
    if (f.is_constant()) throw std::invalid_argument("Cauchy bound of a constant polynomial");
    Rational best(0);
    for (int i = 0; i < f.degree(); ++i) {
        const Rational r = abs_upper_bound(K(f.coeffs()[static_cast<std::size_t>(i)] / f.leading()));
        if (r > best) best = r;
    }
    return best + 1;
}

// --- Multiplicities and nonnegativity ---------------------------------------

namespace detail {

/// f_1 = f, f_{k+1} = gcd(f_k, f_k'), up to the last nonconstant element.
template <class K>
std::vector<UniPoly<K>> gcd_tower(const UniPoly<K>& f) {
    std::vector<UniPoly<K>> tower;
    UniPoly<K> cur = f;
    while (!cur.is_constant()) {
        tower.push_back(cur);
        cur = poly_gcd(cur, cur.derivative());
    }
    return tower;
}

template <class K>
std::vector<int> multiplicity_counts(const UniPoly<K>& f, const std::optional<Rational>& lo,
                                     const std::optional<Rational>& hi) {
    std::vector<int> d;
    for (const auto& fk : gcd_tower(f)) {
        const int n = count_roots_open(fk, lo, hi);
        if (n == 0) break;
        d.push_back(n);
    }
    return d;
}

/// d_k == d_{k-1} for all even k, with d extended by its terminating zero so
/// that a top level of odd multiplicity is caught.
inline bool even_multiplicities_only(std::vector<int> d) {
    d.push_back(0);
    for (std::size_t k = 2; k <= d.size(); k += 2)
        if (d[k - 1] != d[k - 2]) return false;
    return true;
}

inline std::pair<std::optional<Rational>, std::optional<Rational>> bounds_of(const Domain& domain) {
    if (const auto* iv = std::get_if<RationalInterval>(&domain)) return {iv->lo, iv->hi};
    return {std::nullopt, std::nullopt};
}

}  // namespace detail

/// Real roots in the open interval counted with multiplicity.
template <class K>
int count_roots_with_multiplicity(const UniPoly<K>& f, const std::optional<Rational>& lo,
                                  const std::optional<Rational>& hi) {
    if (f.is_constant()) return 0;
    int n = 0;
    for (const auto& fk : detail::gcd_tower(f)) n += count_roots_open(fk, lo, hi);
    return n;
}

/// d_1 = number of distinct real roots of f, d_k that of f_k = gcd(f_{k-1},
/// f_{k-1}'), stopping at the first zero count (not included).
template <class K>
MultiplicitySequence multiplicity_sequence(const UniPoly<K>& f) {
    if (f.is_constant()) throw std::invalid_argument("multiplicity sequence of a constant");
    return {detail::multiplicity_counts<K>(f, std::nullopt, std::nullopt)};
}

/// Same tower, counting only roots inside the open interval.
template <class K>
MultiplicitySequence multiplicity_sequence(const UniPoly<K>& f, const RationalInterval& iv) {
    if (f.is_constant()) throw std::invalid_argument("multiplicity sequence of a constant");
    return {detail::multiplicity_counts<K>(f, iv.lo, iv.hi)};
}

/// f(t) >= 0 on the domain, decided from the multiplicity sequence.
template <class K>
bool nonneg(const UniPoly<K>& f, const Domain& domain) {
    if (f.is_zero()) return true;
    if (f.is_constant()) return sign(f.leading()) == Sign::Positive;
    const auto [lo, hi] = detail::bounds_of(domain);
    if (!lo) {
        if (f.degree() % 2 != 0 || sign(f.leading()) != Sign::Positive) return false;
        return detail::even_multiplicities_only(detail::multiplicity_counts(f, lo, hi));
    }
    if (f.sign_at(*lo) == Sign::Negative || f.sign_at(*hi) == Sign::Negative) return false;
    if (!detail::even_multiplicities_only(detail::multiplicity_counts(f, lo, hi))) return false;
    // No sign change inside; both endpoints may still be roots, so sample an
    // interior non-root point.
    Rational probe = (*lo + *hi) / 2;
    while (f.sign_at(probe) == Sign::Zero) probe = (probe + *hi) / 2;
    return f.sign_at(probe) == Sign::Positive;
}

/// Product of the polynomials carrying the roots of odd multiplicity, monic.
template <class K>
UniPoly<K> odd_multiplicity_part(const UniPoly<K>& f) {
    if (f.is_zero()) throw std::domain_error("odd multiplicity part of the zero polynomial");
    const auto tower = detail::gcd_tower(f);
    std::vector<UniPoly<K>> reduced;
    for (const auto& fk : tower) reduced.push_back(squarefree_part(fk));
    reduced.push_back(UniPoly<K>::constant(K(1)));
    UniPoly<K> sigma = UniPoly<K>::constant(K(1));
    for (std::size_t k = 0; k + 1 < reduced.size(); k += 2)  // k = 0 is multiplicity 1
        sigma = sigma * exact_div(reduced[k], reduced[k + 1]);
    return sigma.monic();
}

// --- Mesh, precedence and alternatives -----------------------------------------

namespace detail {

template <class K>
struct RootCounter {
    std::optional<SturmChain<K>> chain;

    explicit RootCounter(const UniPoly<K>& g) {
        if (!g.is_zero() && !g.is_constant()) {
            const UniPoly<K> r = squarefree_part(g);
            if (!r.is_constant()) chain = sturm_chain(r);
        }
    }
    [[nodiscard]] int count(const Rational& a, const Rational& b) const {
        return chain ? count_open(*chain, a, b) : 0;
    }
};

template <class K>
bool is_root(const UniPoly<K>& g, const Rational& x) {
    return g.sign_at(x) == Sign::Zero;
}

template <class K>
void mesh_recurse(const UniPoly<K>& g1, const UniPoly<K>& g2, const RootCounter<K>& c1,
                  const RootCounter<K>& c2, const Rational& a, const Rational& b,
                  std::vector<Rational>& out) {
    if (c1.count(a, b) <= 1 && c2.count(a, b) <= 1) {
        out.push_back(b);
        return;
    }
    Rational mid = (a + b) / 2;
    while (is_root(g1, mid) || is_root(g2, mid)) mid = (mid + b) / 2;
    mesh_recurse(g1, g2, c1, c2, a, mid, out);
    mesh_recurse(g1, g2, c1, c2, mid, b, out);
}

}  // namespace detail

/// Ordered points lo = t_1 < ... < t_l = hi, none a root of g1 or g2, such
/// that every (t_i, t_{i+1}) holds at most one root of each polynomial.
/// Bisection; a midpoint that is a root is moved to (mid + hi) / 2.
template <class K>
std::vector<Rational> generate_mesh(const UniPoly<K>& g1, const UniPoly<K>& g2,
                                    const RationalInterval& iv) {
    if (g1.is_zero() || g2.is_zero()) throw std::invalid_argument("mesh of a zero polynomial");
    for (const Rational* end : {&iv.lo, &iv.hi})
        if (detail::is_root(g1, *end) || detail::is_root(g2, *end)) throw EndpointIsRoot(*end);
    const detail::RootCounter<K> c1(g1), c2(g2);
    std::vector<Rational> mesh{iv.lo};
    detail::mesh_recurse(g1, g2, c1, c2, iv.lo, iv.hi, mesh);
    return mesh;
}

/// True iff the sign change of g1 in (lo, hi) happens before that of g2.
/// Endpoint signs must match case 8 or 9 of the sign table and the
/// polynomials must not share a root in the interval.
template <class K>
bool precedence(const UniPoly<K>& g1, const UniPoly<K>& g2, const RationalInterval& iv) {
    Rational a = iv.lo, b = iv.hi;
    const Sign g1a = g1.sign_at(a), g2a = g2.sign_at(a);
    for (int guard = 0; guard < 100000; ++guard) {
        const Rational mid = (a + b) / 2;
        // s1 <= 0 iff g1 changed sign on (a, mid]
        const Sign s1 = g1.sign_at(mid) * g1a;
        const Sign s2 = g2.sign_at(mid) * g2a;
        if (s1 != Sign::Positive && s2 == Sign::Positive) return true;
        if (s1 == Sign::Positive && s2 != Sign::Positive) return false;
        if (s1 == Sign::Positive && s2 == Sign::Positive)
            a = mid;
        else
            b = mid;
    }
    throw std::runtime_error("precedence: no separation found (common root?)");
}

/// One row of the endpoint sign table for the alternative g1 >= 0 or g2 >= 0.
struct SignCase {
    int number;            // 1..16
    std::array<int, 4> s;  // g1(t_i), g2(t_i), g1(t_i+1), g2(t_i+1) as +1/-1
    enum class Outcome { Valid, Invalid, Precedence } outcome;
};

/// The 16 endpoint sign combinations: 1-7 valid, 8-9 need precedence,
/// 10-16 invalid.
inline constexpr std::array<SignCase, 16> kSignTable{{
    {1, {+1, +1, +1, +1}, SignCase::Outcome::Valid},
    {2, {+1, +1, +1, -1}, SignCase::Outcome::Valid},
    {3, {+1, +1, -1, +1}, SignCase::Outcome::Valid},
    {4, {+1, -1, +1, +1}, SignCase::Outcome::Valid},
    {5, {-1, +1, +1, +1}, SignCase::Outcome::Valid},
    {6, {-1, +1, -1, +1}, SignCase::Outcome::Valid},
    {7, {+1, -1, +1, -1}, SignCase::Outcome::Valid},
    {8, {+1, -1, -1, +1}, SignCase::Outcome::Precedence},
    {9, {-1, +1, +1, -1}, SignCase::Outcome::Precedence},
    {10, {+1, +1, -1, -1}, SignCase::Outcome::Invalid},
    {11, {-1, -1, +1, +1}, SignCase::Outcome::Invalid},
    {12, {+1, -1, -1, -1}, SignCase::Outcome::Invalid},
    {13, {-1, +1, -1, -1}, SignCase::Outcome::Invalid},
    {14, {-1, -1, +1, -1}, SignCase::Outcome::Invalid},
    {15, {-1, -1, -1, +1}, SignCase::Outcome::Invalid},
    {16, {-1, -1, -1, -1}, SignCase::Outcome::Invalid},
}};

const SignCase& lookup_sign_case(Sign g1a, Sign g2a, Sign g1b, Sign g2b);

struct AlternativeResult {
    bool holds = true;
    std::optional<Rational> witness_point;  // g1 < 0 and g2 < 0 there, when !holds
};

namespace detail {

/// Bisects towards the subinterval of (a, b) where both polynomials are
/// negative; each polynomial changes sign exactly once on (a, b).
template <class K>
Rational both_negative_point(const UniPoly<K>& g1, const UniPoly<K>& g2, Rational a, Rational b) {
    const Sign g1a = g1.sign_at(a), g2a = g2.sign_at(a);
    for (int guard = 0; guard < 100000; ++guard) {
        const Rational m = (a + b) / 2;
        const Sign s1 = g1.sign_at(m), s2 = g2.sign_at(m);
        if (s1 == Sign::Negative && s2 == Sign::Negative) return m;
        // A polynomial that is still >= 0 at m tells on which side of its
        // root m lies.
        const Sign start = (s1 != Sign::Negative) ? g1a : g2a;
        if (start == Sign::Positive)
            a = m;
        else
            b = m;
    }
    throw std::runtime_error("both_negative_point did not converge");
}

/// Moves an endpoint that is a root of g1 or g2 inward until the half-open
/// stretch between old and new endpoint is root-free.
template <class K>
Rational nudge_endpoint(const UniPoly<K>& g1, const UniPoly<K>& g2, const Rational& end,
                        const Rational& other) {
    if (!is_root(g1, end) && !is_root(g2, end)) return end;
    Rational step = (other - end) / 2;
    for (;;) {
        const Rational p = end + step;
        const auto lo = step > 0 ? end : p;
        const auto hi = step > 0 ? p : end;
        const bool clear = !is_root(g1, p) && !is_root(g2, p) &&
                           (g1.is_constant() || count_roots_open(g1, lo, hi) == 0) &&
                           (g2.is_constant() || count_roots_open(g2, lo, hi) == 0);
        if (clear) return p;
        step /= 2;
    }
}

template <class K>
Rational alternative_bound(const UniPoly<K>& g1, const UniPoly<K>& g2) {
    Rational b(1);
    for (const auto* g : {&g1, &g2})
        if (!g->is_constant()) b = std::max(b, cauchy_bound(*g));
    return b;
}

}  // namespace detail

/// Decides: for all t in the domain, g1(t) >= 0 or g2(t) >= 0. Over AllReals the
/// mesh spans (-B, B) with B a common Cauchy bound; beyond it both signs are
/// those at the mesh ends. When false a rational witness point is returned.
template <class K>
AlternativeResult eval_alternative(const UniPoly<K>& g1, const UniPoly<K>& g2, const Domain& domain) {
    if (g1.is_zero() || g2.is_zero()) return {};
    Rational lo, hi;
    if (const auto* iv = std::get_if<RationalInterval>(&domain)) {
        lo = detail::nudge_endpoint(g1, g2, iv->lo, iv->hi);
        hi = detail::nudge_endpoint(g1, g2, iv->hi, lo);
    } else {
        hi = detail::alternative_bound(g1, g2);
        lo = -hi;
    }
    const std::vector<Rational> mesh = generate_mesh(g1, g2, RationalInterval(lo, hi));

    std::vector<std::pair<Sign, Sign>> signs;
    signs.reserve(mesh.size());
    for (const auto& p : mesh) {
        const Sign s1 = g1.sign_at(p), s2 = g2.sign_at(p);
        if (s1 == Sign::Negative && s2 == Sign::Negative) return {false, p};
        signs.emplace_back(s1, s2);
    }

    std::optional<UniPoly<K>> common_odd;
    for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
        const SignCase& row =
            lookup_sign_case(signs[i].first, signs[i].second, signs[i + 1].first, signs[i + 1].second);
        if (row.outcome != SignCase::Outcome::Precedence) continue;  // invalid rows caught above
        if (!common_odd)
            common_odd = poly_gcd(odd_multiplicity_part(g1), odd_multiplicity_part(g2));
        if (!common_odd->is_constant() && count_roots_open(*common_odd, mesh[i], mesh[i + 1]) > 0)
            continue;  // both flip at the same point
        const bool g1_first = precedence(g1, g2, RationalInterval(mesh[i], mesh[i + 1]));
        const bool invalid = (row.number == 8) ? g1_first : !g1_first;
        if (invalid) return {false, detail::both_negative_point(g1, g2, mesh[i], mesh[i + 1])};
    }
    return {};
}

/// A rational point of the domain where f < 0, if any (single-polynomial
/// use of the alternative machinery, with a constant negative partner).
template <class K>
std::optional<Rational> find_negative_point(const UniPoly<K>& f, const Domain& domain) {
    if (f.is_zero()) return std::nullopt;
    return eval_alternative(f, UniPoly<K>::constant(K(-1)), domain).witness_point;
}

template <class K>
std::string UniPoly<K>::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const K& c = c_[static_cast<std::size_t>(i)];
        if (witnessgate::is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        std::string cs;
        if constexpr (std::is_same_v<K, Rational>)
            cs = format_rational(c);
        else
            cs = "(" + format_surd(c) + ")";
        out += cs;
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

extern template class UniPoly<Rational>;
extern template class UniPoly<QuadSurd>;

}  // namespace witnessgate
