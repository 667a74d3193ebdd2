#pragma once

// Exact scalars: rationals (GMP), Gaussian rationals Q(i) and elements of a
// real quadratic extension Q(sqrt(D)) with exact sign determination.

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace witnessgate {

/// Arbitrary precision rational. mpq_class keeps values canonical after every
/// arithmetic operation (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign operator*(Sign a, Sign b) {
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
inline Sign operator-(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }

const char* to_string(Sign s);

/// Builds num/den in canonical form; throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

inline Sign sign(const Rational& x) {
    const int s = sgn(x);
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline double to_double(const Rational& x) { return x.get_d(); }
inline Rational abs_value(const Rational& x) { return abs(x); }

/// Upper bound of |x| as a rational (identity on Q).
inline Rational abs_upper_bound(const Rational& x) { return abs(x); }

/// Rational r with r >= sqrt(x), x >= 0. Exact when x is a perfect square.
Rational sqrt_upper(const Rational& x);

/// Exact rational square root when x is the square of a rational.
bool exact_sqrt(const Rational& x, Rational& root);

std::string format_rational(const Rational& x);

/// Parses "p/q" or an integer "n". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// ---------------------------------------------------------------------------

/// a + b i with a, b rational.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) { re.canonicalize(); }  // NOLINT(implicit)
    GaussRational(int r) : re(r), im(0) {}                  // NOLINT(implicit)
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    [[nodiscard]] GaussRational conj() const { return {re, -im}; }
    /// |z|^2, always rational.
    [[nodiscard]] Rational norm2() const { return re * re + im * im; }
    [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    [[nodiscard]] bool is_real() const { return sgn(im) == 0; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

/// Formats as "a", "a+bi" or "a-bi" (rational parts in p/q form).
std::string format_gauss(const GaussRational& z);

/// Accepts "p/q", "p/q+r/si", "p/q-r/si", "r/si" and "i" forms, whitespace-free.
GaussRational parse_gauss(std::string_view text);

// ---------------------------------------------------------------------------

/// a + b sqrt(D), D >= 0. Radicands that are perfect rational squares are folded
/// into the rational part on construction, so Q embeds as b == 0.
class QuadSurd {
public:
    QuadSurd() : a_(0), b_(0), d_(0) {}
    QuadSurd(Rational a) : a_(std::move(a)), b_(0), d_(0) { a_.canonicalize(); }  // NOLINT(implicit)
    QuadSurd(int a) : a_(a), b_(0), d_(0) {}                  // NOLINT(implicit)
    QuadSurd(Rational a, Rational b, Rational radicand);

    /// sqrt(x) for rational x >= 0.
    static QuadSurd sqrt(const Rational& x) { return {Rational(0), Rational(1), x}; }

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] const Rational& radicand() const { return d_; }
    [[nodiscard]] bool is_rational() const { return sgn(b_) == 0; }
    [[nodiscard]] bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    [[nodiscard]] QuadSurd conjugate() const { return {a_, -b_, d_}; }
    /// a^2 - b^2 D.
    [[nodiscard]] Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
    [[nodiscard]] double to_double() const;

    QuadSurd& operator+=(const QuadSurd& o);
    QuadSurd& operator-=(const QuadSurd& o);
    QuadSurd& operator*=(const QuadSurd& o);
    QuadSurd& operator/=(const QuadSurd& o);

    friend QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
    friend QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
    friend QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
    friend QuadSurd operator/(QuadSurd x, const QuadSurd& y) { return x /= y; }
    friend QuadSurd operator-(const QuadSurd& x) { return {-x.a_, -x.b_, x.d_}; }
    friend bool operator==(const QuadSurd& x, const QuadSurd& y);

private:
    void normalize();
    /// Common radicand of two operands; throws std::domain_error on mismatch.
    static const Rational& shared_radicand(const QuadSurd& x, const QuadSurd& y);

    Rational a_;
    Rational b_;
    Rational d_;
};

/// Exact sign of a + b sqrt(D).
Sign surd_sign(const QuadSurd& x);

inline Sign sign(const QuadSurd& x) { return surd_sign(x); }
inline bool is_zero(const QuadSurd& x) { return x.is_zero(); }
inline double to_double(const QuadSurd& x) { return x.to_double(); }
Rational abs_upper_bound(const QuadSurd& x);

std::string format_surd(const QuadSurd& x);
std::ostream& operator<<(std::ostream& os, const QuadSurd& x);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

}  // namespace witnessgate
