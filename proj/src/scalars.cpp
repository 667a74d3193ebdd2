#include "witnessgate/scalars.hpp"

#include <cctype>
#include <cmath>

namespace witnessgate {

const char* to_string(Sign s) {
    switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    }
    return "?";
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

bool exact_sqrt(const Rational& x, Rational& root) {
    if (sgn(x) < 0) return false;
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    root = make_rational(Integer(sqrt(n)), Integer(sqrt(d)));
    return true;
}

Rational sqrt_upper(const Rational& x) {
    if (sgn(x) < 0) throw std::domain_error("sqrt_upper of a negative rational");
    Rational root;
    if (exact_sqrt(x, root)) return root;
    // sqrt(p/q) = sqrt(p q) / q <= (isqrt(p q) + 1) / q
    const Integer pq = x.get_num() * x.get_den();
    return make_rational(Integer(sqrt(pq)) + 1, x.get_den());
}

std::string format_rational(const Rational& x) { return x.get_str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    if (!all_digits(body)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
        throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    const Integer den(std::string{den_text});
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

// ---------------------------------------------------------------------------

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    const Rational n = o.norm2();
    if (sgn(n) == 0) throw std::domain_error("Gaussian rational division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

std::string format_gauss(const GaussRational& z) {
    if (z.is_real()) return format_rational(z.re);
    std::string out;
    if (sgn(z.re) != 0) out = format_rational(z.re);
    if (sgn(z.im) > 0 && !out.empty()) out += '+';
    out += format_rational(z.im);
    out += 'i';
    return out;
}

GaussRational parse_gauss(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty scalar");
    if (text.back() != 'i') return GaussRational(parse_rational(text));

    std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view s) -> Rational {
        if (s.empty() || s == "+") return Rational(1);
        if (s == "-") return Rational(-1);
        return parse_rational(s);
    };
    if (split == std::string_view::npos) return GaussRational(Rational(0), imag_part(body));
    return GaussRational(parse_rational(body.substr(0, split)), imag_part(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << format_gauss(z); }

// ---------------------------------------------------------------------------

QuadSurd::QuadSurd(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
    a_.canonicalize();
    b_.canonicalize();
    d_.canonicalize();
    if (sgn(d_) < 0) throw std::domain_error("negative radicand");
    normalize();
}

void QuadSurd::normalize() {
    if (sgn(b_) == 0) return;
    Rational root;
    if (exact_sqrt(d_, root)) {
        a_ += b_ * root;
        b_ = 0;
    }
}

const Rational& QuadSurd::shared_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    if (x.d_ != y.d_) throw std::domain_error("QuadSurd radicand mismatch");
    return x.d_;
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
    d_ = shared_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
    d_ = shared_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
    const Rational d = shared_radicand(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
    if (o.is_zero()) throw std::domain_error("QuadSurd division by zero");
    const Rational d = shared_radicand(*this, o);
    if (o.is_rational()) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    // (a + b sqrtD)^-1 = (a - b sqrtD) / (a^2 - b^2 D); the norm is nonzero
    // because perfect-square radicands never reach here with b != 0.
    const Rational n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    d_ = d;
    return *this;
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.is_rational() || x.d_ == y.d_;
}

double QuadSurd::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

Sign surd_sign(const QuadSurd& x) {
    const Sign sa = sign(x.a());
    const Sign sb = (sgn(x.radicand()) == 0) ? Sign::Zero : sign(x.b());
    if (sb == Sign::Zero) return sa;
    if (sa == Sign::Zero || sa == sb) return sb;
    // Opposite signs: the larger magnitude wins; compare a^2 against b^2 D.
    const int cmp_result = cmp(x.a() * x.a(), x.b() * x.b() * x.radicand());
    if (cmp_result > 0) return sa;
    if (cmp_result < 0) return sb;
    return Sign::Zero;
}

Rational abs_upper_bound(const QuadSurd& x) {
    if (x.is_rational()) return abs(x.a());
    return Rational(abs(x.a()) + abs(x.b()) * sqrt_upper(x.radicand()));
}

std::string format_surd(const QuadSurd& x) {
    if (x.is_rational()) return format_rational(x.a());
    std::string out = format_rational(x.a());
    out += sgn(x.b()) >= 0 ? "+" : "-";
    out += format_rational(abs(x.b()));
    out += "*sqrt(" + format_rational(x.radicand()) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << format_surd(x); }

}  // namespace witnessgate
