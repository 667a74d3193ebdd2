#include "witnessgate/multipoly.hpp"

#include <algorithm>

namespace witnessgate {

MultiPoly MultiPoly::constant(int nvars, const Rational& c, TermOrder order) {
    MultiPoly p(nvars, order);
    if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i, TermOrder order) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    MultiPoly p(nvars, order);
    p.terms_.push_back({Monomial::var(i), Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms, TermOrder order) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
    std::sort(terms.begin(), terms.end(),
              [order](const Term& a, const Term& b) { return order_compare(order, a.m, b.m) > 0; });
    MultiPoly p(nvars, order);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m)
            p.terms_.back().c += t.c;
        else
            p.terms_.push_back(std::move(t));
        if (sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
    }
    return p;
}

MultiPoly MultiPoly::with_order(TermOrder order) const {
    if (order == order_) return *this;
    return from_terms(nvars_, terms_, order);
}

const Term& MultiPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    MultiPoly p = *this;
    const Rational lc = terms_.front().c;
    for (auto& t : p.terms_) t.c /= lc;
    return p;
}

MultiPoly MultiPoly::derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const auto e = t.m.e[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Term d{t.m, t.c * e};
        d.m.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e - 1);
        out.push_back(std::move(d));
    }
    return from_terms(nvars_, std::move(out), order_);
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < t.m.e[static_cast<std::size_t>(i)]; ++k) v *= point[static_cast<std::size_t>(i)];
        acc += v;
    }
    return acc;
}

bool MultiPoly::is_univariate_in(int var) const {
    for (const auto& t : terms_)
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && t.m.e[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

QPoly MultiPoly::to_univariate(int var) const {
    if (!is_univariate_in(var)) throw std::invalid_argument("polynomial is not univariate");
    int deg = 0;
    for (const auto& t : terms_) deg = std::max<int>(deg, t.m.e[static_cast<std::size_t>(var)]);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& t : terms_) c[t.m.e[static_cast<std::size_t>(var)]] = t.c;
    return QPoly(std::move(c));
}

namespace {

// Merge of two sorted term lists: a + s * b.
std::vector<Term> merge(TermOrder order, const std::vector<Term>& a, const std::vector<Term>& b, const Rational& s,
                        const Monomial* shift) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial bm;
    auto bmono = [&](std::size_t k) -> const Monomial& {
        if (!shift) return b[k].m;
        bm = b[k].m * *shift;
        return bm;
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        const Monomial& m = bmono(j);
        const int cmp = i < a.size() ? order_compare(order, a[i].m, m) : -1;
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({m, s * b[j].c});
            ++j;
        } else {
            Rational c = a[i].c + s * b[j].c;
            if (sgn(c) != 0) out.push_back({a[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

void check_orders(const MultiPoly& a, const MultiPoly& b) {
    if (a.order() != b.order() && !a.is_zero() && !b.is_zero())
        throw std::invalid_argument("polynomials use different term orders");
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_orders(*this, o);
    if (is_zero()) order_ = o.order_;
    terms_ = merge(order_, terms_, o.terms_, Rational(1), nullptr);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_orders(*this, o);
    if (is_zero()) order_ = o.order_;
    terms_ = merge(order_, terms_, o.terms_, Rational(-1), nullptr);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) out.push_back({x.m * y.m, x.c * y.c});
    check_orders(a, b);
    return MultiPoly::from_terms(std::max(a.nvars_, b.nvars_), std::move(out), a.is_zero() ? b.order_ : a.order_);
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

void MultiPoly::sub_scaled(const Rational& c, const Monomial& m, const MultiPoly& g) {
    check_orders(*this, g);
    if (is_zero()) order_ = g.order_;
    terms_ = merge(order_, terms_, g.terms_, Rational(-c), &m);
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += sgn(t.c) < 0 ? " - " : " + ";
        else if (sgn(t.c) < 0) out += "-";
        const Rational a = abs(t.c);
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            const auto e = t.m.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)] : "x" + std::to_string(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += format_rational(a);
        else if (a == 1)
            out += mono;
        else
            out += format_rational(a) + "*" + mono;
    }
    return out;
}

}  // namespace witnessgate
