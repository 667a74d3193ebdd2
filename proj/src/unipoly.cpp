#include "witnessgate/unipoly.hpp"

namespace witnessgate {

template class UniPoly<Rational>;
template class UniPoly<QuadSurd>;

SurdPoly to_surd_poly(const QPoly& p) {
    std::vector<QuadSurd> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return SurdPoly(std::move(c));
}

QPoly to_rational_poly(const SurdPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (!x.is_rational()) throw std::domain_error("coefficient " + format_surd(x) + " is irrational");
        c.push_back(x.a());
    }
    return QPoly(std::move(c));
}

const SignCase& lookup_sign_case(Sign g1a, Sign g2a, Sign g1b, Sign g2b) {
    const std::array<int, 4> key{static_cast<int>(g1a), static_cast<int>(g2a), static_cast<int>(g1b),
                                 static_cast<int>(g2b)};
    for (const auto& row : kSignTable)
        if (row.s == key) return row;
    throw std::invalid_argument("sign table lookup needs nonzero signs");
}

}  // namespace witnessgate
