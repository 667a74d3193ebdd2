#include "witnessgate/families.hpp"

namespace witnessgate {

BipartiteHermitian family_e(const Rational& a) {
    using G = GaussRational;
    const Rational d = make_rational(3, 5);
    const Rational h = a / 2;
    GaussMatrix m{
        {G(d), G(make_rational(1, 10)), G(), G(h, h)},
        {G(make_rational(1, 10)), G(d), G(make_rational(-1, 2)), G()},
        {G(), G(make_rational(-1, 2)), G(d), G(-a)},
        {G(h, -h), G(), G(-a), G(d)},
    };
    return {2, 2, std::move(m)};
}

BipartiteHermitian family_f(const Rational& a) {
    using G = GaussRational;
    const G one(1), two(2), z;
    GaussMatrix m{
        {G(2 + a), G(-a), z, one, one, z},
        {G(-a), G(1 + a), z, z, z, one},
        {z, z, two, G(a), G(a), one},
        {one, z, G(a), two, z, z},
        {one, z, G(a), z, one, z},
        {z, one, one, z, z, G(2 + a)},
    };
    return {3, 2, std::move(m)};
}

Family parse_family(const std::string& name) {
    if (name == "E" || name == "e") return Family::E;
    if (name == "F" || name == "f") return Family::F;
    throw std::invalid_argument("unknown family " + name);
}

BipartiteHermitian family_member(Family f, const Rational& a) {
    return f == Family::E ? family_e(a) : family_f(a);
}

}  // namespace witnessgate
