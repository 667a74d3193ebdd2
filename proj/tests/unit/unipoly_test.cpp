#include "helpers.hpp"

#include <doctest.h>

using namespace wg_test;

TEST_CASE("gcd and squarefree part") {
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(poly_gcd(poly({1, 0, 1}), poly({1, 1})) == poly({1}));
    const QPoly f = linear_root(q(1)) * linear_root(q(1)) * linear_root(q(-2));
    CHECK(poly_gcd(f, f.derivative()) == poly({-1, 1}));
    CHECK(squarefree_part(linear_root(q(1)) * linear_root(q(1))) == poly({-1, 1}));
    CHECK(squarefree_part(poly({1, 0, 0, 0, 1})) == poly({1, 0, 0, 0, 1}));
    CHECK(squarefree_part(poly({0, 0, 0, 1})) == poly({0, 1}));
}

TEST_CASE("sturm chains") {
    const auto c = sturm_chain(poly({-2, 0, 1}));
    REQUIRE(c.polynomials.size() == 3);
    CHECK(c.polynomials[0] == poly({-2, 0, 1}));
    CHECK(c.polynomials[1] == poly({0, 2}));
    CHECK(c.polynomials[2] == poly({2}));
    CHECK(sturm_chain(poly({0, 1})).polynomials.size() == 2);
    const auto c3 = sturm_chain(poly({0, -1, 0, 1}));
    CHECK(c3.polynomials.size() == 4);
    CHECK(c3.polynomials.back().is_constant());
    CHECK(!c3.polynomials.back().is_zero());
}

TEST_CASE("root counting") {
    CHECK(count_roots(poly({-2, 0, 1}), RationalInterval(q(0), q(2))) == 1);
    CHECK(count_roots(poly({1, 0, 1}), AllReals{}) == 0);
    const QPoly cubic = linear_root(q(1)) * linear_root(q(2)) * linear_root(q(3));
    CHECK(count_roots(cubic, RationalInterval(q(0), q(10))) == 3);
    CHECK(count_roots(cubic, RationalInterval(q(3, 2), q(5, 2))) == 1);
    CHECK_THROWS_AS(count_roots(cubic, RationalInterval(q(1), q(5, 2))), EndpointIsRoot);
    CHECK(count_roots(cubic * cubic, AllReals{}) == 3);
}

TEST_CASE("multiplicity sequences and nonnegativity") {
    const QPoly a = linear_root(q(1)), b = linear_root(q(2));
    CHECK(multiplicity_sequence(a * a).d == std::vector<int>{1, 1});
    CHECK(multiplicity_sequence(a * a * b * b).d == std::vector<int>{2, 2});
    CHECK(multiplicity_sequence(a * a * linear_root(q(-3))).d == std::vector<int>{2, 1});
    CHECK(nonneg(a * a, AllReals{}));
    CHECK_FALSE(nonneg(poly({0, 0, 0, 1}), AllReals{}));
    CHECK_FALSE(nonneg(poly({1, 0, -3, 0, 1}), AllReals{}));
    CHECK(poly({1, 0, -3, 0, 1}).eval(q(5, 4)) == q(-319, 256));
    CHECK_FALSE(nonneg(a * a * a * b * b * b, AllReals{}));
    CHECK(nonneg(poly({0, -1, 1}), RationalInterval(q(1), q(3))));
    CHECK_FALSE(nonneg(poly({0, -1, 1}), RationalInterval(q(0), q(1))));
}

TEST_CASE("odd multiplicity part and cauchy bound") {
    const QPoly a = linear_root(q(1)), b = linear_root(q(2)), t = poly({0, 1});
    CHECK(odd_multiplicity_part(a * a * b).monic() == b);
    CHECK(odd_multiplicity_part(a * a).degree() == 0);
    CHECK(odd_multiplicity_part(t * t * t * a).monic() == t * a);
    CHECK(cauchy_bound(poly({-2, 0, 1})) == q(3));
    CHECK(cauchy_bound(poly({-5, 1})) == q(6));
    CHECK(cauchy_bound(poly({-8, 0, 2})) == q(5));
}

TEST_CASE("mesh and precedence") {
    const auto m1 = generate_mesh(poly({-2, 0, 1}), poly({1}), RationalInterval(q(-3), q(3)));
    for (std::size_t i = 0; i + 1 < m1.size(); ++i)
        CHECK(count_roots(poly({-2, 0, 1}), RationalInterval(m1[i], m1[i + 1])) <= 1);
    CHECK(m1.front() == q(-3));
    CHECK(m1.back() == q(3));
    const QPoly a = poly({-1, 1}), b = poly({1, 1});
    const auto m2 = generate_mesh(a, b, RationalInterval(q(-4), q(4)));
    for (std::size_t i = 0; i + 1 < m2.size(); ++i) {
        CHECK(count_roots(a, RationalInterval(m2[i], m2[i + 1])) <= 1);
        CHECK(count_roots(b, RationalInterval(m2[i], m2[i + 1])) <= 1);
    }
    CHECK_THROWS_AS(generate_mesh(a, b, RationalInterval(q(1), q(4))), EndpointIsRoot);
    CHECK(generate_mesh(poly({1}), poly({1}), RationalInterval(q(0), q(1))) == std::vector<Rational>{q(0), q(1)});
    // Sign case 9 on [0, 3]: g1 changes sign at 1, g2 at 2.
    CHECK(precedence(poly({-1, 1}), poly({2, -1}), RationalInterval(q(0), q(3))));
    CHECK_FALSE(precedence(poly({2, -1}), poly({-1, 1}), RationalInterval(q(0), q(3))));
    CHECK(precedence(linear_root(q(1, 3)), -linear_root(q(2, 3)), RationalInterval(q(0), q(1))));
    CHECK_FALSE(precedence(-linear_root(q(2, 3)), linear_root(q(1, 3)), RationalInterval(q(0), q(1))));
}

TEST_CASE("sign table") {
    int valid = 0, invalid = 0, prec = 0;
    for (const auto& c : kSignTable) {
        if (c.outcome == SignCase::Outcome::Valid) ++valid;
        if (c.outcome == SignCase::Outcome::Invalid) ++invalid;
        if (c.outcome == SignCase::Outcome::Precedence) ++prec;
    }
    CHECK(valid == 7);
    CHECK(prec == 2);
    CHECK(invalid == 7);
}

TEST_CASE("alternative evaluation") {
    CHECK(eval_alternative(poly({0, 1}), poly({0, -1}), RationalInterval(q(-1), q(1))).holds);
    const auto r = eval_alternative(poly({-1, 0, -1}), poly({-2, 0, -1}), RationalInterval(q(-1), q(1)));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness_point);
    CHECK(poly({-1, 0, -1}).eval(*r.witness_point) < 0);
    const QPoly g1({q(-1, 2), q(1)}), g2({q(1, 4), q(-1)});
    const auto r2 = eval_alternative(g1, g2, RationalInterval(q(0), q(1)));
    CHECK_FALSE(r2.holds);
    REQUIRE(r2.witness_point);
    CHECK(*r2.witness_point > q(1, 4));
    CHECK(*r2.witness_point < q(1, 2));
    CHECK(eval_alternative(poly({-1, 0, 1}), poly({1, 0, -1}), AllReals{}).holds);
    CHECK(find_negative_point(poly({1, 0, 1}), AllReals{}) == std::nullopt);
    const auto neg = find_negative_point(poly({1, 0, -3, 0, 1}), AllReals{});
    REQUIRE(neg);
    CHECK(poly({1, 0, -3, 0, 1}).eval(*neg) < 0);
}

TEST_CASE("sign case lookup") {
    CHECK(lookup_sign_case(Sign::Positive, Sign::Negative, Sign::Negative, Sign::Positive).number == 8);
    CHECK(lookup_sign_case(Sign::Negative, Sign::Negative, Sign::Negative, Sign::Negative).number == 16);
    CHECK(lookup_sign_case(Sign::Negative, Sign::Positive, Sign::Negative, Sign::Positive).outcome == SignCase::Outcome::Valid);
}
