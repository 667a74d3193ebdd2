#include "helpers.hpp"
#include "witnessgate/families.hpp"
#include "witnessgate/groebner.hpp"

#include <doctest.h>

using namespace wg_test;

namespace {

MultiPoly var(int n, int i, TermOrder o = TermOrder::Lex) { return MultiPoly::variable(n, i, o); }
MultiPoly cst(int n, long c, TermOrder o = TermOrder::Lex) { return MultiPoly::constant(n, Rational(c), o); }

bool is_groebner(const GroebnerBasis& G) {
    for (std::size_t i = 0; i < G.generators.size(); ++i)
        for (std::size_t j = i + 1; j < G.generators.size(); ++j)
            if (!normal_form(s_polynomial(G.generators[i], G.generators[j]), G.generators).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("small bases") {
    const MultiPoly x = var(1, 0);
    const GroebnerBasis a = buchberger({x * x - cst(1, 1), x - cst(1, 1)});
    REQUIRE(a.generators.size() == 1);
    CHECK(a.generators[0] == x - cst(1, 1));

    const MultiPoly X = var(2, 0), Y = var(2, 1);
    const GroebnerBasis b = buchberger({X - Y, Y * Y - cst(2, 1)});
    REQUIRE(b.generators.size() == 2);
    CHECK(b.generators[0] == X - Y);
    CHECK(b.generators[1] == Y * Y - cst(2, 1));

    const GroebnerBasis k = buchberger({Rational(2) * x});
    REQUIRE(k.generators.size() == 1);
    CHECK(k.generators[0] == x);
}

TEST_CASE("term orders") {
    Monomial a = Monomial::var(0), b = Monomial::var(1, 2);
    CHECK(lex_compare(a, b) > 0);
    CHECK(grevlex_compare(a, b) < 0);
    const MultiPoly p = var(2, 0, TermOrder::GrevLex) + var(2, 1, TermOrder::GrevLex) * var(2, 1, TermOrder::GrevLex);
    CHECK(p.leading().m == b);
    CHECK(p.with_order(TermOrder::Lex).leading().m == a);
    CHECK_THROWS(var(2, 0) + var(2, 1, TermOrder::GrevLex));
}

TEST_CASE("elimination polynomial matches the lex univariate element") {
    const MultiPoly x = var(2, 0), y = var(2, 1);
    const std::vector<MultiPoly> gens{x * x + y * y - cst(2, 5), x * y - cst(2, 2)};
    const GroebnerBasis lex = buchberger(gens);
    std::vector<MultiPoly> gg;
    for (const auto& g : gens) gg.push_back(g.with_order(TermOrder::GrevLex));
    const GroebnerBasis grl = buchberger(gg, {}, TermOrder::GrevLex);
    CHECK(is_groebner(lex));
    CHECK(is_groebner(grl));
    const auto u = univariate_element(lex, 1);
    REQUIRE(u);
    CHECK(quotient_dimension(grl) == std::optional<long>(4));
    const auto e = elimination_polynomial(grl, 1, 8);
    REQUIRE(e);
    CHECK(*e == u->monic());
    CHECK(*e == poly({4, 0, -5, 0, 1}));
    CHECK(quotient_dimension(buchberger({x * y}, {}, TermOrder::GrevLex)) == std::nullopt);
}

TEST_CASE("caps") {
    const MultiPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    GroebnerLimits tiny;
    tiny.max_pairs = 1;
    CHECK_THROWS_AS(buchberger({x * x * y - z, x * y * y - cst(3, 1), z * z * x - y}, tiny), GroebnerCapExceeded);
}

TEST_CASE("lagrange system") {
    const LagrangeLayout L{2, false};
    const MultiPoly w1 = var(L.nvars(), 0), lambda = var(L.nvars(), L.lambda()), k = var(L.nvars(), L.k());
    const auto sys = lagrange_system(w1 * w1, L);
    REQUIRE(static_cast<int>(sys.size()) == L.n_w() + 2);
    CHECK(sys[0] == Rational(2) * w1 + Rational(2) * (lambda * w1));
    CHECK(sys[static_cast<std::size_t>(L.n_w())] == Rational(2) * k);
    CHECK(sys.back() == sphere_constraint(L));
}

TEST_CASE("minor sums") {
    // Contracting the qubit of a 3 x 2 operator: M_1 of the identity is 3 on the sphere.
    const auto I = BipartiteHermitian::identity(3, 2);
    const Contraction con = contraction_for(I);
    CHECK(con.over_b);
    CHECK(con.order == 3);
    CHECK(minors_sum(I, 1) == cst(con.layout.nvars(), 3));
    const LagrangeLayout W{2, false};
    const MultiPoly s = sphere_constraint(W) + cst(W.nvars(), 1);
    CHECK(minors_sum(I, 1, W) == Rational(3) * s);
    CHECK(minors_sum(I, 3, W) == s * s * s);

    std::mt19937_64 rng(81);
    std::uniform_int_distribution<long> n(-6, 6), d(1, 4);
    for (int m = 0; m < 10; ++m) {
        const auto X = random_hermitian(rng, 2, 2);
        const MultiPoly M1 = minors_sum(X, 1, W), M2 = minors_sum(X, 2, W);
        for (int p = 0; p < 10; ++p) {
            const Rational a = make_rational(n(rng), d(rng)), b = make_rational(n(rng), d(rng)), c = make_rational(n(rng), d(rng));
            const GaussMatrix Xw = contract_b(X, {GaussRational(a), GaussRational(b, c)});
            const GaussRational det = Xw[0][0] * Xw[1][1] - Xw[0][1] * Xw[1][0];
            CHECK(M1.eval({a, b, c, 0, 0}) == (Xw[0][0] + Xw[1][1]).re);
            CHECK(M2.eval({a, b, c, 0, 0}) == det.re);
        }
    }
}

TEST_CASE("sufficient criterion") {
    CHECK(sufficient_block_positive(BipartiteHermitian::identity(2, 2)).outcome == SufficientResult::Outcome::BlockPositive);
    CHECK(sufficient_block_positive(BipartiteHermitian::identity(3, 2)).outcome == SufficientResult::Outcome::BlockPositive);
    SufficientOptions only_elim;
    only_elim.combined = false;
    CHECK(sufficient_block_positive(BipartiteHermitian::identity(3, 2), only_elim).outcome ==
          SufficientResult::Outcome::BlockPositive);
    const SufficientResult d = sufficient_block_positive(diag(2, 2, {1, 1, 1, -1}), only_elim);
    CHECK(d.outcome == SufficientResult::Outcome::Inconclusive);
    REQUIRE(!d.checks.empty());
    CHECK(d.checks.back().outcome == "nonzero-root");
    // The lex basis gives the same g_-1 as the graded elimination.
    const auto X = family_f(q(1, 4));
    const MinorCheck a = groebner_minor_check(X, 2, {}, TermOrder::GrevLex);
    const MinorCheck b = groebner_minor_check(X, 2, {}, TermOrder::Lex);
    REQUIRE(a.g_last);
    REQUIRE(b.g_last);
    CHECK(*a.g_last == b.g_last->monic());
    const SufficientResult f = sufficient_block_positive(X);
    CHECK(f.outcome == SufficientResult::Outcome::BlockPositive);
    CHECK(f.checks.back().method == "groebner");
}
