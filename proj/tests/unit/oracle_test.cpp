#include "helpers.hpp"
#include "witnessgate/families.hpp"
#include "witnessgate/oracle.hpp"
#include "witnessgate/sweep.hpp"
#include "witnessgate/witness2x2.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace wg_test;

TEST_CASE("oracle on standard operators") {
    CHECK(std::abs(estimate_mu(BipartiteHermitian::identity(2, 2)).mu_hat - 1) < 1e-9);
    CHECK(std::abs(estimate_mu(diag(2, 2, {1, 1, 1, -1})).mu_hat + 1) < 1e-9);
    CHECK(std::abs(estimate_mu(swap22()).mu_hat) < 1e-6);
    CHECK(std::abs(lambda_min(swap22()) + 1) < 1e-12);
}

TEST_CASE("oracle estimate is an achieved value") {
    std::mt19937_64 rng(91);
    for (int m = 0; m < 20; ++m) {
        const auto X = random_hermitian(rng, 3, 2);
        const OracleEstimate e = estimate_mu(X);
        CHECK(std::abs(to_double(exact_objective(X, e.argmin_v, e.argmin_w)) - e.mu_hat) < 1e-9);
        CHECK(e.mu_hat >= lambda_min(X) - 1e-12);
    }
}

TEST_CASE("oracle is deterministic under a seed") {
    OracleOptions o;
    o.seed = 17;
    const auto X = family_f(q(1, 2));
    const OracleEstimate a = estimate_mu(X, o), b = estimate_mu(X, o);
    CHECK(a.mu_hat == b.mu_hat);
    CHECK(a.argmin_v == b.argmin_v);
}

TEST_CASE("oracle never contradicts an exact witness verdict") {
    std::mt19937_64 rng(101);
    for (int m = 0; m < 60; ++m) {
        const auto X = random_hermitian(rng, 2, 2);
        const Verdict v = classify(X);
        const double mu = estimate_mu(X).mu_hat;
        if (mu < -1e-6) CHECK_FALSE((std::holds_alternative<EntanglementWitness>(v) || std::holds_alternative<PositiveSemidefinite>(v)));
    }
}

TEST_CASE("sweep rows and csv") {
    CHECK(sweep_grid(q(-1), q(1), q(1, 2)).size() == 5);
    SweepOptions s;
    s.family = Family::E;
    s.from = q(0);
    s.to = q(1, 2);
    s.step = q(1, 10);
    s.threads = 2;
    const auto rows = run_sweep(s);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i].a < rows[i + 1].a);
    for (const auto& r : rows)
        if (r.verdict_exact == "EntanglementWitness") {
            CHECK(r.mu_hat >= -1e-6);
            CHECK(r.lambda_min < 0);
        }
    std::ostringstream a, b;
    write_csv(a, Family::E, rows);
    write_csv(b, Family::E, run_sweep(s));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("a,lambda_min,mu_hat", 0) == 0);
}
