#pragma once

// Parameter sweeps over the test families with exact verdicts and oracle
// estimates side by side.

#include "witnessgate/families.hpp"
#include "witnessgate/groebner.hpp"
#include "witnessgate/oracle.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace witnessgate {

struct SweepOptions {
    Family family = Family::E;
    Rational from{-1};
    Rational to{1};
    Rational step{make_rational(1, 50)};
    OracleOptions oracle;
    GroebnerLimits limits;
    unsigned threads = 1;
};

struct SweepRow {
    Rational a;
    double lambda_min = 0;
    double mu_hat = 0;
    std::string verdict_exact;       // 2 (x) 2 only
    std::string necessary_verdict;   // Fails / Inconclusive
    std::string sufficient_verdict;  // elimination for every minor order
    std::string combined_verdict;    // exact tests for orders 1 and 2, elimination above
};

std::vector<Rational> sweep_grid(const Rational& from, const Rational& to, const Rational& step);

SweepRow sweep_point(Family family, const Rational& a, const OracleOptions& oracle, const GroebnerLimits& limits);

/// Rows in increasing a, whatever order the workers finish in.
std::vector<SweepRow> run_sweep(const SweepOptions& opts);

void write_csv(std::ostream& out, Family family, const std::vector<SweepRow>& rows);

}  // namespace witnessgate
