#include "witnessgate/sweep.hpp"

#include "witnessgate/qudit_qubit.hpp"
#include "witnessgate/witness2x2.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <thread>

namespace witnessgate {

std::vector<Rational> sweep_grid(const Rational& from, const Rational& to, const Rational& step) {
    if (sgn(step) <= 0) throw std::invalid_argument("step must be positive");
    std::vector<Rational> out;
    for (Rational a = from; a <= to; a += step) out.push_back(a);
    return out;
}

SweepRow sweep_point(Family family, const Rational& a, const OracleOptions& oracle, const GroebnerLimits& limits) {
    const BipartiteHermitian X = family_member(family, a);
    SweepRow row;
    row.a = a;
    row.lambda_min = lambda_min(X);
    row.mu_hat = estimate_mu(X, oracle).mu_hat;
    if (X.dA() == 2 && X.dB() == 2) row.verdict_exact = verdict_name(classify(X));
    row.necessary_verdict = to_string(necessary_block_positive(X).outcome);
    SufficientOptions so;
    so.limits = limits;
    so.combined = false;
    row.sufficient_verdict = to_string(sufficient_block_positive(X, so).outcome);
    so.combined = true;
    row.combined_verdict = to_string(sufficient_block_positive(X, so).outcome);
    return row;
}

std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
    const std::vector<Rational> grid = sweep_grid(opts.from, opts.to, opts.step);
    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++)
            rows[i] = sweep_point(opts.family, grid[i], opts.oracle, opts.limits);
    };
    const unsigned n = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(grid.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

void write_csv(std::ostream& out, Family family, const std::vector<SweepRow>& rows) {
    const bool qutrit = family == Family::F;
    out << "a,lambda_min,mu_hat,verdict_exact,necessary_verdict,sufficient_verdict";
    if (qutrit) out << ",combined_verdict";
    out << '\n';
    const auto old = out.precision(17);
    for (const auto& r : rows) {
        out << format_rational(r.a) << ',' << r.lambda_min << ',' << r.mu_hat << ',' << r.verdict_exact << ','
            << r.necessary_verdict << ',' << r.sufficient_verdict;
        if (qutrit) out << ',' << r.combined_verdict;
        out << '\n';
    }
    out.precision(old);
}

}  // namespace witnessgate
