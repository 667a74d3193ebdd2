// witnessgate: classify Hermitian matrices, sweep the test families and
// expose the univariate polynomial tests.

#include "witnessgate/groebner.hpp"
#include "witnessgate/qudit_qubit.hpp"
#include "witnessgate/sweep.hpp"
#include "witnessgate/witness2x2.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace witnessgate;
using nlohmann::json;

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitNotHermitian = 3;

json vector_json(const GaussVector& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(format_gauss(z));
    return out;
}

json certificate_json(const ProductCertificate& c) {
    return {{"v", vector_json(c.v)}, {"w", vector_json(c.w)}, {"value", format_rational(c.value)}};
}

ProductCertificate swap_certificate(ProductCertificate c) {
    std::swap(c.v, c.w);
    return c;
}

json check_2x2(const BipartiteHermitian& X) {
    const Verdict v = classify(X);
    json out{{"shape", {2, 2}}, {"verdict", verdict_name(v)}};
    if (const auto* w = std::get_if<EntanglementWitness>(&v)) out["weakly_optimal_possible"] = w->weakly_optimal_possible;
    if (const auto* n = std::get_if<NotBlockPositive>(&v)) {
        out["certificate"] = certificate_json(n->certificate);
        out["failure_site"] = n->failure_site;
    }
    if (const auto* m = std::get_if<NotWitnessMultiNegative>(&v)) out["negative_eigenvalues"] = m->n_neg;
    return out;
}

json check_general(const BipartiteHermitian& X, const GroebnerLimits& limits) {
    json out{{"shape", {X.dA(), X.dB()}}};
    const EigenSignature sig = eigen_signature(X);
    out["negative_eigenvalues"] = sig.n_neg;
    if (sig.n_neg == 0) {
        out["verdict"] = "PositiveSemidefinite";
        return out;
    }
    // The qubit factor goes second for the minor-based tests.
    const bool qubit_b = X.dB() == 2;
    const bool qubit_a = !qubit_b && X.dA() == 2;
    if (qubit_a || qubit_b) {
        const BipartiteHermitian Y = qubit_b ? X : X.swapped();
        const NecessaryResult nec = necessary_block_positive(Y);
        json n{{"outcome", to_string(nec.outcome)}};
        if (nec.outcome == NecessaryResult::Outcome::Fails) {
            n["violated"] = nec.violated;
            if (nec.pair) n["pair"] = {nec.pair->l, nec.pair->k};
            if (nec.certificate) {
                const ProductCertificate c = qubit_b ? *nec.certificate : swap_certificate(*nec.certificate);
                out["certificate"] = certificate_json(c);
            }
            out["necessary"] = n;
            out["verdict"] = "NotBlockPositive";
            return out;
        }
        out["necessary"] = n;
    }
    SufficientOptions so;
    so.limits = limits;
    const SufficientResult suf = sufficient_block_positive(X, so);
    json checks = json::array();
    for (const auto& c : suf.checks) {
        json e{{"n", c.n}, {"method", c.method}, {"outcome", c.outcome}};
        if (c.g_last) e["g_degree"] = c.g_last->degree();
        checks.push_back(e);
    }
    out["sufficient"] = {{"outcome", to_string(suf.outcome)}, {"checks", checks}};
    out["verdict"] = suf.outcome == SufficientResult::Outcome::BlockPositive ? "EntanglementWitness" : "Inconclusive";
    return out;
}

std::vector<Rational> parse_coefficients(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty coefficient list");
    return out;
}

Domain parse_domain(const std::string& lo, const std::string& hi) {
    if (lo.empty() && hi.empty()) return AllReals{};
    if (lo.empty() || hi.empty()) throw std::invalid_argument("give both --lo and --hi, or neither");
    return RationalInterval(parse_rational(lo), parse_rational(hi));
}

void load_config(const std::string& path, GroebnerLimits& limits) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config " + path);
    const json cfg = json::parse(in);
    auto read = [&](const char* key, long& target) {
        if (cfg.contains("groebner") && cfg["groebner"].contains(key)) target = cfg["groebner"][key].get<long>();
        const std::string flat = std::string("groebner.") + key;
        if (cfg.contains(flat)) target = cfg[flat].get<long>();
    };
    read("max_pairs", limits.max_pairs);
    read("max_terms", limits.max_terms);
}

unsigned thread_count() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WITNESSGATE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact block-positivity tests for Hermitian matrices over Q(i)"};
    app.require_subcommand(1);

    std::string config_path;
    GroebnerLimits limits;
    app.add_option("--config", config_path, "JSON file with groebner.max_pairs / groebner.max_terms");

    auto* check = app.add_subcommand("check", "Classify the matrix in a JSON file");
    std::string matrix_path;
    check->add_option("path", matrix_path, "matrix file")->required();
    check->add_option("--groebner.max-pairs", limits.max_pairs, "S-pair cap");
    check->add_option("--groebner.max-terms", limits.max_terms, "term cap");

    auto* sweep = app.add_subcommand("sweep", "Sweep a test family and print CSV");
    std::string family = "E", from = "-1", to = "1", step = "1/50";
    OracleOptions oracle;
    sweep->add_option("--family", family, "E or F");
    sweep->add_option("--from", from, "first a (exact)");
    sweep->add_option("--to", to, "last a (exact)");
    sweep->add_option("--step", step, "grid step (exact, > 0)");
    sweep->add_option("--restarts", oracle.restarts, "random see-saw starts (0: 8 dA dB)");
    sweep->add_option("--tol", oracle.tol, "see-saw tolerance");
    sweep->add_option("--seed", oracle.seed, "oracle seed");
    sweep->add_option("--groebner.max-pairs", limits.max_pairs, "S-pair cap");
    sweep->add_option("--groebner.max-terms", limits.max_terms, "term cap");

    auto* poly = app.add_subcommand("poly", "Univariate polynomial tests (coefficients lowest degree first)");
    poly->require_subcommand(1);
    std::string coeffs, g1s, g2s, lo, hi;
    auto* count = poly->add_subcommand("count-roots", "Distinct real roots in the open interval or on R");
    count->add_option("--coeffs", coeffs, "comma-separated coefficients")->required();
    auto* nonneg_cmd = poly->add_subcommand("nonneg", "Is f >= 0 on the domain");
    nonneg_cmd->add_option("--coeffs", coeffs, "comma-separated coefficients")->required();
    auto* alt = poly->add_subcommand("alternative", "Is g1 >= 0 or g2 >= 0 at every point");
    alt->add_option("--g1", g1s, "comma-separated coefficients")->required();
    alt->add_option("--g2", g2s, "comma-separated coefficients")->required();
    for (auto* sub : {count, nonneg_cmd, alt}) {
        sub->add_option("--lo", lo, "interval start (open)");
        sub->add_option("--hi", hi, "interval end (open)");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config(config_path, limits);

        if (check->parsed()) {
            BipartiteHermitian X = load_matrix_file(matrix_path);
            const json report = X.dA() == 2 && X.dB() == 2 ? check_2x2(X) : check_general(X, limits);
            std::cout << report.dump(2) << '\n';
            return 0;
        }
        if (sweep->parsed()) {
            SweepOptions so;
            so.family = parse_family(family);
            so.from = parse_rational(from);
            so.to = parse_rational(to);
            so.step = parse_rational(step);
            so.oracle = oracle;
            so.limits = limits;
            so.threads = thread_count();
            write_csv(std::cout, so.family, run_sweep(so));
            return 0;
        }
        const Domain domain = parse_domain(lo, hi);
        json out;
        if (count->parsed()) {
            out["roots"] = count_roots(QPoly(parse_coefficients(coeffs)), domain);
        } else if (nonneg_cmd->parsed()) {
            const QPoly f(parse_coefficients(coeffs));
            out["nonneg"] = nonneg(f, domain);
            if (const auto p = find_negative_point(f, domain)) out["negative_at"] = format_rational(*p);
        } else {
            const AlternativeResult r =
                eval_alternative(QPoly(parse_coefficients(g1s)), QPoly(parse_coefficients(g2s)), domain);
            out["holds"] = r.holds;
            if (r.witness_point) out["witness_point"] = format_rational(*r.witness_point);
        }
        std::cout << out.dump() << '\n';
        return 0;
    } catch (const NotHermitian& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotHermitian;
    } catch (const MalformedMatrix& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
}
