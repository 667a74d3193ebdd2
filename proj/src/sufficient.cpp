#include "witnessgate/groebner.hpp"
#include "witnessgate/qudit_qubit.hpp"

#include <algorithm>
#include <numeric>

namespace witnessgate {

std::vector<std::string> LagrangeLayout::names() const {
    if (bloch) return {"x", "y", "z", "lambda", "k"};
    std::vector<std::string> out{"w1r"};
    for (int j = 2; j <= d; ++j) {
        out.push_back("w" + std::to_string(j) + "r");
        out.push_back("w" + std::to_string(j) + "i");
    }
    out.emplace_back("lambda");
    out.emplace_back("k");
    return out;
}

Contraction contraction_for(const BipartiteHermitian& X) {
    Contraction c;
    c.over_b = X.dB() <= X.dA();
    c.contracted_dim = c.over_b ? X.dB() : X.dA();
    c.order = c.over_b ? X.dA() : X.dB();
    c.layout = LagrangeLayout{c.contracted_dim, c.contracted_dim == 2};
    return c;
}

namespace {

struct CPoly {
    MultiPoly re;
    MultiPoly im;
};

CPoly cmul(const CPoly& a, const CPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Real and imaginary parts of w_j in the layout (w1 is real).
std::pair<MultiPoly, MultiPoly> coordinate(const LagrangeLayout& L, int j) {
    const int nv = L.nvars();
    if (j == 1) return {MultiPoly::variable(nv, 0), MultiPoly(nv)};
    return {MultiPoly::variable(nv, 2 * j - 3), MultiPoly::variable(nv, 2 * j - 2)};
}

// ww[j][j'] = conj(w_j) w_j' as polynomials in the layout's coordinates.
std::vector<std::vector<CPoly>> outer_product(const LagrangeLayout& L) {
    const int nv = L.nvars();
    const auto d = static_cast<std::size_t>(L.d);
    std::vector<std::vector<CPoly>> ww(d, std::vector<CPoly>(d));
    if (L.bloch) {
        const MultiPoly one = MultiPoly::constant(nv, Rational(1));
        const MultiPoly x = MultiPoly::variable(nv, 0), y = MultiPoly::variable(nv, 1), z = MultiPoly::variable(nv, 2);
        const Rational h = make_rational(1, 2);
        ww[0][0] = {h * (one + z), MultiPoly(nv)};
        ww[0][1] = {h * x, h * y};
        ww[1][0] = {h * x, -(h * y)};
        ww[1][1] = {h * (one - z), MultiPoly(nv)};
        return ww;
    }
    // conj(a + ib) (c + id) = (a c + b d) + i (a d - b c)
    for (int j = 1; j <= L.d; ++j)
        for (int jp = 1; jp <= L.d; ++jp) {
            const auto [a, b] = coordinate(L, j);
            const auto [c, dd] = coordinate(L, jp);
            ww[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(jp - 1)] = {a * c + b * dd, a * dd - b * c};
        }
    return ww;
}

// Symbolic X_w, contracting H_B of Y.
std::vector<std::vector<CPoly>> symbolic_projection(const BipartiteHermitian& Y, const LagrangeLayout& L) {
    const int nv = L.nvars();
    const int dA = Y.dA(), dB = Y.dB();
    const auto ww = outer_product(L);
    std::vector<std::vector<CPoly>> out(static_cast<std::size_t>(dA),
                                        std::vector<CPoly>(static_cast<std::size_t>(dA), CPoly{MultiPoly(nv), MultiPoly(nv)}));
    for (int i = 1; i <= dA; ++i)
        for (int ip = 1; ip <= dA; ++ip) {
            CPoly& e = out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(ip - 1)];
            for (int j = 1; j <= dB; ++j)
                for (int jp = 1; jp <= dB; ++jp) {
                    const GaussRational& x = Y.x(i, j, ip, jp);
                    if (x.is_zero()) continue;
                    const CPoly& p = ww[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(jp - 1)];
                    e.re += x.re * p.re - x.im * p.im;
                    e.im += x.re * p.im + x.im * p.re;
                }
        }
    return out;
}

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

MultiPoly minors_sum(const BipartiteHermitian& X, int n) { return minors_sum(X, n, contraction_for(X).layout); }

MultiPoly minors_sum(const BipartiteHermitian& X, int n, const LagrangeLayout& L) {
    const Contraction con = contraction_for(X);
    if (n < 1 || n > con.order) throw std::invalid_argument("minor order out of range");
    if (L.d != con.contracted_dim || (L.bloch && L.d != 2)) throw std::invalid_argument("layout does not fit the operator");
    const BipartiteHermitian Y = con.over_b ? X : X.swapped();
    if (L.nvars() > kMaxVars) throw std::invalid_argument("too many variables for the elimination");
    const auto P = symbolic_projection(Y, L);

    CPoly total{MultiPoly(L.nvars()), MultiPoly(L.nvars())};
    // Principal submatrices indexed by n-subsets of {0, .., order-1}.
    std::vector<int> subset(static_cast<std::size_t>(n));
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            CPoly term{MultiPoly::constant(L.nvars(), Rational(permutation_sign(perm))), MultiPoly(L.nvars())};
            for (int r = 0; r < n; ++r)
                term = cmul(term, P[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])]
                                   [static_cast<std::size_t>(subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])])]);
            total.re += term.re;
            total.im += term.im;
        } while (std::next_permutation(perm.begin(), perm.end()));
        int pos = n - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == con.order - n + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < n; ++q) subset[static_cast<std::size_t>(q)] = subset[static_cast<std::size_t>(q - 1)] + 1;
    }
    if (!total.im.is_zero()) throw std::logic_error("sum of principal minors is not real");
    return total.re;
}

MultiPoly sphere_constraint(const LagrangeLayout& L) {
    MultiPoly F = MultiPoly::constant(L.nvars(), Rational(-1));
    for (int v = 0; v < L.n_w(); ++v) {
        const MultiPoly x = MultiPoly::variable(L.nvars(), v);
        F += x * x;
    }
    return F;
}

namespace {

std::vector<MultiPoly> w_partials(const MultiPoly& M, const LagrangeLayout& L) {
    std::vector<MultiPoly> out;
    const MultiPoly lambda = MultiPoly::variable(L.nvars(), L.lambda());
    for (int v = 0; v < L.n_w(); ++v) {
        const MultiPoly x = MultiPoly::variable(L.nvars(), v);
        out.push_back(M.derivative(v) + Rational(2) * (lambda * x));
    }
    return out;
}

}  // namespace

std::vector<MultiPoly> lagrange_system(const MultiPoly& M, const LagrangeLayout& L) {
    std::vector<MultiPoly> out = w_partials(M, L);
    out.push_back(Rational(2) * MultiPoly::variable(L.nvars(), L.k()));
    out.push_back(sphere_constraint(L));
    return out;
}

std::vector<MultiPoly> elimination_system(const MultiPoly& M, const LagrangeLayout& L, int n) {
    std::vector<MultiPoly> out = w_partials(M, L);
    const MultiPoly k = MultiPoly::variable(L.nvars(), L.k());
    out.push_back(sphere_constraint(L));
    out.push_back(M + k * k);
    if (!L.bloch) out.push_back(MultiPoly::variable(L.nvars(), L.lambda()) - Rational(n) * (k * k));
    return out;
}

MinorCheck groebner_minor_check(const BipartiteHermitian& X, int n, const GroebnerLimits& limits, TermOrder order) {
    MinorCheck mc;
    mc.n = n;
    mc.method = "groebner";
    const LagrangeLayout L = contraction_for(X).layout;
    const MultiPoly M = minors_sum(X, n, L);
    if (M.is_zero()) {
        mc.outcome = "nonneg";
        return mc;
    }
    GroebnerBasis G;
    try {
        G = buchberger(elimination_system(M, L, n), limits, order);
    } catch (const GroebnerCapExceeded&) {
        mc.outcome = "cap";
        return mc;
    }
    if (G.generators.size() == 1 && G.generators.front().leading().m.is_one()) {
        mc.outcome = "nonneg";  // no critical points at all
        return mc;
    }
    std::optional<QPoly> g;
    if (order == TermOrder::Lex) {
        g = univariate_element(G, L.k());
    } else {
        // A positive-dimensional ideal may still meet Q[k].
        const auto dim = quotient_dimension(G);
        g = elimination_polynomial(G, L.k(), dim ? static_cast<int>(*dim) : limits.max_elimination_degree);
    }
    if (!g) {
        mc.outcome = "no-univariate";
        return mc;
    }
    mc.g_last = g;
    // Drop the trivial root k = 0, then count the remaining real roots.
    int m = 0;
    while (is_zero(g->coeff(m))) ++m;
    std::vector<Rational> cof(g->coeffs().begin() + m, g->coeffs().end());
    const QPoly cofactor(std::move(cof));
    const bool clean = cofactor.is_constant() || count_roots(cofactor, AllReals{}) == 0;
    mc.outcome = clean ? "nonneg" : "nonzero-root";
    return mc;
}

const char* to_string(SufficientResult::Outcome o) {
    return o == SufficientResult::Outcome::BlockPositive ? "BlockPositive" : "Inconclusive";
}

SufficientResult sufficient_block_positive(const BipartiteHermitian& X, const SufficientOptions& opts) {
    const Contraction con = contraction_for(X);
    const BipartiteHermitian Y = con.over_b ? X : X.swapped();
    SufficientResult res;
    for (int n = 1; n <= con.order; ++n) {
        MinorCheck mc;
        if (opts.combined && con.contracted_dim == 2 && n <= 2) {
            mc.n = n;
            if (n == 1) {
                mc.method = "trace";
                mc.outcome = trace_condition(trace_tau_xi(Y)) ? "nonneg" : "fails";
            } else {
                mc.method = "minors";
                mc.outcome = det_nonneg_all_w(summed_c_coefficients(Y)).holds ? "nonneg" : "fails";
            }
        } else {
            mc = groebner_minor_check(Y, n, opts.limits, opts.order);
        }
        res.checks.push_back(mc);
        if (mc.outcome != "nonneg") return res;
    }
    res.outcome = SufficientResult::Outcome::BlockPositive;
    return res;
}

}  // namespace witnessgate
