#include "witnessgate/groebner.hpp"

#include <algorithm>
#include <list>

namespace witnessgate {

namespace {

// Index of a generator whose leading monomial divides m, or -1.
int find_reducer(const Monomial& m, const std::vector<const MultiPoly*>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        if (G[i]->leading().m.divides(m)) return static_cast<int>(i);
    return -1;
}

MultiPoly reduce_with(const MultiPoly& f, const std::vector<const MultiPoly*>& G, std::size_t max_terms) {
    MultiPoly p = f;
    std::vector<Term> rem;
    // Reduce the leading term of p until it is irreducible, then move it to
    // the remainder; p shrinks from the front.
    while (!p.is_zero()) {
        const Term lt = p.leading();
        const int r = find_reducer(lt.m, G);
        if (r >= 0) {
            const MultiPoly& g = *G[static_cast<std::size_t>(r)];
            p.sub_scaled(lt.c / g.leading().c, lt.m / g.leading().m, g);
            if (p.size() > max_terms) throw GroebnerCapExceeded("term count cap exceeded during reduction");
        } else {
            rem.push_back(lt);
            p -= MultiPoly::from_terms(f.nvars(), {lt}, f.order());
        }
    }
    return MultiPoly::from_terms(f.nvars(), std::move(rem), f.order());
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G) {
    std::vector<const MultiPoly*> ptrs;
    for (const auto& g : G)
        if (!g.is_zero()) ptrs.push_back(&g);
    return reduce_with(f, ptrs, static_cast<std::size_t>(-1));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const Monomial l = Monomial::lcm(f.leading().m, g.leading().m);
    MultiPoly s(std::max(f.nvars(), g.nvars()), f.order());
    s.sub_scaled(Rational(-1) / f.leading().c, l / f.leading().m, f);
    s.sub_scaled(Rational(1) / g.leading().c, l / g.leading().m, g);
    return s;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits, TermOrder order) {
    const auto max_terms = static_cast<std::size_t>(limits.max_terms);
    std::vector<MultiPoly> polys;  // every basis element ever added
    std::vector<bool> active;
    std::list<Pair> pairs;
    GroebnerStats stats;

    auto active_ptrs = [&] {
        std::vector<const MultiPoly*> out;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (active[i]) out.push_back(&polys[i]);
        return out;
    };

    // Gebauer-Moeller update with the new element h = polys.back().
    auto update = [&] {
        const std::size_t h = polys.size() - 1;
        const Monomial& lh = polys[h].leading().m;
        std::vector<Pair> C;
        for (std::size_t g = 0; g < h; ++g)
            if (active[g]) C.push_back({g, h, Monomial::lcm(polys[g].leading().m, lh)});
        std::vector<Pair> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            const bool coprime = polys[C[a].i].leading().m.coprime(lh);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t b = a + 1; b < C.size() && !dominated; ++b)
                    if (C[b].lcm.divides(C[a].lcm)) dominated = true;
                for (std::size_t b = 0; b < D.size() && !dominated; ++b)
                    if (D[b].lcm.divides(C[a].lcm)) dominated = true;
            }
            if (!dominated) D.push_back(C[a]);
        }
        for (auto it = pairs.begin(); it != pairs.end();) {
            const bool drop = lh.divides(it->lcm) &&
                              !(Monomial::lcm(polys[it->i].leading().m, lh) == it->lcm) &&
                              !(Monomial::lcm(polys[it->j].leading().m, lh) == it->lcm);
            it = drop ? pairs.erase(it) : std::next(it);
        }
        for (const auto& p : D)
            if (!polys[p.i].leading().m.coprime(lh)) pairs.push_back(p);
        for (std::size_t g = 0; g < h; ++g)
            if (active[g] && lh.divides(polys[g].leading().m)) active[g] = false;
        active[h] = true;
    };

    auto add = [&](MultiPoly h) {
        stats.max_terms_seen = std::max(stats.max_terms_seen, h.size());
        polys.push_back(h.monic());
        active.push_back(false);
        update();
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() > kMaxVars) throw std::invalid_argument("too many variables");
        MultiPoly h = reduce_with(g.with_order(order), active_ptrs(), max_terms);
        if (!h.is_zero()) add(std::move(h));
    }

    while (!pairs.empty()) {
        if (++stats.pairs_processed > limits.max_pairs) throw GroebnerCapExceeded("S-pair cap exceeded");
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
            if (order_compare(order, it->lcm, best->lcm) < 0) best = it;
        const Pair p = *best;
        pairs.erase(best);
        MultiPoly h = reduce_with(s_polynomial(polys[p.i], polys[p.j]), active_ptrs(), max_terms);
        if (h.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }
        if (h.leading().m.is_one()) {  // the unit ideal
            polys.assign(1, MultiPoly::constant(h.nvars(), Rational(1), order));
            active.assign(1, true);
            pairs.clear();
            break;
        }
        add(std::move(h));
    }

    // Minimal basis, then interreduce.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (active[i]) minimal.push_back(polys[i]);
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const MultiPoly*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(&minimal[j]);
        // Leading term is irreducible by the others; only the tail changes.
        MultiPoly tail = minimal[i];
        const Term lt = tail.leading();
        tail -= MultiPoly::from_terms(tail.nvars(), {lt}, order);
        MultiPoly r = reduce_with(tail, others, max_terms);
        r += MultiPoly::from_terms(tail.nvars(), {lt}, order);
        reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [order](const MultiPoly& a, const MultiPoly& b) {
        return order_compare(order, a.leading().m, b.leading().m) > 0;
    });
    return {std::move(reduced), order, stats};
}

std::optional<QPoly> univariate_element(const GroebnerBasis& G, int var) {
    for (const auto& g : G.generators)
        if (g.is_univariate_in(var) && !g.leading().m.is_one()) return g.to_univariate(var);
    return std::nullopt;
}

std::optional<QPoly> elimination_polynomial(const GroebnerBasis& G, int var, int max_degree) {
    if (G.generators.empty()) return std::nullopt;
    const int nv = G.generators.front().nvars();
    const TermOrder order = G.order;
    if (G.generators.size() == 1 && G.generators.front().leading().m.is_one())
        return QPoly::constant(Rational(1));
    std::vector<const MultiPoly*> ptrs;
    for (const auto& g : G.generators) ptrs.push_back(&g);

    // Echelon rows over the standard monomials; each row remembers which
    // combination of powers of var it came from.
    struct Row {
        MultiPoly vec;
        std::vector<Rational> comb;
    };
    std::vector<Row> rows;
    const MultiPoly x = MultiPoly::variable(nv, var, order);
    MultiPoly power = reduce_with(MultiPoly::constant(nv, Rational(1), order), ptrs, static_cast<std::size_t>(-1));
    for (int i = 0; i <= max_degree; ++i) {
        if (i > 0) power = reduce_with(x * power, ptrs, static_cast<std::size_t>(-1));
        Row r{power, std::vector<Rational>(static_cast<std::size_t>(i) + 1, Rational(0))};
        r.comb.back() = 1;
        for (std::size_t t = 0; t < r.vec.size();) {
            const Monomial m = r.vec.terms()[t].m;
            auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& q) { return q.vec.leading().m == m; });
            if (it == rows.end()) {
                ++t;
                continue;
            }
            const Rational c = r.vec.terms()[t].c / it->vec.leading().c;
            r.vec.sub_scaled(c, Monomial{}, it->vec);
            for (std::size_t j = 0; j < it->comb.size(); ++j) r.comb[j] -= c * it->comb[j];
        }
        if (r.vec.is_zero()) {
            QPoly g(std::move(r.comb));
            return g.monic();
        }
        rows.push_back(std::move(r));
    }
    return std::nullopt;
}

std::optional<long> quotient_dimension(const GroebnerBasis& G, long cap) {
    if (G.generators.empty()) return std::nullopt;
    const int nv = G.generators.front().nvars();
    std::vector<int> bound(static_cast<std::size_t>(nv), -1);
    for (const auto& g : G.generators) {
        const Monomial& m = g.leading().m;
        if (m.is_one()) return 0;
        int only = -1, count = 0;
        for (int i = 0; i < nv; ++i)
            if (m.e[static_cast<std::size_t>(i)] != 0) {
                only = i;
                ++count;
            }
        if (count == 1) {
            auto& b = bound[static_cast<std::size_t>(only)];
            const int e = m.e[static_cast<std::size_t>(only)];
            b = b < 0 ? e : std::min(b, e);
        }
    }
    for (int b : bound)
        if (b < 0) return std::nullopt;
    long total = 0;
    Monomial m;
    for (;;) {
        const bool standard = std::none_of(G.generators.begin(), G.generators.end(),
                                           [&](const MultiPoly& g) { return g.leading().m.divides(m); });
        if (standard && ++total > cap) return std::nullopt;
        int i = 0;
        while (i < nv && m.e[static_cast<std::size_t>(i)] + 1 >= bound[static_cast<std::size_t>(i)]) {
            m.e[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == nv) break;
        ++m.e[static_cast<std::size_t>(i)];
    }
    return total;
}

}  // namespace witnessgate
