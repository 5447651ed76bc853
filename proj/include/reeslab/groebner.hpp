#ifndef REESLAB_GROEBNER_HPP
#define REESLAB_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "reeslab/poly.hpp"

namespace reeslab {

// Reduced Groebner basis: monic, auto-reduced, sorted descending by leading
// monomial.  Canonical for a fixed ideal and monomial order.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly> elements;

    bool empty() const { return elements.empty(); }
    size_t size() const { return elements.size(); }
};

namespace gbdetail {

// One full division step chain: remainder of f on ordered reducers.
inline Poly reduce_full(const Poly& f, const std::vector<Poly>& G) {
    if (f.is_zero() || G.empty()) return f;
    const RingPtr& ring = f.ring();
    const FieldSpec& F = ring->field();
    Poly h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Exp& lm = h.leading_monomial();
        bool divided = false;
        for (const Poly& g : G) {
            if (g.is_zero()) continue;
            if (!mono_divides(g.leading_monomial(), lm)) continue;
            Exp q = mono_div(lm, g.leading_monomial());
            int64_t c = F.div(h.leading_coeff(), g.leading_coeff());
            h = h - g.times_term(q, c);
            divided = true;
            break;
        }
        if (!divided) {
            remainder.push_back(h.terms().front());
            h = h - Poly::monomial(ring, h.terms().front().mono, h.terms().front().coeff);
        }
    }
    return Poly::from_terms(ring, std::move(remainder));
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
    const FieldSpec& F = f.ring()->field();
    Exp L = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Exp mf = mono_div(L, f.leading_monomial());
    Exp mg = mono_div(L, g.leading_monomial());
    return f.times_term(mf, F.inv(f.leading_coeff())) -
           g.times_term(mg, F.inv(g.leading_coeff()));
}

struct Pair {
    size_t i, j;
    Exp lcm;
    int64_t deg;
};

// Gebauer-Moeller pair update: add h as index `new_idx`, pruning pairs by
// the chain and product criteria.
inline void update_pairs(const RingPtr& ring, const std::vector<Poly>& G,
                         std::vector<Pair>& pairs, const Poly& h, size_t new_idx) {
    const Exp& lmh = h.leading_monomial();

    std::vector<Pair> fresh;
    fresh.reserve(G.size());
    for (size_t k = 0; k < new_idx; ++k) {
        Exp L = mono_lcm(G[k].leading_monomial(), lmh);
        fresh.push_back({k, new_idx, std::move(L), 0});
    }
    for (auto& p : fresh) p.deg = ring->total_degree(p.lcm);

    // old pairs whose lcm is a proper multiple of lm(h) are redundant
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
        if (mono_divides(lmh, p.lcm) &&
            mono_lcm(G[p.i].leading_monomial(), lmh) != p.lcm &&
            mono_lcm(G[p.j].leading_monomial(), lmh) != p.lcm)
            continue;
        kept.push_back(std::move(p));
    }
    pairs = std::move(kept);

    // among the fresh pairs keep a minimal set of lcms
    std::sort(fresh.begin(), fresh.end(), [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ring->cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.i < b.i;
    });
    std::vector<Pair> minimal;
    for (auto& p : fresh) {
        bool dominated = false;
        for (const auto& q : minimal) {
            if (q.lcm == p.lcm || mono_divides(q.lcm, p.lcm)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(std::move(p));
    }

    // product criterion
    for (auto& p : minimal)
        if (!mono_coprime(G[p.i].leading_monomial(), lmh))
            pairs.push_back(std::move(p));
}

inline void interreduce(const RingPtr& ring, std::vector<Poly>& G) {
    // drop elements whose leading term is divisible by another's
    std::vector<Poly> kept;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            if (!mono_divides(G[j].leading_monomial(), G[i].leading_monomial())) continue;
            if (G[j].leading_monomial() == G[i].leading_monomial() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) kept.push_back(G[i]);
    }
    G = std::move(kept);

    // fully reduce each element against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < G.size(); ++i) {
            std::vector<Poly> others;
            others.reserve(G.size() - 1);
            for (size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            Poly r = reduce_full(G[i], others).monic();
            if (r != G[i]) {
                changed = true;
                if (r.is_zero()) {
                    G.erase(G.begin() + static_cast<long>(i));
                    --i;
                } else {
                    G[i] = r;
                }
            }
        }
    }
    std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
        return ring->cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
}

} // namespace gbdetail

// Buchberger with Gebauer-Moeller pair elimination and normal selection
// strategy.  Returns the reduced basis; deterministic for a fixed generator
// sequence, and canonical (reduced bases are unique per ideal and order).
inline GroebnerBasis groebner(const std::vector<Poly>& gens, const RingPtr& ring) {
    using namespace gbdetail;
    for (const auto& g : gens)
        if (!same_ring(g.ring(), ring))
            throw precondition_error("groebner: generator from a different ring");

    std::vector<Poly> G;
    std::vector<Pair> pairs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Poly h = g.monic();
        update_pairs(ring, G, pairs, h, G.size());
        G.push_back(std::move(h));
    }

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree, ties by order then index
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            bool smaller;
            if (a.deg != b.deg)
                smaller = a.deg < b.deg;
            else {
                int c = ring->cmp(a.lcm, b.lcm);
                smaller = c != 0 ? c < 0 : (a.i != b.i ? a.i < b.i : a.j < b.j);
            }
            if (smaller) best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        Poly s = s_polynomial(G[p.i], G[p.j]);
        Poly h = reduce_full(s, G);
        if (h.is_zero()) continue;
        h = h.monic();
        update_pairs(ring, G, pairs, h, G.size());
        G.push_back(std::move(h));
    }

    interreduce(ring, G);
    return GroebnerBasis{ring, std::move(G)};
}

// Unique remainder of f modulo G (G a Groebner basis).  Zero iff f lies in
// the ideal generated by G.
inline Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    if (!same_ring(f.ring(), G.ring))
        throw precondition_error("normal_form: ring mismatch");
    return gbdetail::reduce_full(f, G.elements);
}

} // namespace reeslab

#endif
