#ifndef REESLAB_IDEAL_HPP
#define REESLAB_IDEAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reeslab/groebner.hpp"

namespace reeslab {

// Ideal of a PolyRing: a generator list plus a lazily computed, write-once
// reduced Groebner basis.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Poly> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (auto& g : gens_)
            if (!same_ring(g.ring(), ring_))
                throw precondition_error("ideal generator from a different ring");
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    bool is_zero() const {
        for (const auto& g : gens_)
            if (!g.is_zero()) return false;
        return true;
    }

    const GroebnerBasis& gb() const {
        auto cached = std::atomic_load_explicit(&gb_, std::memory_order_acquire);
        if (!cached) {
            auto fresh = std::make_shared<GroebnerBasis>(groebner(gens_, ring_));
            std::atomic_compare_exchange_strong(&gb_, &cached, fresh);
            cached = std::atomic_load_explicit(&gb_, std::memory_order_acquire);
        }
        return *cached;
    }

    bool contains(const Poly& f) const { return normal_form(f, gb()).is_zero(); }

    bool is_unit() const {
        const auto& G = gb();
        return !G.empty() && G.elements.front().is_constant() &&
               !G.elements.front().is_zero();
    }

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;
};

inline Ideal make_ideal(const RingPtr& ring, std::vector<Poly> gens) {
    return Ideal(ring, std::move(gens));
}

inline Ideal zero_ideal(const RingPtr& ring) { return Ideal(ring); }

inline Ideal unit_ideal(const RingPtr& ring) {
    return Ideal(ring, {Poly::constant(ring, 1)});
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw precondition_error("ideal_sum: ring mismatch");
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_sum(const Ideal& a, const std::vector<Poly>& extra) {
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(a.ring(), std::move(gens));
}

// Reduced bases are canonical, so ideal equality is GB equality.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw precondition_error("ideal_equal: ring mismatch");
    const auto& ga = a.gb().elements;
    const auto& gc = b.gb().elements;
    if (ga.size() != gc.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gc[i]) return false;
    return true;
}

inline bool ideal_subset(const Ideal& a, const Ideal& b) {
    // a ⊆ b
    for (const auto& g : a.gens())
        if (!b.contains(g)) return false;
    return true;
}

// Exact division f / g; throws if g does not divide f.
inline Poly exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw precondition_error("exact_divide: division by zero");
    const RingPtr& ring = f.ring();
    const FieldSpec& F = ring->field();
    Poly rest = f;
    Poly quot = Poly::zero(ring);
    while (!rest.is_zero()) {
        if (!mono_divides(g.leading_monomial(), rest.leading_monomial()))
            throw internal_error("exact_divide: inexact division");
        Exp m = mono_div(rest.leading_monomial(), g.leading_monomial());
        int64_t c = F.div(rest.leading_coeff(), g.leading_coeff());
        quot = quot + Poly::monomial(ring, m, c);
        rest = rest - g.times_term(m, c);
    }
    return quot;
}

namespace idetail {

// Map an ideal into ring+aux, run the classical single-auxiliary-variable
// construction, return the aux-free part of the basis mapped back.
inline std::vector<Poly> aux_eliminate(const RingPtr& ring,
                                       const std::vector<Poly>& scaled_gens,
                                       const RingPtr& aux_ring) {
    GroebnerBasis G = groebner(scaled_gens, aux_ring);
    std::vector<Poly> out;
    for (const auto& g : G.elements)
        if (!g.uses_block(Block::Aux)) out.push_back(g.mapped_to(ring));
    return out;
}

inline RingPtr make_aux_ring(const RingPtr& ring) {
    return ring->with_aux()->with_order(MonomialOrder{OrderTag::Elim, Block::Aux});
}

} // namespace idetail

// I ∩ J via t·I + (1-t)·J and elimination of t.  The contract is the
// set-theoretic intersection; the auxiliary variable never escapes.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw precondition_error("intersect: ring mismatch");
    if (I.is_zero() || J.is_zero()) return zero_ideal(I.ring());
    RingPtr aux_ring = idetail::make_aux_ring(I.ring());
    size_t t_idx = aux_ring->nvars() - 1;
    Poly t = Poly::variable(aux_ring, t_idx);
    Poly one_minus_t = Poly::constant(aux_ring, 1) - t;
    std::vector<Poly> gens;
    for (const auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(t * g.mapped_to(aux_ring));
    for (const auto& g : J.gens())
        if (!g.is_zero()) gens.push_back(one_minus_t * g.mapped_to(aux_ring));
    return Ideal(I.ring(), idetail::aux_eliminate(I.ring(), gens, aux_ring));
}

// I : (f) for a single polynomial.
inline Ideal quotient_single(const Ideal& I, const Poly& f) {
    if (f.is_zero()) return unit_ideal(I.ring());
    if (f.is_constant()) return I;
    if (I.is_zero()) return zero_ideal(I.ring());
    Ideal inter = intersect(I, Ideal(I.ring(), {f}));
    std::vector<Poly> gens;
    for (const auto& w : inter.gens()) gens.push_back(exact_divide(w, f));
    return Ideal(I.ring(), std::move(gens));
}

// I : J = { f | f·J ⊆ I }.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw precondition_error("ideal_quotient: ring mismatch");
    bool any = false;
    Ideal acc;
    for (const auto& g : J.gens()) {
        if (g.is_zero()) continue;
        Ideal q = quotient_single(I, g);
        acc = any ? intersect(acc, q) : q;
        any = true;
    }
    if (!any) return unit_ideal(I.ring());  // I : (0) is the whole ring
    return acc;
}

// I : J^∞, by iterating the colon until it stabilizes.
inline Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    while (true) {
        Ideal next = ideal_quotient(cur, J);
        if (ideal_equal(next, cur)) return cur;
        cur = next;
    }
}

inline Ideal saturate(const Ideal& I, const Poly& f) {
    return saturate(I, Ideal(I.ring(), {f}));
}

// I ∩ k[vars outside `block`], presented in the subring without the block.
inline Ideal eliminate(const Ideal& I, Block block) {
    RingPtr sub = I.ring()->without_block(block);
    if (sub->nvars() == I.ring()->nvars()) {
        // nothing to eliminate; re-present in the (identical) subring
        std::vector<Poly> gens;
        for (const auto& g : I.gens()) gens.push_back(g.mapped_to(sub));
        return Ideal(sub, std::move(gens));
    }
    RingPtr elim_ring = I.ring()->with_order(MonomialOrder{OrderTag::Elim, block});
    std::vector<Poly> moved;
    for (const auto& g : I.gens())
        if (!g.is_zero()) moved.push_back(g.mapped_to(elim_ring));
    GroebnerBasis G = groebner(moved, elim_ring);
    std::vector<Poly> out;
    for (const auto& g : G.elements)
        if (!g.uses_block(block)) out.push_back(g.mapped_to(sub));
    return Ideal(sub, std::move(out));
}

// Image of I in the subring under (block variables) -> 0.  This is the
// extension of I along the quotient map, not the intersection.
inline Ideal block_image(const Ideal& I, Block block) {
    RingPtr sub = I.ring()->without_block(block);
    std::vector<Poly> out;
    for (const auto& g : I.gb().elements) {
        Poly h = g.block_killed(sub, block);
        if (!h.is_zero()) out.push_back(h);
    }
    return Ideal(sub, std::move(out));
}

// Krull dimension of ring/I via maximal independent variable sets against
// the leading-term ideal.  dim of the zero ideal is nvars; the unit ideal
// gets -1.
inline int64_t krull_dimension(const Ideal& I) {
    const auto& G = I.gb().elements;
    if (G.empty()) return static_cast<int64_t>(I.ring()->nvars());
    size_t n = I.ring()->nvars();
    if (n > 25) throw precondition_error("krull_dimension: too many variables");
    std::vector<uint32_t> supports;
    supports.reserve(G.size());
    for (const auto& g : G) {
        uint32_t m = 0;
        const Exp& lm = g.leading_monomial();
        for (size_t i = 0; i < n; ++i)
            if (lm[i] > 0) m |= (1u << i);
        supports.push_back(m);
    }
    int64_t best = -1;
    for (uint32_t S = 0; S < (1u << n); ++S) {
        bool independent = true;
        for (uint32_t m : supports) {
            if ((m & ~S) == 0) {  // support ⊆ S: leading term survives in k[S]
                independent = false;
                break;
            }
        }
        if (independent) {
            int64_t card = static_cast<int64_t>(__builtin_popcount(S));
            if (card > best) best = card;
        }
    }
    return best;
}

// Height of I in its polynomial ring (catenary domain):
// ht I = dim R - dim(R/I).  The unit ideal reports dim R + 1, a convenient
// stand-in for "infinite".
inline int64_t height(const Ideal& I) {
    return static_cast<int64_t>(I.ring()->nvars()) - krull_dimension(I);
}

namespace idetail {

inline void monomials_of_degree(size_t nvars, int64_t d, Exp& cur, size_t pos,
                                const std::function<void(const Exp&)>& fn) {
    if (pos + 1 == nvars) {
        cur[pos] = static_cast<int32_t>(d);
        fn(cur);
        cur[pos] = 0;
        return;
    }
    for (int64_t k = 0; k <= d; ++k) {
        cur[pos] = static_cast<int32_t>(k);
        monomials_of_degree(nvars, d - k, cur, pos + 1, fn);
    }
    cur[pos] = 0;
}

inline int64_t graded_piece_dim(const std::vector<Exp>& lts, const RingPtr& ring, int64_t d) {
    // dim_k of the degree-d piece of the monomial ideal generated by lts
    int64_t count = 0;
    Exp cur = ring->one();
    monomials_of_degree(ring->nvars(), d, cur, 0, [&](const Exp& m) {
        for (const auto& lt : lts) {
            if (mono_divides(lt, m)) {
                ++count;
                return;
            }
        }
    });
    return count;
}

} // namespace idetail

// Counts of a minimal homogeneous generating set of I per total degree,
// via graded Nakayama: mu_d = dim_k I_d - dim_k (m·I)_d.
inline std::map<int64_t, int64_t> minimal_generators_by_degree(const Ideal& I) {
    std::map<int64_t, int64_t> out;
    if (I.is_zero()) return out;
    for (const auto& g : I.gens())
        if (!g.is_homogeneous())
            throw precondition_error("minimal_generators_by_degree: non-homogeneous input");

    std::vector<Poly> mI;
    for (const auto& g : I.gens()) {
        if (g.is_zero()) continue;
        for (size_t i = 0; i < I.ring()->nvars(); ++i)
            mI.push_back(Poly::variable(I.ring(), i) * g);
    }
    Ideal MI(I.ring(), std::move(mI));

    std::vector<Exp> lts_I, lts_MI;
    for (const auto& g : I.gb().elements) lts_I.push_back(g.leading_monomial());
    for (const auto& g : MI.gb().elements) lts_MI.push_back(g.leading_monomial());

    std::set<int64_t> degrees;
    for (const auto& g : I.gens())
        if (!g.is_zero()) degrees.insert(g.total_degree());

    for (int64_t d : degrees) {
        int64_t mu = idetail::graded_piece_dim(lts_I, I.ring(), d) -
                     idetail::graded_piece_dim(lts_MI, I.ring(), d);
        if (mu > 0) out[d] = mu;
    }
    return out;
}

// FNV-1a over the canonical reduced basis; stable across runs, used to
// fingerprint ideals inside reports.
inline std::string ideal_fingerprint(const Ideal& I) {
    uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& g : I.gb().elements) {
        feed(g.str());
        feed(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace reeslab

#endif
