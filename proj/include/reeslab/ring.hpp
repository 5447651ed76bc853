#ifndef REESLAB_RING_HPP
#define REESLAB_RING_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "reeslab/errors.hpp"
#include "reeslab/field.hpp"

namespace reeslab {

// Variable blocks.  Y holds the base ring variables (bidegree (1,0)),
// T the Rees variables (bidegree (0,1)), Z generic coefficients
// (bidegree (0,0)), Aux internal helper variables for colon/intersection
// computations.
enum class Block : uint8_t { Y, T, Z, Aux };

inline const char* block_name(Block b) {
    switch (b) {
        case Block::Y: return "Y";
        case Block::T: return "T";
        case Block::Z: return "Z";
        default: return "Aux";
    }
}

struct Variable {
    std::string name;
    Block block = Block::Y;
};

enum class OrderTag : uint8_t { Grevlex, Lex, BigradedGrevlex, Elim };

struct MonomialOrder {
    OrderTag tag = OrderTag::BigradedGrevlex;
    Block elim_block = Block::Aux;  // only meaningful for Elim

    bool operator==(const MonomialOrder& o) const {
        return tag == o.tag && (tag != OrderTag::Elim || elim_block == o.elim_block);
    }
};

using Exp = std::vector<int32_t>;

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Polynomial ring over GF(p) with named, block-tagged variables and a fixed
// monomial order.  Immutable after construction; shared by all polynomials
// living in it.
//
// The significance sequence for order comparisons is T-block first, then Y,
// then Z, then Aux, each block in declaration order.  With grevlex this
// makes T_1 > T_2 > ... > Y_1 > Y_2 > ..., the convention under which the
// Rees-ideal bases below take their expected shape.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    PolyRing(FieldSpec field, std::vector<Variable> vars, MonomialOrder order)
        : field_(field), vars_(std::move(vars)), order_(order) {
        field_.validate();
        for (size_t i = 0; i < vars_.size(); ++i) {
            for (size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i].name == vars_[j].name)
                    throw precondition_error("duplicate variable name '" + vars_[i].name + "'");
        }
        for (Block b : {Block::T, Block::Y, Block::Z, Block::Aux})
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i].block == b) sig_.push_back(i);
    }

    static RingPtr make(FieldSpec field, std::vector<Variable> vars,
                        MonomialOrder order = MonomialOrder{}) {
        return std::make_shared<PolyRing>(field, std::move(vars), order);
    }

    const FieldSpec& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Variable>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    Block block_of(size_t i) const { return vars_[i].block; }
    const std::string& var_name(size_t i) const { return vars_[i].name; }

    std::vector<size_t> block_indices(Block b) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].block == b) out.push_back(i);
        return out;
    }

    long var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return static_cast<long>(i);
        return -1;
    }

    Exp one() const { return Exp(vars_.size(), 0); }

    int64_t total_degree(const Exp& e) const {
        return std::accumulate(e.begin(), e.end(), int64_t{0});
    }

    int64_t block_degree(const Exp& e, Block b) const {
        int64_t d = 0;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].block == b) d += e[i];
        return d;
    }

    // Comparison of monomials under the ring order: negative / zero /
    // positive for a < b, a == b, a > b.
    int cmp(const Exp& a, const Exp& b) const {
        switch (order_.tag) {
            case OrderTag::Grevlex:
                return grevlex_cmp(a, b, sig_);
            case OrderTag::Lex: {
                for (size_t i : sig_) {
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                }
                return 0;
            }
            case OrderTag::BigradedGrevlex: {
                int64_t ta = block_degree(a, Block::T), tb = block_degree(b, Block::T);
                if (ta != tb) return ta > tb ? 1 : -1;
                int64_t ya = block_degree(a, Block::Y), yb = block_degree(b, Block::Y);
                if (ya != yb) return ya > yb ? 1 : -1;
                return grevlex_cmp(a, b, sig_);
            }
            case OrderTag::Elim: {
                std::vector<size_t> in, out;
                for (size_t i : sig_)
                    (vars_[i].block == order_.elim_block ? in : out).push_back(i);
                int c = grevlex_cmp(a, b, in);
                if (c != 0) return c;
                return grevlex_cmp(a, b, out);
            }
        }
        return 0;
    }

    bool structurally_equal(const PolyRing& o) const {
        if (!(field_ == o.field_) || !(order_ == o.order_) || vars_.size() != o.vars_.size())
            return false;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name != o.vars_[i].name || vars_[i].block != o.vars_[i].block)
                return false;
        return true;
    }

    // Same variables, different order.
    RingPtr with_order(MonomialOrder order) const {
        return make(field_, vars_, order);
    }

    // Ring extended by one Aux variable (placed last; its name avoids
    // collisions with existing ones).
    RingPtr with_aux() const {
        std::vector<Variable> vs = vars_;
        std::string nm = "t@";
        while (var_index_in(vs, nm) >= 0) nm += "@";
        vs.push_back({nm, Block::Aux});
        return make(field_, std::move(vs), order_);
    }

    // Ring with one block of variables removed, keeping this ring's order tag
    // (Elim tags are replaced by the bigraded default).
    RingPtr without_block(Block b) const {
        std::vector<Variable> vs;
        for (const auto& v : vars_)
            if (v.block != b) vs.push_back(v);
        MonomialOrder ord = order_;
        if (ord.tag == OrderTag::Elim) ord = MonomialOrder{};
        return make(field_, std::move(vs), ord);
    }

private:
    static long var_index_in(const std::vector<Variable>& vs, const std::string& n) {
        for (size_t i = 0; i < vs.size(); ++i)
            if (vs[i].name == n) return static_cast<long>(i);
        return -1;
    }

    static int grevlex_cmp(const Exp& a, const Exp& b, const std::vector<size_t>& idxs) {
        int64_t da = 0, db = 0;
        for (size_t i : idxs) { da += a[i]; db += b[i]; }
        if (da != db) return da > db ? 1 : -1;
        for (auto it = idxs.rbegin(); it != idxs.rend(); ++it) {
            size_t i = *it;
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    FieldSpec field_;
    std::vector<Variable> vars_;
    MonomialOrder order_;
    std::vector<size_t> sig_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->structurally_equal(*b));
}

// ---- exponent-vector helpers -------------------------------------------

inline Exp mono_mul(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Exp& a, const Exp& b) {
    // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp mono_div(const Exp& a, const Exp& b) {
    // a / b, assuming b | a
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw internal_error("inexact monomial division");
    }
    return r;
}

inline Exp mono_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exp mono_gcd(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

} // namespace reeslab

#endif
