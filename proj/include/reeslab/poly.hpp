#ifndef REESLAB_POLY_HPP
#define REESLAB_POLY_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reeslab/ring.hpp"

namespace reeslab {

struct Term {
    Exp mono;
    int64_t coeff;  // canonical representative in [0, p)
};

// Sparse multivariate polynomial: terms sorted strictly descending in the
// ring order, no zero coefficients, no duplicate monomials.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, int64_t c) {
        Poly p(ring);
        c = ring->field().reduce(c);
        if (c != 0) p.terms_.push_back({ring->one(), c});
        return p;
    }

    static Poly variable(RingPtr ring, size_t idx, int64_t c = 1) {
        Poly p(ring);
        c = ring->field().reduce(c);
        if (c != 0) {
            Exp e = ring->one();
            e[idx] = 1;
            p.terms_.push_back({std::move(e), c});
        }
        return p;
    }

    static Poly monomial(RingPtr ring, Exp e, int64_t c) {
        Poly p(ring);
        c = ring->field().reduce(c);
        if (c != 0) p.terms_.push_back({std::move(e), c});
        return p;
    }

    // Normalizing constructor: sorts, merges duplicates, drops zeros.
    static Poly from_terms(RingPtr ring, std::vector<Term> ts) {
        const PolyRing& R = *ring;
        std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
            return R.cmp(a.mono, b.mono) > 0;
        });
        Poly p(ring);
        for (auto& t : ts) {
            int64_t c = R.field().reduce(t.coeff);
            if (c == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                int64_t s = R.field().add(p.terms_.back().coeff, c);
                if (s == 0)
                    p.terms_.pop_back();
                else
                    p.terms_.back().coeff = s;
            } else {
                p.terms_.push_back({std::move(t.mono), c});
            }
        }
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Exp& leading_monomial() const {
        require_nonzero();
        return terms_.front().mono;
    }
    int64_t leading_coeff() const {
        require_nonzero();
        return terms_.front().coeff;
    }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && ring_->total_degree(terms_[0].mono) == 0);
    }

    int64_t total_degree() const {
        int64_t d = -1;
        for (const auto& t : terms_) d = std::max(d, ring_->total_degree(t.mono));
        return d;
    }

    int64_t block_degree(Block b) const {
        int64_t d = -1;
        for (const auto& t : terms_) d = std::max(d, ring_->block_degree(t.mono, b));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int64_t d = ring_->total_degree(terms_[0].mono);
        for (const auto& t : terms_)
            if (ring_->total_degree(t.mono) != d) return false;
        return true;
    }

    bool uses_block(Block b) const {
        for (const auto& t : terms_)
            if (ring_->block_degree(t.mono, b) > 0) return true;
        return false;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_rings(a, b);
        const PolyRing& R = *a.ring_;
        auto cmp = [&R](const Exp& x, const Exp& y) { return R.cmp(x, y) > 0; };
        std::map<Exp, int64_t, decltype(cmp)> acc(cmp);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Exp m = mono_mul(ta.mono, tb.mono);
                int64_t& slot = acc[std::move(m)];
                slot = R.field().add(slot, R.field().mul(ta.coeff, tb.coeff));
            }
        Poly r(a.ring_);
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, c});
        return r;
    }

    Poly scaled(int64_t c) const {
        c = ring_->field().reduce(c);
        Poly r(ring_);
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
        return r;
    }

    // this * c * x^m
    Poly times_term(const Exp& m, int64_t c) const {
        c = ring_->field().reduce(c);
        Poly r(ring_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({mono_mul(t.mono, m), ring_->field().mul(t.coeff, c)});
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->field().inv(leading_coeff()));
    }

    bool operator==(const Poly& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Evaluate at a point given by one field value per variable.
    int64_t eval(const std::vector<int64_t>& point) const {
        const FieldSpec& F = ring_->field();
        int64_t acc = 0;
        for (const auto& t : terms_) {
            int64_t v = t.coeff;
            for (size_t i = 0; i < t.mono.size(); ++i)
                if (t.mono[i] > 0) v = F.mul(v, F.pow(point[i], t.mono[i]));
            acc = F.add(acc, v);
        }
        return acc;
    }

    // Ring homomorphism determined by variable images (one per variable of
    // this ring, all living in the target ring).
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const {
        if (images.size() != ring_->nvars())
            throw precondition_error("substitute: wrong number of variable images");
        Poly acc = Poly::zero(target);
        for (const auto& t : terms_) {
            Poly prod = Poly::constant(target, t.coeff);
            for (size_t i = 0; i < t.mono.size(); ++i)
                for (int32_t k = 0; k < t.mono[i]; ++k) prod = prod * images[i];
            acc = acc + prod;
        }
        return acc;
    }

    // Move to a ring that contains (at least) the same variable names.
    // Exponents of variables absent from the target must be zero.
    Poly mapped_to(const RingPtr& target) const {
        std::vector<long> where(ring_->nvars());
        for (size_t i = 0; i < ring_->nvars(); ++i)
            where[i] = target->var_index(ring_->var_name(i));
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) {
            Exp e = target->one();
            for (size_t i = 0; i < t.mono.size(); ++i) {
                if (t.mono[i] == 0) continue;
                if (where[i] < 0)
                    throw precondition_error("mapped_to: variable '" + ring_->var_name(i) +
                                             "' does not exist in the target ring");
                e[static_cast<size_t>(where[i])] = t.mono[i];
            }
            ts.push_back({std::move(e), t.coeff});
        }
        return from_terms(target, std::move(ts));
    }

    // Image under Y_i -> 0 for every variable of the given block, into a
    // target ring without that block.
    Poly block_killed(const RingPtr& target, Block b) const {
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            if (ring_->block_degree(t.mono, b) > 0) continue;
            Exp e = target->one();
            for (size_t i = 0; i < t.mono.size(); ++i) {
                if (t.mono[i] == 0) continue;
                long w = target->var_index(ring_->var_name(i));
                if (w < 0) throw internal_error("block_killed: missing variable in target");
                e[static_cast<size_t>(w)] = t.mono[i];
            }
            ts.push_back({std::move(e), t.coeff});
        }
        return from_terms(target, std::move(ts));
    }

    std::string str() const;

private:
    void require_nonzero() const {
        if (terms_.empty()) throw precondition_error("leading term of the zero polynomial");
    }

    static void check_rings(const Poly& a, const Poly& b) {
        if (!same_ring(a.ring_, b.ring_))
            throw precondition_error("polynomial ring mismatch");
    }

    static Poly merge(const Poly& a, const Poly& b, bool negate_b) {
        check_rings(a, b);
        const PolyRing& R = *a.ring_;
        const FieldSpec& F = R.field();
        Poly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c;
            if (i >= a.terms_.size())
                c = -1;
            else if (j >= b.terms_.size())
                c = 1;
            else
                c = R.cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                Term t = b.terms_[j++];
                if (negate_b) t.coeff = F.neg(t.coeff);
                r.terms_.push_back(std::move(t));
            } else {
                int64_t cb = negate_b ? F.neg(b.terms_[j].coeff) : b.terms_[j].coeff;
                int64_t s = F.add(a.terms_[i].coeff, cb);
                if (s != 0) r.terms_.push_back({a.terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

// ---- text form -----------------------------------------------------------
//
// Grammar shared by all file formats: integer coefficients, named variables,
// '*', '+', '-', '^'.  Example: -3*x^2*T_1 + y*T_2

inline std::string Poly::str() const {
    if (is_zero()) return "0";
    const FieldSpec& F = ring_->field();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        int64_t c = F.symmetric(t.coeff);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int64_t ac = c < 0 ? -c : c;
        bool has_vars = ring_->total_degree(t.mono) > 0;
        bool printed = false;
        if (ac != 1 || !has_vars) {
            os << ac;
            printed = true;
        }
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (printed) os << "*";
            os << ring_->var_name(i);
            if (t.mono[i] > 1) os << "^" << t.mono[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring)
        : s_(text), ring_(std::move(ring)) {}

    Poly parse() {
        Poly r = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error("trailing characters in polynomial: '" +
                              std::string(s_.substr(pos_)) + "'");
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        bool neg = false;
        while (true) {
            if (eat('+')) continue;
            if (eat('-')) {
                neg = !neg;
                continue;
            }
            break;
        }
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of polynomial text");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                v %= ring_->field().p;  // avoid overflow on long literals
                ++pos_;
            }
            return with_power(Poly::constant(ring_, v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            long idx = ring_->var_index(name);
            if (idx < 0) throw parse_error("unknown variable '" + name + "'");
            return with_power(Poly::variable(ring_, static_cast<size_t>(idx)));
        }
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    }

    Poly with_power(Poly base) {
        if (!eat('^')) return base;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("expected integer exponent after '^'");
        int64_t e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 10000) throw parse_error("exponent too large");
            ++pos_;
        }
        Poly r = Poly::constant(base.ring(), 1);
        for (int64_t k = 0; k < e; ++k) r = r * base;
        return r;
    }

    std::string_view s_;
    size_t pos_ = 0;
    RingPtr ring_;
};

} // namespace detail

inline Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return detail::PolyParser(text, ring).parse();
}

// Bidegree bookkeeping.  The Y-weight of a monomial counts Y-exponents plus
// per-T-variable offsets (nonzero offsets arise for modules whose generators
// sit in different degrees); the T-weight counts T-exponents.
inline std::pair<int64_t, int64_t> bidegree(const PolyRing& R, const Exp& m,
                                            const std::vector<int64_t>& t_offsets) {
    int64_t wy = 0, wt = 0;
    size_t tpos = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        switch (R.block_of(i)) {
            case Block::Y: wy += m[i]; break;
            case Block::T:
                wt += m[i];
                if (!t_offsets.empty()) wy += m[i] * t_offsets[tpos];
                ++tpos;
                break;
            default: break;
        }
    }
    return {wy, wt};
}

inline bool is_bihomogeneous(const Poly& f, const std::vector<int64_t>& t_offsets = {}) {
    if (f.is_zero()) return true;
    const PolyRing& R = *f.ring();
    auto d0 = bidegree(R, f.terms()[0].mono, t_offsets);
    for (const auto& t : f.terms())
        if (bidegree(R, t.mono, t_offsets) != d0) return false;
    return true;
}

} // namespace reeslab

#endif
