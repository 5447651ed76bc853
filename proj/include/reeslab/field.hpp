#ifndef REESLAB_FIELD_HPP
#define REESLAB_FIELD_HPP

#include <cstdint>
#include <string>

#include "reeslab/errors.hpp"

namespace reeslab {

// Prime field GF(p).  Elements are canonical representatives in [0, p).
// The default 32003 keeps coefficient arithmetic in 64 bits and makes
// random "generic" choices reliable at desk scale.
struct FieldSpec {
    int64_t p = 32003;

    static bool is_prime(int64_t n) {
        if (n < 2) return false;
        for (int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    void validate() const {
        if (!is_prime(p))
            throw precondition_error("field characteristic " + std::to_string(p) +
                                     " is not prime");
        if (p <= 1000)
            throw precondition_error("field characteristic must exceed 1000, got " +
                                     std::to_string(p));
    }

    int64_t reduce(int64_t a) const {
        int64_t r = a % p;
        return r < 0 ? r + p : r;
    }

    int64_t add(int64_t a, int64_t b) const { return (a + b) % p; }
    int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
    int64_t mul(int64_t a, int64_t b) const { return (a * b) % p; }
    int64_t neg(int64_t a) const { return a == 0 ? 0 : p - a; }

    int64_t pow(int64_t a, int64_t e) const {
        int64_t r = 1 % p;
        a %= p;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    int64_t inv(int64_t a) const {
        a = reduce(a);
        if (a == 0) throw precondition_error("division by zero in GF(p)");
        return pow(a, p - 2);
    }

    int64_t div(int64_t a, int64_t b) const { return mul(reduce(a), inv(b)); }

    // Symmetric representative in (-p/2, p/2], used for printing.
    int64_t symmetric(int64_t a) const {
        a = reduce(a);
        return a > p / 2 ? a - p : a;
    }

    bool operator==(const FieldSpec& o) const { return p == o.p; }
};

} // namespace reeslab

#endif
