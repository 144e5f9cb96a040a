#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace arcstack {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a big-integer exceeds the configured bit budget
// (env ARCSTACK_MAX_BIGINT_BITS, default 1<<22 bits per numerator/denominator).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HorizonExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DependenceDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t max_bigint_bits() {
    static std::size_t cap = [] {
        if (const char* s = std::getenv("ARCSTACK_MAX_BIGINT_BITS")) {
            long v = std::atol(s);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 22;
    }();
    return cap;
}

inline void check_budget(const Int& z) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > max_bigint_bits())
        throw ResourceError("big-integer bit budget exceeded");
}

inline void check_budget(const Rat& q) {
    check_budget(q.get_num());
    check_budget(q.get_den());
}

inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// round(x) = floor(x + 1/2); ties round up.
inline Int rat_round(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

// fractional part in [0,1)
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& b, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int int_abs(const Int& z) { return abs(z); }
inline Rat rat_abs(const Rat& q) { return abs(q); }

// Serialization used throughout certificates: exact "p/q", "p" when q==1.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::optional<Rat> rat_parse(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (sgn(Rat(q.get_den())) <= 0) {
        if (q.get_den() == 0) return std::nullopt;
    }
    q.canonicalize();
    return q;
}

}  // namespace arcstack
