#pragma once

// Exact arithmetic kernel. ExactInt / ExactRational are GMP-backed; the
// ring contract (zero_like / one_like / from_int_like / is_zero /
// exact_div / scale_exact) is what the generic engines compile against.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace omegalab {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

struct DivideByZero : std::domain_error {
    DivideByZero() : std::domain_error("exact_div: division by zero") {}
};

struct NotDivisible : std::domain_error {
    std::string evidence;
    explicit NotDivisible(std::string ev)
        : std::domain_error("exact_div: not divisible: " + ev), evidence(std::move(ev)) {}
};

// ---- ExactInt -------------------------------------------------------------

inline ExactInt zero_like(const ExactInt&) { return ExactInt(0); }
inline ExactInt one_like(const ExactInt&) { return ExactInt(1); }
inline ExactInt from_int_like(const ExactInt&, long v) { return ExactInt(v); }
inline ExactInt from_exact_int_like(const ExactInt&, const ExactInt& v) { return v; }
inline bool is_zero(const ExactInt& x) { return sgn(x) == 0; }

inline ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
    if (sgn(b) == 0) throw DivideByZero();
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        ExactInt r = a % b;
        throw NotDivisible(a.get_str() + " by " + b.get_str() + " leaves remainder " +
                           r.get_str());
    }
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// x * s for rational s, required to land back in the integers.
inline ExactInt scale_exact(const ExactInt& x, const ExactRational& s) {
    return exact_div(ExactInt(x * s.get_num()), s.get_den());
}

// ---- ExactRational --------------------------------------------------------

inline ExactRational zero_like(const ExactRational&) { return ExactRational(0); }
inline ExactRational one_like(const ExactRational&) { return ExactRational(1); }
inline ExactRational from_int_like(const ExactRational&, long v) { return ExactRational(v); }
inline ExactRational from_exact_int_like(const ExactRational&, const ExactInt& v) {
    return ExactRational(v);
}
inline bool is_zero(const ExactRational& x) { return sgn(x) == 0; }

inline ExactRational exact_div(const ExactRational& a, const ExactRational& b) {
    if (sgn(b) == 0) throw DivideByZero();
    return a / b;
}

inline ExactRational scale_exact(const ExactRational& x, const ExactRational& s) {
    return x * s;
}

// ---- small integer helpers ------------------------------------------------

inline ExactInt binomial(unsigned long n, unsigned long k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline ExactInt factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline ExactInt pow_int(const ExactInt& b, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace omegalab
