#pragma once

// The Psi sequence: the parity-alternating two-term recurrence, the
// explicit binomial sum that cross-checks it, and the modular pathways
// (stepwise reduction, and the logarithmic matrix-power fast path).

#include "omegalab/ring.hpp"

#include <array>
#include <stdexcept>

namespace omegalab {

// Psi(0)=2, Psi(1)=1, Psi(n+1) = (2a-b)^{delta(n)} Psi(n) - a Psi(n-1)
template <typename R>
R psi(const R& a, const R& b, unsigned long n) {
    const R two = from_int_like(a, 2);
    if (n == 0) return two;
    R prev = two;            // Psi(0)
    R cur = one_like(a);     // Psi(1)
    const R odd_coef = two * a - b;
    for (unsigned long m = 1; m < n; ++m) {
        R next = (m % 2 == 1) ? R(odd_coef * cur - a * prev) : R(cur - a * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Psi(a,b,n) = sum_{i=0}^{floor(n/2)} n/(n-i) C(n-i,i) (-a)^i (2a-b)^{floor(n/2)-i}
template <typename R>
R psi_sum(const R& a, const R& b, unsigned long n) {
    if (n < 1) throw std::invalid_argument("psi_sum: n must be >= 1");
    const unsigned long half = n / 2;
    const R base = from_int_like(a, 2) * a - b;
    R acc = zero_like(a);
    for (unsigned long i = 0; i <= half; ++i) {
        ExactInt coef = exact_div(ExactInt(static_cast<long>(n)) * binomial(n - i, i),
                                  ExactInt(static_cast<long>(n - i)));
        R term = from_exact_int_like(a, coef);
        for (unsigned long j = 0; j < i; ++j) term *= -a;
        for (unsigned long j = 0; j < half - i; ++j) term *= base;
        acc += term;
    }
    return acc;
}

// ---- modular pathway (over ExactInt residues) -------------------------------

inline ExactInt mod_reduce(const ExactInt& x, const ExactInt& m) {
    ExactInt r = x % m;
    if (sgn(r) < 0) r += m;
    return r;
}

// Psi(a,b,n) mod m via def0 with reduction each step; O(n) modular ops
inline ExactInt psi_mod(const ExactInt& a, const ExactInt& b, unsigned long n,
                        const ExactInt& m) {
    if (m < 2) throw std::invalid_argument("psi_mod: modulus must be >= 2");
    if (n == 0) return mod_reduce(2, m);
    ExactInt prev = mod_reduce(2, m);
    ExactInt cur = mod_reduce(1, m);
    const ExactInt odd_coef = mod_reduce(2 * a - b, m);
    const ExactInt am = mod_reduce(a, m);
    for (unsigned long k = 1; k < n; ++k) {
        ExactInt next =
            (k % 2 == 1) ? ExactInt(odd_coef * cur - am * prev) : ExactInt(cur - am * prev);
        next = mod_reduce(next, m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

using Mat2 = std::array<ExactInt, 4>;  // row-major [[m00,m01],[m10,m11]]

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, const ExactInt& m) {
    return {mod_reduce(x[0] * y[0] + x[1] * y[2], m), mod_reduce(x[0] * y[1] + x[1] * y[3], m),
            mod_reduce(x[2] * y[0] + x[3] * y[2], m), mod_reduce(x[2] * y[1] + x[3] * y[3], m)};
}

inline Mat2 mat_pow(Mat2 base, ExactInt e, const ExactInt& m) {
    Mat2 acc = {ExactInt(1), ExactInt(0), ExactInt(0), ExactInt(1)};
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mat_mul(acc, base, m);
        e >>= 1;
        if (sgn(e) > 0) base = mat_mul(base, base, m);
    }
    return acc;
}

}  // namespace detail

// Psi(a,b,n) mod m in O(log n) 2x2 modular matrix multiplications. Two
// consecutive def0 steps form a constant linear map on (Psi(k-1), Psi(k)):
// the step taking Psi(k+1) uses coefficient (2a-b) when k is odd and 1 when
// k is even, so the odd/even pair matrix is constant. n may be huge (it is
// 2^{p-1} in the Mersenne test), hence the ExactInt index.
inline ExactInt psi_mod_fast(const ExactInt& a, const ExactInt& b, const ExactInt& n,
                             const ExactInt& m) {
    if (m < 2) throw std::invalid_argument("psi_mod_fast: modulus must be >= 2");
    if (sgn(n) < 0) throw std::invalid_argument("psi_mod_fast: n must be >= 0");
    if (n == 0) return mod_reduce(2, m);
    if (n == 1) return mod_reduce(1, m);

    const ExactInt am = mod_reduce(a, m);
    const ExactInt neg_am = mod_reduce(-a, m);
    const ExactInt cm = mod_reduce(2 * a - b, m);
    // v_k = (Psi(k-1), Psi(k)); v_{k+1} = M_k v_k
    detail::Mat2 modd = {ExactInt(0), ExactInt(1), neg_am, cm};          // k odd
    detail::Mat2 meven = {ExactInt(0), ExactInt(1), neg_am, ExactInt(1)};  // k even
    detail::Mat2 pair = detail::mat_mul(meven, modd, m);  // modd applied first

    ExactInt steps = n - 1;  // matrices M_1 .. M_{n-1}
    detail::Mat2 total;
    if (mpz_even_p(steps.get_mpz_t())) {
        total = detail::mat_pow(pair, steps / 2, m);
    } else {
        total = detail::mat_mul(modd, detail::mat_pow(pair, (steps - 1) / 2, m), m);
    }
    // v_1 = (2, 1)
    return mod_reduce(total[2] * 2 + total[3], m);
}

}  // namespace omegalab
