#pragma once

// Number-theoretic applications of the Omega/Psi engines: the Mersenne,
// Fermat, Lucas/Fibonacci, Chebyshev and Dickson representations, the
// Lucas-Lehmer-Moustafa primality test, and the prime-emergence
// divisibility checks.

#include "omegalab/omega.hpp"
#include "omegalab/psi.hpp"
#include "omegalab/quad_elem.hpp"
#include "omegalab/ring.hpp"

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace omegalab {

// ---- prime oracle (sieve + trial division, independent of Omega/Psi) -------

class PrimeIndexer {
public:
    explicit PrimeIndexer(unsigned long bound = 1000000);

    unsigned long bound() const { return bound_; }
    // 1-indexed: kth_prime(1) = 2, kth_prime(2) = 3, ...
    unsigned long kth_prime(unsigned long k) const;
    size_t count() const { return primes_.size(); }
    const std::vector<unsigned long>& primes() const { return primes_; }

private:
    unsigned long bound_;
    std::vector<unsigned long> primes_;
};

PrimeIndexer primes_upto(unsigned long bound);

bool is_prime_trial(const ExactInt& n);

// ---- representation theorems ------------------------------------------------

// 2^p - 1 via the Omega ratio at (-2,-5); p odd
ExactInt mersenne_via_omega(unsigned long p, unsigned long cap = default_table_cap());

// 2^{2^n} + 1 via the Omega ratio at (-2,-5) with index 2^n; 1 <= n <= 6
ExactInt fermat_via_omega(unsigned long n);

// Lucas L(n) via the Omega ratio at (-1,-3)
ExactInt lucas_via_omega(unsigned long n, unsigned long cap = default_table_cap());

// F(n) for odd n, L(n) for even n, via the Omega ratio at (1,-3)
ExactInt fib_lucas_oscillating(unsigned long n, unsigned long cap = default_table_cap());

// the Lambda-variant recurrence: top entry Lambda_0(floor((n-1)/2))
ExactInt lambda_variant_top(unsigned long n, unsigned long cap = default_table_cap());

// F(n) via the Lambda-variant table
ExactInt fibonacci_via_lambda(unsigned long n, unsigned long cap = default_table_cap());

// Chebyshev T_n(x) = x^{delta(n)} Psi(1, 2-4x^2, n) / 2^{delta(n-1)}, via Omega
ExactRational chebyshev_T(unsigned long n, const ExactRational& x,
                          unsigned long cap = default_table_cap());

// Dickson D_n(x,alpha) = x^{delta(n)} Psi(alpha, 2*alpha - x^2, n), via Omega
template <typename R>
R dickson_D(unsigned long n, const R& x, const R& alpha,
            unsigned long cap = default_table_cap()) {
    if (n < 1) throw std::invalid_argument("dickson_D: n must be >= 1");
    R value = omega_ratio(OmegaPoint<R>(alpha, from_int_like(x, 2) * alpha - x * x), n, cap);
    if (n % 2 == 1) value *= x;
    return value;
}

// ---- Lucas-Lehmer-Moustafa Mersenne test ------------------------------------

enum class MersenneMethod { naive, fast };

struct MersenneVerdict {
    unsigned long p;
    ExactInt modulus;   // 2^p - 1
    ExactInt residue;   // Psi(1,4,2^{p-1}) mod 2^p-1
    bool is_prime;      // residue == 0
    MersenneMethod method;
};

// is_prime <=> 2^p-1 | Psi(1,4,2^{p-1}); p prime, p >= 5.
// naive capped at p <= 26, fast at p <= 1024; for p <= 13 the exact
// Omega-ratio divisibility form is cross-checked as well.
MersenneVerdict llm_is_mersenne_prime(unsigned long p,
                                      MersenneMethod method = MersenneMethod::fast,
                                      unsigned long naive_cap = 26,
                                      unsigned long fast_cap = 1024);

// true iff 2^p-1 | Psi(1,4,2^{p-1}+offset); a sufficient compositeness
// certificate only — absence proves nothing
bool llm_composite_witness(unsigned long p, int offset, unsigned long fast_cap = 1024);

// ---- combinatorics and emergence --------------------------------------------

// (n-1)...(n-floor(n/2)) == 2^{floor(n/2)-delta(n+1)} (n+delta(n-1)-2)(...)(3)(1)
bool combinatorial_identity_check(unsigned long n);

// R = Omega_0(p_k | point | 2 p_k) / Psi(point, 2 p_k) = p_k (p_k+1) ... (2 p_k - 1)
template <typename R>
ExactInt emergence_ratio_at(const PrimeIndexer& primes, unsigned long k,
                            const OmegaPoint<R>& point,
                            unsigned long cap = default_table_cap());

struct EmergenceReport {
    unsigned long k = 0;
    unsigned long p_k = 0;
    unsigned long p_next = 0;
    ExactInt ratio;                        // the common R (point-independent)
    bool ratios_divisible = false;         // p_{k+1} | R for every point
    bool combination_divisible = false;    // p_{k+1} | sum lambda R
    ExactInt combination;
};

EmergenceReport second_fundamental_check(const PrimeIndexer& primes, unsigned long k,
                                         const std::vector<std::pair<long, long>>& points,
                                         const std::vector<long>& coeffs);

// prod_{i=2}^{k+1} p_i | R
bool third_fundamental_check(const PrimeIndexer& primes, unsigned long k);

// p_{k+1} | R / (p_k (2p_k - 1)(2p_k - 2)); holds for k >= 3 (fails at k=2)
bool gen1_check(const PrimeIndexer& primes, unsigned long k);

// p_{k+1} | Omega_0(p_k | point | 2 p_k), any point, kernel points included
bool gen2_check(const PrimeIndexer& primes, unsigned long k, long alpha, long beta);

// p_{k+1} | Lambda_0(p_k - 1) / F(2 p_k)
bool prime_fib_check(const PrimeIndexer& primes, unsigned long k);

// p_{k+1} | (p_k+1)(p_k+2)...(2p_k-3) (k >= 3) and the clear-chain
// divisibilities of the product of the first odd primes (k >= 2)
bool bertrand_check(const PrimeIndexer& primes, unsigned long k);

// ---- periodicity tables ------------------------------------------------------

// independent two-term oracles
ExactInt fibonacci_oracle(unsigned long n);
ExactInt lucas_oracle(unsigned long n);

struct PeriodicityRow {
    unsigned long n;
    ExactInt at_1_1, at_1_0, at_1_m1, at_1_m2, at_1_2;
    bool ok;  // all columns match the case tables / closed forms
};

// checks omega_ratio at (1,1),(1,0),(1,-1),(1,-2),(1,2) against the mod-6/8/12
// case tables and closed forms for n <= n_max, and at (1,sqrt5) against the
// F/L four-case table for n <= quad_max
std::vector<PeriodicityRow> psi_periodicity_tables(unsigned long n_max,
                                                   unsigned long quad_max = 50);
bool periodicity_all_ok(const std::vector<PeriodicityRow>& rows);

// expected case-table values (exposed for tests)
long psi11_expected(unsigned long n);   // mod 6
long psi10_expected(unsigned long n);   // mod 8
long psi1m1_expected(unsigned long n);  // mod 12
QuadElem psi_sqrt5_expected(unsigned long n);  // mod 4, over Q(sqrt 5)

// ---- template impl -----------------------------------------------------------

template <typename R>
ExactInt emergence_ratio_at(const PrimeIndexer& primes, unsigned long k,
                            const OmegaPoint<R>& point, unsigned long cap) {
    if (k < 2) throw std::invalid_argument("emergence_ratio: k must be >= 2");
    const unsigned long pk = primes.kth_prime(k);
    const unsigned long n = 2 * pk;
    R psi_val = psi(point.zeta, point.xi, n);
    if (is_zero(psi_val))
        throw std::invalid_argument("emergence_ratio: point lies in the kernel of omega(2 p_k)");
    R top = omega_top(point, n, cap);
    R ratio = exact_div(top, psi_val);
    // the ratio is a rational integer in both supported rings
    if constexpr (std::is_same_v<R, ExactInt>) {
        return ratio;
    } else if constexpr (std::is_same_v<R, QuadElem>) {
        if (sgn(ratio.radical_part()) != 0 || ratio.rational_part().get_den() != 1)
            throw NotDivisible("emergence ratio is not a rational integer");
        return ExactInt(ratio.rational_part().get_num());
    } else {
        static_assert(std::is_same_v<R, ExactInt> || std::is_same_v<R, QuadElem>,
                      "emergence_ratio_at: unsupported ring");
    }
}

}  // namespace omegalab
