#pragma once

// Two-row Psi coefficients via the lambda/Omega bridge, lambda tables,
// and the theta-weighted sums built from them.

#include "omegalab/omega.hpp"
#include "omegalab/psi.hpp"
#include "omegalab/ring.hpp"

#include <stdexcept>
#include <vector>

namespace omegalab {

// lambda_r(0) = (-1)^r n/(n-r) C(n-r,r), an exact integer
inline ExactInt lambda_base(unsigned long r, unsigned long n) {
    ExactInt v = exact_div(ExactInt(static_cast<long>(n)) * binomial(n - r, r),
                           ExactInt(static_cast<long>(n - r)));
    return (r % 2 == 0) ? v : -v;
}

// Triangular table lambda_r(k | alpha, beta | n), 0 <= r+k <= floor(n/2).
template <typename R>
class LambdaTable {
public:
    LambdaTable(const R& alpha, const R& beta, unsigned long n,
                unsigned long cap = default_table_cap())
        : n_(n), half_(n / 2) {
        if (n < 1) throw std::invalid_argument("LambdaTable: n must be >= 1");
        if (half_ > cap)
            throw CapExceeded("LambdaTable: floor(n/2) = " + std::to_string(half_) +
                              " exceeds cap " + std::to_string(cap));
        const R one = one_like(alpha);
        const R coef = from_int_like(one, 2) * alpha - beta;  // 2*alpha - beta
        cols_.resize(half_ + 1);
        cols_[0].reserve(half_ + 1);
        for (unsigned long r = 0; r <= half_; ++r)
            cols_[0].push_back(from_exact_int_like(one, lambda_base(r, n)));
        for (unsigned long k = 1; k <= half_; ++k) {
            const auto& prev = cols_[k - 1];
            auto& cur = cols_[k];
            for (unsigned long r = 0; r + k <= half_; ++r) {
                long c1 = static_cast<long>(half_ - k - r) + 1;
                cur.push_back(coef * from_int_like(one, c1) * prev[r] +
                              alpha * from_int_like(one, static_cast<long>(r + 1)) * prev[r + 1]);
            }
        }
    }

    unsigned long n() const { return n_; }
    unsigned long half() const { return half_; }

    const R& at(unsigned long r, unsigned long k) const {
        if (r + k > half_)
            throw std::out_of_range("LambdaTable: (r,k) outside triangle");
        return cols_[k][r];
    }

private:
    unsigned long n_, half_;
    std::vector<std::vector<R>> cols_;
};

// lambda from Omega via the factorial prefactor of the bridge identity:
// lambda_r(k) = (-1)^r n (n-r-k-1)! (floor(n/2)-r)!
//               / ((n-2r)! r! (floor(n/2)-r-k)!)  *  Omega_r(k | alpha,beta | n)
template <typename R>
R lambda_omega_bridge(const OmegaPoint<R>& point, unsigned long n, unsigned long r,
                      unsigned long k, unsigned long cap = default_table_cap()) {
    const unsigned long half = n / 2;
    if (r + k > half) throw std::out_of_range("lambda_omega_bridge: (r,k) outside triangle");
    OmegaTable<R> table(point, n, FillMode::serial, cap);
    ExactRational pre(ExactInt(static_cast<long>(n)) * factorial(n - r - k - 1) *
                          factorial(half - r),
                      factorial(n - 2 * r) * factorial(r) * factorial(half - r - k));
    pre.canonicalize();
    if (r % 2 == 1) pre = -pre;
    return scale_exact(table.at(r, k), pre);
}

// Psi(a b n; alpha beta k), the unique two-row coefficient:
//   sum_{r=0}^{floor(n/2)-k} (-1)^{r+k} (n-r-k-1)! n / ((n-2r)! r!)
//       * C(floor(n/2)-r, k) * Omega_r(k|alpha,beta|n) * a^r (2a-b)^{floor(n/2)-k-r}
// Individual prefactors are rational; only the combination with Omega is
// integral, so we accumulate over a common denominator and divide once.
template <typename R>
R psi_two_row(const R& a, const R& b, const R& alpha, const R& beta, unsigned long n,
              unsigned long k, unsigned long cap = default_table_cap()) {
    const unsigned long half = n / 2;
    if (k > half) throw std::out_of_range("psi_two_row: k > floor(n/2)");
    if (is_zero(R(beta * a - alpha * b)))
        throw std::invalid_argument("psi_two_row: beta*a - alpha*b must be nonzero");

    OmegaTable<R> table(OmegaPoint<R>(alpha, beta), n, FillMode::serial, cap);
    const R base = from_int_like(a, 2) * a - b;

    std::vector<ExactRational> pre(half - k + 1);
    ExactInt den = 1;
    for (unsigned long r = 0; r + k <= half; ++r) {
        pre[r] = ExactRational(ExactInt(static_cast<long>(n)) * factorial(n - r - k - 1) *
                                   binomial(half - r, k),
                               factorial(n - 2 * r) * factorial(r));
        pre[r].canonicalize();
        if ((r + k) % 2 == 1) pre[r] = -pre[r];
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), pre[r].get_den().get_mpz_t());
    }

    R acc = zero_like(a);
    for (unsigned long r = 0; r + k <= half; ++r) {
        ExactInt c = exact_div(ExactInt(pre[r].get_num() * den), pre[r].get_den());
        R term = from_exact_int_like(a, c) * table.at(r, k);
        for (unsigned long j = 0; j < r; ++j) term *= a;
        for (unsigned long j = 0; j < half - k - r; ++j) term *= base;
        acc += term;
    }
    return exact_div(acc, from_exact_int_like(a, den));
}

// sum_r Psi(a b n; alpha beta r) theta^r; contract: Psi(a-alpha*theta, b-beta*theta, n)
template <typename R>
R theta_sum(const R& a, const R& b, const R& alpha, const R& beta, const R& theta,
            unsigned long n, unsigned long cap = default_table_cap()) {
    const unsigned long half = n / 2;
    R acc = zero_like(a);
    R tp = one_like(a);
    for (unsigned long r = 0; r <= half; ++r) {
        acc += psi_two_row(a, b, alpha, beta, n, r, cap) * tp;
        tp *= theta;
    }
    return acc;
}

// sum_r Psi_r xiS^{floor(n/2)-r} etaS^r; contract: Psi(a*xiS-alpha*etaS, b*xiS-beta*etaS, n)
template <typename R>
R theta_sum_homogenized(const R& a, const R& b, const R& alpha, const R& beta, const R& xiS,
                        const R& etaS, unsigned long n,
                        unsigned long cap = default_table_cap()) {
    const unsigned long half = n / 2;
    R acc = zero_like(a);
    for (unsigned long r = 0; r <= half; ++r) {
        R term = psi_two_row(a, b, alpha, beta, n, r, cap);
        for (unsigned long j = 0; j < half - r; ++j) term *= xiS;
        for (unsigned long j = 0; j < r; ++j) term *= etaS;
        acc += term;
    }
    return acc;
}

// sum_{r=k}^{floor(n/2)} C(r,k) Psi_r theta^{r-k};
// contract: Psi(a-alpha*theta b-beta*theta n; alpha beta k)
template <typename R>
R theta_sum_shifted(const R& a, const R& b, const R& alpha, const R& beta, const R& theta,
                    unsigned long n, unsigned long k,
                    unsigned long cap = default_table_cap()) {
    const unsigned long half = n / 2;
    if (k > half) throw std::out_of_range("theta_sum_shifted: k > floor(n/2)");
    R acc = zero_like(a);
    R tp = one_like(a);
    for (unsigned long r = k; r <= half; ++r) {
        acc += from_exact_int_like(a, binomial(r, k)) *
               psi_two_row(a, b, alpha, beta, n, r, cap) * tp;
        tp *= theta;
    }
    return acc;
}

}  // namespace omegalab
