#pragma once

// The triangular Omega sequence over a generic exact ring: full tables,
// the apex entry with O(floor(n/2)) memory, closed forms at the special
// points, the defining ratio of the first fundamental theorem, and
// Omega-space membership.
//
// The table fill is column-by-column: every entry of column k depends
// only on column k-1 (rows r and r+1), so rows within a column are
// independent. The OpenMP fill exploits exactly that; the serial fill is
// the reference kept for testing and for small tables.

#include "omegalab/psi.hpp"
#include "omegalab/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omegalab {

struct CapExceeded : std::length_error {
    explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

inline unsigned long default_table_cap() { return 4096; }

inline int delta(unsigned long n) { return static_cast<int>(n % 2); }

template <typename R>
struct OmegaPoint {
    R zeta;
    R xi;

    OmegaPoint(R z, R x) : zeta(std::move(z)), xi(std::move(x)) {
        if (is_zero(zeta) && is_zero(xi))
            throw std::invalid_argument("OmegaPoint: (0,0) is not a valid point");
    }
};

enum class FillMode { serial, parallel };

template <typename R>
class OmegaTable {
public:
    OmegaTable(OmegaPoint<R> point, unsigned long n, FillMode mode = FillMode::serial,
               unsigned long cap = default_table_cap())
        : n_(n), half_(n / 2), point_(std::move(point)) {
        if (n < 1) throw std::invalid_argument("OmegaTable: n must be >= 1");
        if (half_ > cap)
            throw CapExceeded("OmegaTable: floor(n/2) = " + std::to_string(half_) +
                              " exceeds cap " + std::to_string(cap));
        fill(mode);
    }

    unsigned long n() const { return n_; }
    unsigned long half() const { return half_; }
    const OmegaPoint<R>& point() const { return point_; }

    // entries outside 0 <= r+k <= floor(n/2) are undefined, not zero
    const R& at(unsigned long r, unsigned long k) const {
        if (r + k > half_)
            throw std::out_of_range("OmegaTable: (r,k) outside triangle, r+k > floor(n/2)");
        return cols_[k][r];
    }

    size_t entry_count() const {
        size_t c = 0;
        for (const auto& col : cols_) c += col.size();
        return c;
    }

private:
    void fill(FillMode mode) {
        const R one = one_like(point_.zeta);
        const R coef1 = from_int_like(one, 2) * point_.zeta - point_.xi;  // 2*zeta - xi
        const R coef2 = from_int_like(one, 2) * point_.zeta;              // 2*zeta
        const long dn1 = delta(n_ - 1);

        cols_.resize(half_ + 1);
        cols_[0].assign(half_ + 1, one);
        for (unsigned long k = 1; k <= half_; ++k) {
            const auto& prev = cols_[k - 1];
            auto& cur = cols_[k];
            const long rows = static_cast<long>(half_ - k) + 1;
            cur.assign(static_cast<size_t>(rows), zero_like(one));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (mode == FillMode::parallel && rows > 16)
#endif
            for (long r = 0; r < rows; ++r) {
                long c1 = static_cast<long>(n_) - r - static_cast<long>(k);
                long c2 = static_cast<long>(n_) - 2 * r - dn1;
                cur[static_cast<size_t>(r)] =
                    coef1 * from_int_like(one, c1) * prev[static_cast<size_t>(r)] -
                    coef2 * from_int_like(one, c2) * prev[static_cast<size_t>(r) + 1];
            }
        }
        (void)mode;
    }

    unsigned long n_, half_;
    OmegaPoint<R> point_;
    std::vector<std::vector<R>> cols_;
};

// Omega_0(floor(n/2)) keeping only two columns alive.
template <typename R>
R omega_top(const OmegaPoint<R>& point, unsigned long n,
            unsigned long cap = default_table_cap()) {
    if (n < 1) throw std::invalid_argument("omega_top: n must be >= 1");
    const unsigned long half = n / 2;
    if (half > cap)
        throw CapExceeded("omega_top: floor(n/2) = " + std::to_string(half) +
                          " exceeds cap " + std::to_string(cap));
    const R one = one_like(point.zeta);
    if (half == 0) return one;

    const R coef1 = from_int_like(one, 2) * point.zeta - point.xi;
    const R coef2 = from_int_like(one, 2) * point.zeta;
    const long dn1 = delta(n - 1);

    std::vector<R> prev(half + 1, one), cur;
    for (unsigned long k = 1; k <= half; ++k) {
        const long rows = static_cast<long>(half - k) + 1;
        cur.assign(static_cast<size_t>(rows), zero_like(one));
        for (long r = 0; r < rows; ++r) {
            long c1 = static_cast<long>(n) - r - static_cast<long>(k);
            long c2 = static_cast<long>(n) - 2 * r - dn1;
            cur[static_cast<size_t>(r)] =
                coef1 * from_int_like(one, c1) * prev[static_cast<size_t>(r)] -
                coef2 * from_int_like(one, c2) * prev[static_cast<size_t>(r) + 1];
        }
        prev.swap(cur);
    }
    return prev[0];
}

// (n-1)(n-2)...(n - floor(n/2)); empty product for n = 1
inline ExactInt falling_product(unsigned long n) {
    if (n < 1) throw std::invalid_argument("falling_product: n must be >= 1");
    ExactInt p = 1;
    for (unsigned long i = 1; i <= n / 2; ++i) p *= ExactInt(static_cast<long>(n - i));
    return p;
}

// Omega_0(floor(n/2)) / (n-1)...(n-floor(n/2)); equals Psi(point, n).
template <typename R>
R omega_ratio(const OmegaPoint<R>& point, unsigned long n,
              unsigned long cap = default_table_cap()) {
    R top = omega_top(point, n, cap);
    return exact_div(top, from_exact_int_like(point.zeta, falling_product(n)));
}

// closed form at (1,-2): 2^k prod_{l=1..k} (n + delta(n-1) - 2l); r-independent
inline ExactInt omega_closed_1_minus2(unsigned long r, unsigned long k, unsigned long n) {
    if (r + k > n / 2) throw std::out_of_range("omega_closed_1_minus2: r+k > floor(n/2)");
    ExactInt p = pow_int(2, k);
    long base = static_cast<long>(n) + delta(n - 1);
    for (unsigned long l = 1; l <= k; ++l) p *= ExactInt(base - 2 * static_cast<long>(l));
    return p;
}

// closed form at (1,2): (-2)^k prod_{l=0..k-1} (n - delta(n+1) - 2r - 2l)
inline ExactInt omega_closed_1_2(unsigned long r, unsigned long k, unsigned long n) {
    if (r + k > n / 2) throw std::out_of_range("omega_closed_1_2: r+k > floor(n/2)");
    ExactInt p = pow_int(-2, k);
    long base = static_cast<long>(n) - delta(n + 1) - 2 * static_cast<long>(r);
    for (unsigned long l = 0; l < k; ++l) p *= ExactInt(base - 2 * static_cast<long>(l));
    return p;
}

// closed form at (0,-1): prod_{l=1..k} (n - r - l)
inline ExactInt omega_closed_0_minus1(unsigned long r, unsigned long k, unsigned long n) {
    if (r + k > n / 2) throw std::out_of_range("omega_closed_0_minus1: r+k > floor(n/2)");
    ExactInt p = 1;
    for (unsigned long l = 1; l <= k; ++l)
        p *= ExactInt(static_cast<long>(n) - static_cast<long>(r) - static_cast<long>(l));
    return p;
}

template <typename R>
bool in_omega_space(const OmegaPoint<R>& point, unsigned long n) {
    return !is_zero(psi(point.zeta, point.xi, n));
}

template <typename R>
bool in_kernel(const OmegaPoint<R>& point, unsigned long n) {
    return !in_omega_space(point, n);
}

}  // namespace omegalab
