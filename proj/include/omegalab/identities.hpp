#pragma once

// Exact symbolic verification of the expansion, sums-of-powers,
// differential-recurrence, and scaling identities. Everything here is a
// polynomial equality checked by full expansion; odd-n divisions by (x+y)
// are verified in cross-multiplied form so no rational functions appear.

#include "omegalab/multipoly.hpp"
#include "omegalab/psi.hpp"
#include "omegalab/two_row.hpp"

#include <string>
#include <vector>

namespace omegalab {

inline unsigned long default_symbolic_cap() { return 12; }

namespace vars {
inline const std::vector<std::string> xyab4{"x", "y", "a", "b", "alpha", "beta"};
inline const std::vector<std::string> ab4{"a", "b", "alpha", "beta"};
inline const std::vector<std::string> ab4l{"a", "b", "alpha", "beta", "lambda"};
inline const std::vector<std::string> xy{"x", "y"};
}  // namespace vars

inline void check_symbolic_cap(unsigned long n, unsigned long cap) {
    if (n > cap)
        throw CapExceeded("symbolic identity: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
}

// (beta*a - alpha*b)^{floor(n/2)} (x^n + y^n) ==
//   (x+y)^{delta(n)} * sum_r Psi_r (alpha x^2+beta xy+alpha y^2)^{m-r} (a x^2+b xy+a y^2)^r
inline bool verify_ex00(unsigned long n, unsigned long cap = default_symbolic_cap()) {
    check_symbolic_cap(n, cap);
    const auto& U = vars::xyab4;
    MultiPoly x = MultiPoly::var(U, "x"), y = MultiPoly::var(U, "y");
    MultiPoly a = MultiPoly::var(U, "a"), b = MultiPoly::var(U, "b");
    MultiPoly al = MultiPoly::var(U, "alpha"), be = MultiPoly::var(U, "beta");
    const unsigned long m = n / 2;

    MultiPoly q1 = al * x * x + be * x * y + al * y * y;
    MultiPoly q2 = a * x * x + b * x * y + a * y * y;
    MultiPoly rhs = MultiPoly(U);
    for (unsigned long r = 0; r <= m; ++r)
        rhs += psi_two_row(a, b, al, be, n, r) * q1.pow(static_cast<unsigned>(m - r)) *
               q2.pow(static_cast<unsigned>(r));

    MultiPoly lhs = (be * a - al * b).pow(static_cast<unsigned>(m)) *
                    (x.pow(static_cast<unsigned>(n)) + y.pow(static_cast<unsigned>(n)));
    if (n % 2 == 1) rhs *= x + y;
    return lhs == rhs;
}

// Eq. 00 as a polynomial identity in x,y, plus
// Psi(xy, -x^2-y^2, n) (x+y)^{delta(n)} == x^n + y^n
inline bool verify_sums_of_powers(unsigned long n, unsigned long cap = default_symbolic_cap()) {
    check_symbolic_cap(n, cap);
    const auto& U = vars::xy;
    MultiPoly x = MultiPoly::var(U, "x"), y = MultiPoly::var(U, "y");
    MultiPoly powsum = x.pow(static_cast<unsigned>(n)) + y.pow(static_cast<unsigned>(n));

    MultiPoly sum00 = MultiPoly(U);
    for (unsigned long i = 0; i <= n / 2; ++i) {
        ExactInt coef = exact_div(ExactInt(static_cast<long>(n)) * binomial(n - i, i),
                                  ExactInt(static_cast<long>(n - i)));
        if (i % 2 == 1) coef = -coef;
        sum00 += MultiPoly::constant(U, coef) * (x * y).pow(static_cast<unsigned>(i)) *
                 (x + y).pow(static_cast<unsigned>(n - 2 * i));
    }
    if (sum00 != powsum) return false;

    MultiPoly ww4 = psi(x * y, -(x * x) - y * y, n);
    if (n % 2 == 1) ww4 *= x + y;
    return ww4 == powsum;
}

// diff1 (both operators), the r-fold derivative formulas, and the
// floor(n/2)-fold derivative recovering Psi(alpha,beta,n)
inline bool verify_derivative_recurrences(unsigned long n,
                                          unsigned long cap = default_symbolic_cap()) {
    check_symbolic_cap(n, cap);
    const auto& U = vars::ab4;
    MultiPoly a = MultiPoly::var(U, "a"), b = MultiPoly::var(U, "b");
    MultiPoly al = MultiPoly::var(U, "alpha"), be = MultiPoly::var(U, "beta");
    const unsigned long m = n / 2;

    std::vector<MultiPoly> psir;
    for (unsigned long r = 0; r <= m; ++r) psir.push_back(psi_two_row(a, b, al, be, n, r));

    auto d_ab = [&](const MultiPoly& p) { return al * p.partial("a") + be * p.partial("b"); };
    auto d_albe = [&](const MultiPoly& p) { return a * p.partial("alpha") + b * p.partial("beta"); };

    for (unsigned long r = 0; r <= m; ++r) {
        MultiPoly lhs1 = d_ab(psir[r]);
        MultiPoly rhs1 = (r < m) ? -(from_int_like(a, static_cast<long>(r + 1)) * psir[r + 1])
                                 : MultiPoly(U);  // top row: left side must vanish
        if (lhs1 != rhs1) return false;

        MultiPoly lhs2 = d_albe(psir[r]);
        MultiPoly rhs2 = (r > 0)
                             ? -(from_int_like(a, static_cast<long>(m - r + 1)) * psir[r - 1])
                             : MultiPoly(U);
        if (lhs2 != rhs2) return false;
    }

    // diff3: Psi_r = (-1)^r / r! (alpha d_a + beta d_b)^r Psi(a,b,n)
    MultiPoly acc = psir[0];
    for (unsigned long r = 1; r <= m; ++r) {
        acc = d_ab(acc);
        ExactRational s(ExactInt(r % 2 == 0 ? 1 : -1), factorial(r));
        if (scale_exact(acc, s) != psir[r]) return false;
    }

    // diff5: Psi_r = (-1)^r / (m-r)! (a d_alpha + b d_beta)^{m-r} Psi(alpha,beta,n)
    MultiPoly psi_albe = psi(al, be, n);
    acc = psi_albe;
    for (unsigned long j = 1; j <= m; ++j) {
        acc = d_albe(acc);
        unsigned long r = m - j;
        ExactRational s(ExactInt(r % 2 == 0 ? 1 : -1), factorial(j));
        if (scale_exact(acc, s) != psir[r]) return false;
    }

    // Aexp2: 1/m! (alpha d_a + beta d_b)^m Psi(a,b,n) == Psi(alpha,beta,n)
    MultiPoly top = psir[0];
    for (unsigned long j = 0; j < m; ++j) top = d_ab(top);
    return scale_exact(top, ExactRational(ExactInt(1), factorial(m))) == psi_albe;
}

// all four scaling laws of Eq. W22, with lambda a formal variable
inline bool verify_scaling(unsigned long n, unsigned long cap = default_symbolic_cap()) {
    check_symbolic_cap(n, cap);
    const auto& U = vars::ab4l;
    MultiPoly a = MultiPoly::var(U, "a"), b = MultiPoly::var(U, "b");
    MultiPoly al = MultiPoly::var(U, "alpha"), be = MultiPoly::var(U, "beta");
    MultiPoly la = MultiPoly::var(U, "lambda");
    const unsigned long m = n / 2;

    for (unsigned long r = 0; r <= m; ++r) {
        MultiPoly psir = psi_two_row(a, b, al, be, n, r);
        // law 1
        if (psi_two_row(a, b, la * al, la * be, n, r) !=
            la.pow(static_cast<unsigned>(r)) * psir)
            return false;
        // law 2
        if (psi_two_row(la * a, la * b, al, be, n, r) !=
            la.pow(static_cast<unsigned>(m - r)) * psir)
            return false;
        // law 3: row swap with r -> m-r picks up (-1)^m
        MultiPoly swapped = psi_two_row(al, be, a, b, n, m - r);
        if (m % 2 == 1) swapped = -swapped;
        if (psir != swapped) return false;
    }
    // law 4
    return la.pow(static_cast<unsigned>(m)) * psi(a, b, n) == psi(la * a, la * b, n);
}

}  // namespace omegalab
