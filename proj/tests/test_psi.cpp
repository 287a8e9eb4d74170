#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omegalab/identities.hpp>
#include <omegalab/multipoly.hpp>
#include <omegalab/omega.hpp>
#include <omegalab/psi.hpp>
#include <omegalab/two_row.hpp>

#include <random>

using namespace omegalab;

namespace {
const std::vector<std::string> AB{"a", "b"};
MultiPoly sym(const std::string& v) { return MultiPoly::var(AB, v); }
}  // namespace

TEST_CASE("psi initial values and displayed cases") {
    ExactInt a(3), b(11);
    CHECK(psi(a, b, 0) == 2);
    CHECK(psi(a, b, 1) == 1);
    CHECK(psi(ExactInt(-2), ExactInt(-5), 5) == 31);
    CHECK(psi(ExactInt(-2), ExactInt(-5), 7) == 127);
}

TEST_CASE("psi symbolic n=4 expands to -2a^2 + b^2") {
    MultiPoly p = psi(sym("a"), sym("b"), 4);
    CHECK(p.str() == "-2*a^2 + b^2");
}

TEST_CASE("psi_sum displayed cases") {
    for (unsigned long n = 1; n <= 20; ++n) {
        // (1,-2): 2^{delta(n+1)}
        CHECK(psi_sum(ExactInt(1), ExactInt(-2), n) ==
              pow_int(2, static_cast<unsigned long>(delta(n + 1))));
        // (1,2): (-1)^{floor(n/2)} 2^{delta(n-1)} n^{delta(n)}
        ExactInt expect = pow_int(2, static_cast<unsigned long>(delta(n - 1))) *
                          pow_int(ExactInt(static_cast<long>(n)),
                                  static_cast<unsigned long>(delta(n)));
        if ((n / 2) % 2 == 1) expect = -expect;
        CHECK(psi_sum(ExactInt(1), ExactInt(2), n) == expect);
    }
    CHECK(psi_sum(ExactInt(-1), ExactInt(-3), 3) == 4);  // L(3)
}

TEST_CASE("psi equals psi_sum on the integer grid, n <= 60") {
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
            if (a == 0 && b == 0) continue;
            for (unsigned long n = 1; n <= 60; ++n)
                CHECK(psi(ExactInt(a), ExactInt(b), n) == psi_sum(ExactInt(a), ExactInt(b), n));
        }
}

TEST_CASE("lambda table base row and k! divisibility, n <= 30") {
    for (unsigned long n = 1; n <= 30; ++n) {
        LambdaTable<ExactInt> t(ExactInt(2), ExactInt(-3), n);
        CHECK(t.at(0, 0) == 1);
        if (n / 2 >= 1) CHECK(t.at(1, 0) == -ExactInt(static_cast<long>(n)));
        for (unsigned long k = 0; k <= n / 2; ++k) {
            ExactInt kf = factorial(k);
            for (unsigned long r = 0; r + k <= n / 2; ++r)
                CHECK(mpz_divisible_p(t.at(r, k).get_mpz_t(), kf.get_mpz_t()));
        }
    }
}

TEST_CASE("lambda table equals the omega bridge entrywise, n <= 30") {
    for (long alpha : {1L, 2L, -1L})
        for (long beta : {1L, -3L}) {
            for (unsigned long n = 1; n <= 30; ++n) {
                LambdaTable<ExactInt> t(ExactInt(alpha), ExactInt(beta), n);
                OmegaPoint<ExactInt> pt{ExactInt(alpha), ExactInt(beta)};
                for (unsigned long k = 0; k <= n / 2; ++k)
                    for (unsigned long r = 0; r + k <= n / 2; ++r)
                        CHECK(t.at(r, k) == lambda_omega_bridge(pt, n, r, k));
            }
        }
    // displayed case: n=6, point (1,1), r=0, k=3, both paths
    LambdaTable<ExactInt> t6(ExactInt(1), ExactInt(1), 6);
    OmegaPoint<ExactInt> pt6(ExactInt(1), ExactInt(1));
    CHECK(lambda_omega_bridge(pt6, 6, 0, 3) == t6.at(0, 3));
}

TEST_CASE("two-row coefficients: boundary rows and the n=4 worked example") {
    const std::vector<std::string> U{"a", "b", "alpha", "beta"};
    MultiPoly a = MultiPoly::var(U, "a"), b = MultiPoly::var(U, "b");
    MultiPoly al = MultiPoly::var(U, "alpha"), be = MultiPoly::var(U, "beta");

    CHECK(psi_two_row(a, b, al, be, 4, 0).str() == "-2*a^2 + b^2");
    CHECK(psi_two_row(a, b, al, be, 4, 1).str() == "4*a*alpha - 2*b*beta");
    CHECK(psi_two_row(a, b, al, be, 4, 2).str() == "-2*alpha^2 + beta^2");

    for (unsigned long n = 1; n <= 10; ++n) {
        unsigned long m = n / 2;
        CHECK(psi_two_row(a, b, al, be, n, 0) == psi(a, b, n));
        MultiPoly top = psi(al, be, n);
        if (m % 2 == 1) top = -top;
        CHECK(psi_two_row(a, b, al, be, n, m) == top);
    }
}

TEST_CASE("theta sum contracts on integer grids") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> dist(-4, 4);
    int checked = 0;
    while (checked < 40) {
        long a = dist(rng), b = dist(rng), al = dist(rng), be = dist(rng);
        if (be * a - al * b == 0) continue;
        if (a == 0 && b == 0) continue;
        unsigned long n = 1 + rng() % 24;
        ExactInt A(a), B(b), AL(al), BE(be);
        for (long th = -3; th <= 3; ++th) {
            ExactInt T(th);
            ExactInt sa = A - AL * T, sb = B - BE * T;
            CHECK(theta_sum(A, B, AL, BE, T, n) == psi(sa, sb, n));
        }
        ++checked;
    }
}

TEST_CASE("homogenized and shifted theta sums contract") {
    ExactInt a(3), b(1), al(1), be(2);
    for (unsigned long n : {4UL, 6UL, 7UL, 9UL}) {
        // pair (1, theta) reduces to the plain sum
        for (long th = -2; th <= 2; ++th)
            CHECK(theta_sum_homogenized(a, b, al, be, ExactInt(1), ExactInt(th), n) ==
                  theta_sum(a, b, al, be, ExactInt(th), n));
        // general pair
        for (long xs : {2L, -1L})
            for (long es : {1L, 3L}) {
                ExactInt sa = a * ExactInt(xs) - al * ExactInt(es);
                ExactInt sb = b * ExactInt(xs) - be * ExactInt(es);
                CHECK(theta_sum_homogenized(a, b, al, be, ExactInt(xs), ExactInt(es), n) ==
                      psi(sa, sb, n));
            }
        // k=0 reduces to the plain sum; general k contracts to the shifted
        // two-row coefficient
        for (unsigned long k = 0; k <= n / 2; ++k)
            for (long th : {0L, 1L, 2L}) {
                ExactInt T(th);
                ExactInt lhs = theta_sum_shifted(a, b, al, be, T, n, k);
                ExactInt sa = a - al * T, sb = b - be * T;
                CHECK(lhs == psi_two_row(sa, sb, al, be, n, k));
            }
    }
    // displayed case: n=6, k=1, theta=2
    ExactInt sa = a - al * 2, sb = b - be * 2;
    CHECK(theta_sum_shifted(a, b, al, be, ExactInt(2), 6, 1) ==
          psi_two_row(sa, sb, al, be, 6, 1));
}

TEST_CASE("symbolic identity suites pass up to the cap") {
    for (unsigned long n = 1; n <= 12; ++n) {
        CHECK(verify_ex00(n));
        CHECK(verify_sums_of_powers(n));
    }
    for (unsigned long n = 1; n <= 10; ++n) {
        CHECK(verify_derivative_recurrences(n));
        CHECK(verify_scaling(n));
    }
    CHECK_THROWS_AS(verify_ex00(13), CapExceeded);
}

TEST_CASE("ex00 specialization reproduces the Haldeman-style display") {
    // n=4 at (a,b,alpha,beta)=(1,1,1,2): x^4+y^4+(x+y)^4 == 2(x^2+xy+y^2)^2
    const auto& U = vars::xy;
    MultiPoly x = MultiPoly::var(U, "x"), y = MultiPoly::var(U, "y");
    MultiPoly lhs = x.pow(4) + y.pow(4) + (x + y).pow(4);
    MultiPoly q = x * x + x * y + y * y;
    CHECK(lhs == MultiPoly::constant(U, ExactInt(2)) * q * q);
    std::map<std::string, ExactInt> pt{{"x", ExactInt(1)}, {"y", ExactInt(2)}};
    CHECK(lhs.eval(pt, ExactInt(1)) == 98);
}

TEST_CASE("psi_mod displayed cases") {
    CHECK(psi_mod(ExactInt(1), ExactInt(4), 16, ExactInt(31)) == 0);
    for (long m : {2L, 7L, 100L})
        CHECK(psi_mod(ExactInt(5), ExactInt(-3), 1, ExactInt(m)) == 1 % m);
    // p = 11: 2047 is composite, residue nonzero; oracle = exact value
    ExactInt exact = psi(ExactInt(1), ExactInt(4), 1024);
    ExactInt residue = psi_mod(ExactInt(1), ExactInt(4), 1024, ExactInt(2047));
    CHECK(residue == mod_reduce(exact, ExactInt(2047)));
    CHECK(residue != 0);
}

TEST_CASE("psi_mod matches exact psi reduced") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long> dist(-9, 9);
    std::uniform_int_distribution<long> mdist(2, 997);
    for (int i = 0; i < 50; ++i) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 && b == 0) continue;
        unsigned long n = rng() % 120;
        ExactInt m(mdist(rng));
        CHECK(psi_mod(ExactInt(a), ExactInt(b), n, m) ==
              mod_reduce(psi(ExactInt(a), ExactInt(b), n), m));
    }
}

TEST_CASE("psi_mod_fast agrees with psi_mod") {
    CHECK(psi_mod_fast(ExactInt(1), ExactInt(1), ExactInt(0), ExactInt(5)) == 2);
    std::mt19937_64 rng(161803);
    std::uniform_int_distribution<long> dist(-9, 9);
    std::uniform_int_distribution<long> mdist(2, 9973);
    for (int i = 0; i < 80; ++i) {
        long a = dist(rng), b = dist(rng);
        unsigned long n = rng() % 4097;
        ExactInt m(mdist(rng));
        CHECK(psi_mod_fast(ExactInt(a), ExactInt(b), ExactInt(static_cast<long>(n)), m) ==
              psi_mod(ExactInt(a), ExactInt(b), n, m));
    }
    // p=13 Mersenne case: Psi(1,4,2^12) = 0 mod 2^13-1
    CHECK(psi_mod_fast(ExactInt(1), ExactInt(4), pow_int(2, 12), pow_int(2, 13) - 1) == 0);
}
