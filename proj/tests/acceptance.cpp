// Acceptance gate: ten criteria, one pass/fail line each. Exits nonzero if
// any criterion fails. Each check compares library output against an
// independent oracle (direct recurrences, trial division, hand arithmetic).

#include <omegalab/identities.hpp>
#include <omegalab/multipoly.hpp>
#include <omegalab/number_theory.hpp>
#include <omegalab/omega.hpp>
#include <omegalab/psi.hpp>
#include <omegalab/two_row.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

using namespace omegalab;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << index << " [" << name << "]: " << (ok ? "PASS" : "FAIL")
              << " (" << secs << "s)";
    if (!error.empty()) std::cout << " exception: " << error;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

OmegaPoint<ExactInt> ipt(long z, long x) { return OmegaPoint<ExactInt>(ExactInt(z), ExactInt(x)); }

}  // namespace

int main() {
    // 1. Psi(a,b,4) symbolic expansion and the three two-row coefficients
    criterion(1, "symbolic n=4 worked example", [] {
        const std::vector<std::string> U{"a", "b", "alpha", "beta"};
        MultiPoly a = MultiPoly::var(U, "a"), b = MultiPoly::var(U, "b");
        MultiPoly al = MultiPoly::var(U, "alpha"), be = MultiPoly::var(U, "beta");
        return psi(a, b, 4).str() == "-2*a^2 + b^2" &&
               psi_two_row(a, b, al, be, 4, 0).str() == "-2*a^2 + b^2" &&
               psi_two_row(a, b, al, be, 4, 1).str() == "4*a*alpha - 2*b*beta" &&
               psi_two_row(a, b, al, be, 4, 2).str() == "-2*alpha^2 + beta^2";
    });

    // 2. six-variable expansion identity for n <= 12 plus its specialization
    criterion(2, "expansion identity n<=12", [] {
        for (unsigned long n = 1; n <= 12; ++n)
            if (!verify_ex00(n)) return false;
        const auto& U = vars::xy;
        MultiPoly x = MultiPoly::var(U, "x"), y = MultiPoly::var(U, "y");
        MultiPoly q = x * x + x * y + y * y;
        return x.pow(4) + y.pow(4) + (x + y).pow(4) ==
               MultiPoly::constant(U, ExactInt(2)) * q * q;
    });

    // 3. ratio theorem over the full integer grid, Psi two independent ways
    criterion(3, "ratio equals Psi on grid n<=60", [] {
        for (long al = -5; al <= 5; ++al)
            for (long be = -5; be <= 5; ++be) {
                if (al == 0 && be == 0) continue;
                ExactInt A(al), B(be);
                for (unsigned long n = 1; n <= 60; ++n) {
                    ExactInt q = exact_div(omega_top(ipt(al, be), n), falling_product(n));
                    if (q != psi(A, B, n)) return false;
                    if (q != psi_sum(A, B, n)) return false;
                }
            }
        return true;
    });

    // 4. periodicity case tables, integer points to 200 and sqrt(5) to 50
    criterion(4, "periodicity tables", [] {
        return periodicity_all_ok(psi_periodicity_tables(200, 50));
    });

    // 5. Mersenne representation and primality verdicts vs trial division
    criterion(5, "Mersenne test", [] {
        for (unsigned long p = 1; p <= 25; p += 2)
            if (mersenne_via_omega(p) != pow_int(2, p) - 1) return false;
        for (unsigned long p : {5UL, 7UL, 13UL, 17UL, 19UL})
            if (!llm_is_mersenne_prime(p).is_prime) return false;
        for (unsigned long p : {11UL, 23UL})
            if (llm_is_mersenne_prime(p).is_prime) return false;
        for (unsigned long p : {5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL}) {
            MersenneVerdict naive = llm_is_mersenne_prime(p, MersenneMethod::naive);
            MersenneVerdict fast = llm_is_mersenne_prime(p, MersenneMethod::fast);
            if (naive.is_prime != fast.is_prime || naive.residue != fast.residue) return false;
            if (naive.is_prime != is_prime_trial(naive.modulus)) return false;
        }
        for (unsigned long p : {5UL, 7UL, 13UL})
            if (llm_composite_witness(p, 1) || llm_composite_witness(p, -1)) return false;
        return true;
    });

    // 6. Fermat / Lucas / oscillating / lambda-Fibonacci / Chebyshev / Dickson
    criterion(6, "representation theorems", [] {
        for (unsigned long n = 1; n <= 5; ++n)
            if (fermat_via_omega(n) != pow_int(2, 1UL << n) + 1) return false;
        for (unsigned long n = 1; n <= 50; ++n) {
            if (lucas_via_omega(n) != lucas_oracle(n)) return false;
            ExactInt osc = n % 2 == 1 ? fibonacci_oracle(n) : lucas_oracle(n);
            if (fib_lucas_oscillating(n) != osc) return false;
            if (fibonacci_via_lambda(n) != fibonacci_oracle(n)) return false;
        }
        for (long xi = -4; xi <= 4; ++xi) {
            ExactRational x(xi);
            ExactRational tp = 1, tc = x;
            for (unsigned long n = 2; n <= 30; ++n) {
                ExactRational tn = ExactRational(2) * x * tc - tp;
                tp = tc;
                tc = tn;
                if (chebyshev_T(n, x) != tc) return false;
            }
            for (long ai = -4; ai <= 4; ++ai) {
                if (xi == 0 && 2 * ai == xi * xi) continue;
                ExactInt dx(xi), da(ai);
                ExactInt dp = 2, dc = dx;
                for (unsigned long n = 2; n <= 30; ++n) {
                    ExactInt dn = dx * dc - da * dp;
                    dp = dc;
                    dc = dn;
                    if (dickson_D(n, dx, da) != dc) return false;
                }
            }
        }
        return true;
    });

    // 7. factorial/odd-product identity for n <= 200
    criterion(7, "combinatorial identity n<=200", [] {
        for (unsigned long n = 1; n <= 200; ++n)
            if (!combinatorial_identity_check(n)) return false;
        return true;
    });

    // 8. prime emergence chain for k <= 8, with the k=2 refinement
    // counterexample confirmed rather than hidden
    criterion(8, "prime emergence k<=8", [] {
        PrimeIndexer primes(1000000);
        for (unsigned long k = 2; k <= 8; ++k) {
            unsigned long pk = primes.kth_prime(k);
            ExactInt expect = 1;
            for (unsigned long t = pk; t <= 2 * pk - 1; ++t)
                expect *= ExactInt(static_cast<long>(t));
            for (auto [a, b] :
                 {std::pair<long, long>{1, 1}, {0, -1}, {1, 4}, {-2, -5}}) {
                OmegaPoint<ExactInt> pt{ExactInt(a), ExactInt(b)};
                if (!in_omega_space(pt, 2 * pk)) continue;
                if (emergence_ratio_at(primes, k, pt) != expect) return false;
            }
            EmergenceReport rep =
                second_fundamental_check(primes, k, {{1, 1}, {0, -1}}, {2, -1});
            if (!rep.ratios_divisible || !rep.combination_divisible) return false;
            if (!third_fundamental_check(primes, k)) return false;
            if (!gen2_check(primes, k, 1, 1) || !gen2_check(primes, k, 1, 0)) return false;
            if (!prime_fib_check(primes, k)) return false;
            if (k >= 3 && !gen1_check(primes, k)) return false;
        }
        // k=2 counterexample: quotient is exactly 1, not divisible by 5
        OmegaPoint<ExactInt> p11{ExactInt(1), ExactInt(1)};
        ExactInt q = exact_div(emergence_ratio_at(primes, 2, p11), ExactInt(60));
        return q == 1;
    });

    // 9. lambda machinery: k! divisibility, bridge equality, symbolic suites
    criterion(9, "lambda machinery", [] {
        for (unsigned long n = 1; n <= 30; ++n) {
            LambdaTable<ExactInt> t(ExactInt(1), ExactInt(1), n);
            OmegaPoint<ExactInt> pt{ExactInt(1), ExactInt(1)};
            for (unsigned long k = 0; k <= n / 2; ++k) {
                ExactInt kf = factorial(k);
                for (unsigned long r = 0; r + k <= n / 2; ++r) {
                    if (!mpz_divisible_p(t.at(r, k).get_mpz_t(), kf.get_mpz_t())) return false;
                    if (t.at(r, k) != lambda_omega_bridge(pt, n, r, k)) return false;
                }
            }
        }
        for (unsigned long n = 1; n <= 12; ++n) {
            if (!verify_derivative_recurrences(n)) return false;
            if (!verify_scaling(n)) return false;
        }
        return true;
    });

    // 10. CLI contract is exercised by the dedicated cli test binary; here we
    // recheck the golden values the CLI prints, against the library
    criterion(10, "CLI golden values", [] {
        return omega_ratio(ipt(1, 1), 6) == 2 && omega_top(ipt(0, -1), 6) == 60 &&
               omega_ratio(ipt(-2, -5), 5) == 31 &&
               psi(ExactInt(-2), ExactInt(-5), 7) == 127 &&
               psi_mod(ExactInt(1), ExactInt(4), 16, ExactInt(31)) == 0 &&
               psi(ExactInt(1), ExactInt(-2), 9) == 1;
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criterion(s) failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
