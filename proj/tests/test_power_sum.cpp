#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>

#include "giuga/power_sum.hpp"
#include "giuga/parallel.hpp"

using namespace giuga;

namespace {

Int naive(unsigned long n, const Int& e) {
    return power_sum_naive({Int(n), e, std::nullopt});
}

Int fast(unsigned long n, const Int& e) {
    return power_sum_fast({Int(n), e, std::nullopt});
}

} // namespace

TEST_CASE("naive power sum examples") {
    CHECK(naive(7, 6) == 6);    // prime p: every unit term is 1, sum = p-1
    CHECK(naive(30, 8) == 29);  // 30 is Giuga, phi(30) = 8
    CHECK(naive(12, 2) == 2);   // 506 mod 12
    CHECK(naive(2, 1) == 1);
}

TEST_CASE("naive refuses above the cutoff") {
    CHECK_THROWS_AS(power_sum_naive({Int(1'000'003), Int(2), std::nullopt}), ResourceExhausted);
    CHECK_NOTHROW(power_sum_naive({Int(1200), Int(2), std::nullopt}, 2000));
    CHECK_THROWS_AS(power_sum_naive({Int(2100), Int(2), std::nullopt}, 2000), ResourceExhausted);
}

TEST_CASE("naive rejects bad queries") {
    CHECK_THROWS_AS(naive(1, Int(3)), Error);
    CHECK_THROWS_AS(power_sum_naive({Int(10), Int(0), std::nullopt}), Error);
}

TEST_CASE("fast power sum examples") {
    CHECK(fast(30, 4) == 29); // closed form + CRT; also lambda(30) = 4
    CHECK(fast(30, 4) == naive(30, 4));
    CHECK(fast(30, 6) == 5);  // 4 does not divide 6, mod-5 residue drops to 0
    CHECK(fast(30, 6) == naive(30, 6));
    CHECK(fast(12, 4) == 2);
    CHECK(fast(12, 4) == naive(12, 4));
}

TEST_CASE("fast path handles huge exponents in O(#primes)") {
    // 66198 is Giuga with k_min = 2320; with k a 64-digit multiple of 2320
    // the exponent k(n-1) is astronomically large and still O(#primes) work
    Int k = Int(2320) * Int("1000000000000000000000000000000000000000000000000000000000000");
    CHECK(fast(66198, k * 66197) == 66197);
    // one step off a multiple of k_min misses -1
    CHECK(fast(66198, (k + 1) * 66197) != 66197);
}

TEST_CASE("fast refuses exponents below a prime-power exponent") {
    CHECK_THROWS_AS(fast(8, Int(2)), PreconditionViolated);  // 2^3 needs e >= 3
    CHECK_THROWS_AS(fast(16, Int(3)), PreconditionViolated);
    CHECK_NOTHROW(fast(8, Int(3)));
}

TEST_CASE("fast validates a supplied factorization") {
    Factorization f12 = factor(12);
    CHECK_THROWS_AS(power_sum_fast({Int(30), Int(4), f12}), MissingFactorization);
    Factorization f30 = factor(30);
    CHECK(power_sum_fast({Int(30), Int(4), f30}) == 29);
}

TEST_CASE("even prime-power moduli pinned against the oracle") {
    // 2^1, 2^2, 2^3 all flow through the one unit-sum code path
    for (unsigned long n : {2ul, 4ul, 8ul, 6ul, 12ul, 24ul, 40ul, 120ul}) {
        unsigned max_r = factor(n).max_exponent();
        for (unsigned long e = 1; e <= 12; ++e) {
            if (e < max_r) continue;
            CAPTURE(n);
            CAPTURE(e);
            CHECK(fast(n, Int(e)) == naive(n, Int(e)));
        }
    }
    CHECK(fast(8, Int(4)) == 4);
    CHECK(fast(8, Int(7)) == 0);
    CHECK(fast(8, Int(10)) == 4);
    CHECK(fast(16, Int(4)) == 8);
    CHECK(fast(24, Int(8)) == 4);
}

TEST_CASE("prime row: S(p, p-1) = p-1") {
    for (std::uint32_t p : small_primes()) {
        if (p > 1000) break;
        CHECK(fast(p, Int(p) - 1) == Int(p) - 1);
    }
}

TEST_CASE("fast equals naive across exponent families up to 2000") {
    std::atomic<std::uint64_t> mismatches{0};
    parallel_for(2, 2001, [&](std::uint64_t n) {
        Factorization f = factor(Int(static_cast<unsigned long>(n)));
        unsigned max_r = f.max_exponent();
        Int n_minus_1 = Int(static_cast<unsigned long>(n)) - 1;
        Int exponents[] = {carmichael_lambda(f), euler_phi(f), n_minus_1, 2 * n_minus_1,
                           3 * n_minus_1};
        for (const Int& e : exponents) {
            if (e < max_r) continue;
            PowerSumQuery q{Int(static_cast<unsigned long>(n)), e, f};
            if (power_sum_fast(q) != power_sum_naive(q)) ++mismatches;
        }
    });
    CHECK(mismatches == 0);
}

TEST_CASE("per-prime-power shift identity") {
    // For p^r || n and e >= r: S(n, e) = (n/p^r) S(p^r, e) (mod p^r)
    std::atomic<std::uint64_t> mismatches{0};
    parallel_for(2, 2001, [&](std::uint64_t n) {
        Factorization f = factor(Int(static_cast<unsigned long>(n)));
        for (const Int& e : {Int(static_cast<unsigned long>(n - 1)), carmichael_lambda(f)}) {
            if (e < 1) continue;
            Int full = power_sum_naive({Int(static_cast<unsigned long>(n)), e, f});
            for (const auto& pp : f.factors) {
                if (e < pp.exponent) continue;
                Int prime_power;
                mpz_pow_ui(prime_power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
                if (prime_power == f.value) continue;
                Int local = power_sum_naive({prime_power, e, std::nullopt});
                Int lhs = full % prime_power;
                Int rhs = ((f.value / prime_power) * local) % prime_power;
                if (lhs != rhs) ++mismatches;
            }
        }
    });
    CHECK(mismatches == 0);
}

TEST_CASE("lambda- and phi-exponent sums agree") {
    CHECK(lambda_phi_power_sums_agree(12, 1, 1));
    CHECK(lambda_phi_power_sums_agree(30, 3, 2));
    CHECK(lambda_phi_power_sums_agree(7, 1, 1));
    // cases where a*lambda dips below the 2^3 exponent and the naive
    // fallback carries the check
    CHECK(lambda_phi_power_sums_agree(8, 1, 1));
    CHECK(lambda_phi_power_sums_agree(24, 1, 1));

    std::mt19937_64 rng(20260808);
    for (int i = 0; i < 200; ++i) {
        unsigned long n = 2 + rng() % 4999;
        unsigned long a = 1 + rng() % 4;
        unsigned long b = 1 + rng() % 4;
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(lambda_phi_power_sums_agree(Int(n), Int(a), Int(b)));
    }
}

TEST_CASE("both sides of the agreement are computed at the stated values") {
    // N=12: lambda = 2, phi = 4; S(12,2) = S(12,4) = 2
    Factorization f = factor(12);
    CHECK(power_sum_fast({Int(12), carmichael_lambda(f), f}) == 2);
    CHECK(power_sum_fast({Int(12), euler_phi(f), f}) == 2);
    // N=30, A=3, B=2: both sides -1 because 30 is a Giuga number
    Factorization g = factor(30);
    CHECK(power_sum_fast({Int(30), 3 * carmichael_lambda(g), g}) == 29);
    CHECK(power_sum_fast({Int(30), 2 * euler_phi(g), g}) == 29);
    // N=7: lambda = phi = 6, both sides 6
    CHECK(fast(7, Int(6)) == 6);
}
