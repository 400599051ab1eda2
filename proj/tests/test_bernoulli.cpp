#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "giuga/bernoulli.hpp"
#include "giuga/classify.hpp"
#include "giuga/power_sum.hpp"

using namespace giuga;

TEST_CASE("small Bernoulli values") {
    BernoulliTable t = bernoulli_upto(12);
    CHECK(t.at(0) == Rat(1));
    CHECK(t.at(1) == Rat(-1, 2));
    CHECK(t.at(2) == Rat(1, 6));
    CHECK(t.at(3) == Rat(0));
    CHECK(t.at(4) == Rat(-1, 30));
    CHECK(t.at(5) == Rat(0));
    CHECK(t.at(6) == Rat(1, 42));
    CHECK(t.at(8) == Rat(-1, 30));
    CHECK(t.at(12) == Rat(-691, 2730));
}

TEST_CASE("cap and index errors") {
    CHECK_THROWS_AS(bernoulli_upto(601), ResourceExhausted);
    CHECK_NOTHROW(bernoulli_upto(40));
    BernoulliTable t = bernoulli_upto(10);
    CHECK_THROWS_AS(t.at(11), IndexTooLarge);
}

TEST_CASE("von Staudt-Clausen denominators match the recurrence") {
    BernoulliTable t = bernoulli_upto(300);
    for (unsigned m = 2; m <= 300; m += 2)
        CHECK(t.at(m).get_den() == von_staudt_clausen_denominator(m));
    CHECK(von_staudt_clausen_denominator(2) == 6);    // 2 * 3
    CHECK(von_staudt_clausen_denominator(8) == 30);   // 2 * 3 * 5
    CHECK(von_staudt_clausen_denominator(12) == 2730); // 2 * 3 * 5 * 7 * 13
}

TEST_CASE("Bernoulli characterization of Giuga numbers") {
    BernoulliTable t = bernoulli_upto(480);
    CHECK(agoh_giuga_check(factor(30), t));   // 30 * B_8 = -1 exactly
    CHECK(agoh_giuga_check(factor(858), t));  // phi = 240
    CHECK(agoh_giuga_check(factor(1722), t)); // phi = 480, the cap rationale
    CHECK_FALSE(agoh_giuga_check(factor(6), t)); // 6 * B_2 = 1
    CHECK_FALSE(agoh_giuga_check(factor(561), t));
}

TEST_CASE("Bernoulli characterization agrees with the definition test up to 2000") {
    BernoulliTable t = bernoulli_upto(kBernoulliCap);
    for (unsigned long n = 4; n <= 2000; ++n) {
        Factorization f = factor(Int(n));
        if (!f.is_composite()) continue;
        Int phi = euler_phi(f);
        if (phi > t.max_index) continue;
        bool defined = true;
        bool verdict = false;
        try {
            verdict = agoh_giuga_check(f, t);
        } catch (const DenominatorNotInvertible&) {
            defined = false;
        }
        if (defined) {
            CAPTURE(n);
            CHECK(verdict == is_giuga(f));
        }
    }
}

TEST_CASE("agoh_giuga_check errors") {
    BernoulliTable t = bernoulli_upto(100);
    CHECK_THROWS_AS(agoh_giuga_check(factor(858), t), IndexTooLarge); // phi = 240 > 100
    CHECK_THROWS_AS(agoh_giuga_check(factor(1226)), IndexTooLarge);   // phi = 612 > cap
    CHECK_THROWS_AS(agoh_giuga_check(factor(7), t), Error);           // primes rejected
}

TEST_CASE("prime residues of n * B_{n-1}") {
    BernoulliTable t = bernoulli_upto(100);
    CHECK(agoh_primality_residue(7, t) == 6);
    CHECK(agoh_primality_residue(5, t) == 4);
    CHECK(agoh_primality_residue(2, t) == 1);
    CHECK(agoh_primality_residue(9, t) == 6); // composite: misses n-1 = 8
    for (std::uint32_t p : small_primes()) {
        if (p > 100) break;
        CAPTURE(p);
        CHECK(agoh_primality_residue(Int(p), t) == Int(p) - 1);
    }
    CHECK_THROWS_AS(agoh_primality_residue(Int(10'000), t), IndexTooLarge);
}

TEST_CASE("residue hits n-1 exactly when the power-sum congruence does") {
    BernoulliTable t = bernoulli_upto(499);
    for (unsigned long n = 2; n <= 500; ++n) {
        Int residue;
        try {
            residue = agoh_primality_residue(Int(n), t);
        } catch (const DenominatorNotInvertible&) {
            continue;
        }
        bool bernoulli_route = residue == Int(n) - 1;
        bool sum_route = power_sum_naive({Int(n), Int(n) - 1, std::nullopt}) == Int(n) - 1;
        CAPTURE(n);
        CHECK(bernoulli_route == sum_route);
    }
}
