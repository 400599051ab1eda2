#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <set>

#include "giuga/classify.hpp"
#include "giuga/parallel.hpp"
#include "giuga/power_sum.hpp"

using namespace giuga;

namespace {

Factorization fac(unsigned long n) { return factor(Int(n)); }

} // namespace

TEST_CASE("is_giuga examples") {
    CHECK(is_giuga(fac(30)));
    CHECK_FALSE(is_giuga(fac(561))); // 11 does not divide 561/11 - 1 = 50
    CHECK_FALSE(is_giuga(fac(4)));   // not square-free
    CHECK_FALSE(is_giuga(fac(7)));   // primes are excluded
    CHECK_FALSE(is_giuga(fac(6)));
    CHECK(is_giuga(fac(858)));
    CHECK(is_giuga(fac(1722)));
    CHECK(is_giuga(fac(66198)));
}

TEST_CASE("giuga_fraction examples") {
    CHECK(giuga_fraction(fac(30)) == Rat(1));
    CHECK(giuga_fraction(fac(6)) == Rat(2, 3));
    CHECK(giuga_fraction(fac(4)) == Rat(1, 4)); // 1/2 - 1/4
    CHECK(giuga_fraction(fac(858)) == Rat(1));
}

TEST_CASE("fraction integrality coincides with the definition test") {
    // over square-free composites up to 1e5 the fraction is a positive
    // integer exactly at the Giuga numbers
    std::atomic<std::uint64_t> mismatches{0};
    parallel_for(2, 100'001, [&](std::uint64_t n) {
        Factorization f = factor(Int(static_cast<unsigned long>(n)));
        if (!f.is_composite() || !f.is_square_free()) return;
        Rat q = giuga_fraction(f);
        bool integral = q.get_den() == 1 && q.get_num() >= 1;
        if (integral != is_giuga(f)) ++mismatches;
    });
    CHECK(mismatches == 0);
}

TEST_CASE("carmichael criteria examples") {
    CHECK(is_carmichael(fac(561))); // lambda(561) = 80 divides 560
    CHECK(carmichael_by_korselt(fac(561)));
    CHECK_FALSE(is_carmichael(fac(30))); // lambda = 4 does not divide 29
    CHECK_FALSE(is_carmichael(fac(7)));  // primes excluded
    CHECK_FALSE(is_carmichael(fac(4)));
}

TEST_CASE("both carmichael criteria agree and find the known small members") {
    std::set<std::uint64_t> found;
    for (std::uint64_t n = 2; n <= 5000; ++n) {
        Factorization f = fac(static_cast<unsigned long>(n));
        CHECK(carmichael_by_korselt(f) == carmichael_by_lambda(f));
        if (is_carmichael(f)) found.insert(n);
    }
    CHECK(found == std::set<std::uint64_t>{561, 1105, 1729, 2465, 2821});
}

TEST_CASE("k_min examples") {
    CHECK(k_min(fac(30)) == 4);
    CHECK(k_min(fac(858)) == 60);
    CHECK(k_min(fac(1722)) == 120);
    CHECK(k_min(fac(66198)) == 2320);
    CHECK_THROWS_AS(k_min(fac(561)), NotGiuga);
    CHECK_THROWS_AS(k_min(fac(12)), NotGiuga);
}

TEST_CASE("in_gk examples and the direct congruence route") {
    CHECK(in_gk(fac(30), 8));
    CHECK_FALSE(in_gk(fac(30), 6));
    CHECK_FALSE(in_gk(fac(561), 1));
    CHECK(gk_congruence_holds(fac(30), 8));
    CHECK_FALSE(gk_congruence_holds(fac(30), 6));
    CHECK_FALSE(gk_congruence_holds(fac(561), 1));
    // direct congruence at a catalog-scale exponent
    CHECK(in_gk(fac(66198), 2320 * 7));
    CHECK(gk_congruence_holds(fac(66198), 2320 * 7));
}

TEST_CASE("k_set examples") {
    KSpec s30 = k_set(fac(30));
    CHECK(s30.kind == KSpec::Kind::all_multiples_of);
    CHECK(s30.k_min == 4);
    CHECK(s30.contains(4));
    CHECK(s30.contains(8));
    CHECK_FALSE(s30.contains(6));
    CHECK_FALSE(s30.all_naturals());

    CHECK(k_set(fac(561)).kind == KSpec::Kind::empty);
    CHECK_FALSE(k_set(fac(561)).contains(1));
    CHECK(k_set(fac(10)).kind == KSpec::Kind::empty); // 5 does not divide 10/5 - 1

    // K_n is all of N exactly when k_min = 1, i.e. for a conjecture
    // counterexample; none exists in reach, so synthesize the flag check
    KSpec synthetic{KSpec::Kind::all_multiples_of, Int(1)};
    CHECK(synthetic.all_naturals());
}

TEST_CASE("wong_conditions examples") {
    CHECK(wong_conditions(fac(30), 4));
    CHECK_FALSE(wong_conditions(fac(30), 1)); // 4 does not divide 1 * (30/5 - 1)
    for (unsigned long k = 1; k <= 10; ++k)
        CHECK_FALSE(wong_conditions(fac(12), Int(k))); // not square-free
}

TEST_CASE("k_min divisibility, direct congruence, and wong conditions coincide (small slice)") {
    std::atomic<std::uint64_t> mismatches{0};
    parallel_for(2, 301, [&](std::uint64_t n) {
        Factorization f = factor(Int(static_cast<unsigned long>(n)));
        if (!f.is_composite()) return;
        for (unsigned long k = 1; k <= 25; ++k) {
            bool via_kmin = in_gk(f, Int(k));
            bool via_naive =
                power_sum_naive({f.value, Int(k) * (f.value - 1), f}) == f.value - 1;
            bool via_wong = wong_conditions(f, Int(k));
            if (via_kmin != via_naive || via_kmin != via_wong) ++mismatches;
        }
    });
    CHECK(mismatches == 0);
}

TEST_CASE("characterization concordance on composites up to 2000") {
    std::atomic<std::uint64_t> mismatches{0};
    parallel_for(2, 2001, [&](std::uint64_t n) {
        Factorization f = factor(Int(static_cast<unsigned long>(n)));
        if (!f.is_composite()) return;
        bool by_definition = is_giuga(f);
        bool by_phi = power_sum_naive({f.value, euler_phi(f), f}) == f.value - 1;
        bool by_lambda = power_sum_naive({f.value, carmichael_lambda(f), f}) == f.value - 1;
        Rat q = giuga_fraction(f);
        bool by_fraction = q.get_den() == 1 && q.get_num() >= 1;
        if (by_phi != by_definition || by_lambda != by_definition ||
            by_fraction != by_definition)
            ++mismatches;
    });
    CHECK(mismatches == 0);
}

TEST_CASE("every multiple of lambda or phi yields -1 on Giuga numbers") {
    for (unsigned long n : {30ul, 858ul, 1722ul, 66198ul}) {
        Factorization f = fac(n);
        Int lambda = carmichael_lambda(f);
        Int phi = euler_phi(f);
        for (unsigned long mult = 1; mult <= 5; ++mult) {
            CHECK(power_sum_fast({f.value, Int(mult) * lambda, f}) == f.value - 1);
            CHECK(power_sum_fast({f.value, Int(mult) * phi, f}) == f.value - 1);
        }
    }
}

TEST_CASE("classify fills a coherent report") {
    GiugaReport r30 = classify(30);
    CHECK(r30.is_composite);
    CHECK(r30.is_square_free);
    CHECK(r30.giuga_by_definition);
    CHECK(r30.giuga_fraction == Rat(1));
    CHECK_FALSE(r30.carmichael_by_lambda);
    REQUIRE(r30.k_min.has_value());
    CHECK(*r30.k_min == 4);
    CHECK_FALSE(r30.is_g1_counterexample);
    CHECK_FALSE(r30.primality_probable);

    GiugaReport r1722 = classify(1722);
    CHECK(r1722.giuga_by_definition);
    REQUIRE(r1722.k_min.has_value());
    CHECK(*r1722.k_min == 120);

    GiugaReport r1729 = classify(1729);
    CHECK_FALSE(r1729.giuga_by_definition);
    CHECK(r1729.carmichael_by_korselt);
    CHECK(r1729.carmichael_by_lambda);
    CHECK_FALSE(r1729.k_min.has_value());

    GiugaReport r7 = classify(7);
    CHECK_FALSE(r7.is_composite);
    CHECK_FALSE(r7.giuga_by_definition);
    CHECK_FALSE(r7.carmichael_by_lambda);
    CHECK_FALSE(r7.k_min.has_value());
}

TEST_CASE("classify accepts correct hints and rejects wrong ones") {
    GiugaReport hinted = classify(30, std::vector<Int>{2, 3, 5});
    CHECK(hinted.giuga_by_definition);
    CHECK_THROWS_AS(classify(30, std::vector<Int>{2, 3, 7}), BadFactorHint);
    CHECK_THROWS_AS(classify(30, std::vector<Int>{6, 5}), BadFactorHint);
}

TEST_CASE("classify handles a catalog-scale input with hints") {
    Int n("4200017949707747062038711509670656632404195753751630609228764416"
          "142557211582098432545190323474818");
    std::vector<Int> parts{2, 3, 11, 23, 31, 47059, Int("2217342227"), Int("1729101023519"),
                           Int("8491659218261819498490029296021"),
                           Int("58254480569119734123541298976556403")};
    GiugaReport r = classify(n, parts);
    CHECK(r.giuga_by_definition);
    CHECK(r.primality_probable); // two factors sit above the deterministic bound
    REQUIRE(r.k_min.has_value());
    CHECK(to_decimal(*r.k_min) ==
          "153667435783939063566650024064548003549741373592724458590479456139"
          "61394951904884493965220");
}

TEST_CASE("classify rejects n below 2") {
    CHECK_THROWS_AS(classify(1), Error);
    CHECK_THROWS_AS(classify(0), Error);
}
