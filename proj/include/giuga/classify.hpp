#pragma once

#include <optional>
#include <vector>

#include "giuga/arith.hpp"

namespace giuga {

/// The set K_n of exponent multipliers k for which
/// sum_{j=1}^{n-1} j^{k(n-1)} = -1 (mod n): empty unless n is a Giuga
/// number, in which case it is every multiple of k_min.
struct KSpec {
    enum class Kind { empty, all_multiples_of };

    Kind kind = Kind::empty;
    Int k_min; // meaningful when kind == all_multiples_of

    bool contains(const Int& k) const {
        return kind == Kind::all_multiples_of && k >= 1 &&
               mpz_divisible_p(k.get_mpz_t(), k_min.get_mpz_t());
    }
    /// K_n covers every positive integer exactly when k_min == 1, i.e. when
    /// n would be a counterexample to Giuga's conjecture.
    bool all_naturals() const {
        return kind == Kind::all_multiples_of && k_min == 1;
    }
};

/// Full classification record for one integer. Every characterization is
/// evaluated; the agreement invariants are enforced at construction.
struct GiugaReport {
    Int n;
    bool is_composite = false;
    bool is_square_free = false;
    bool giuga_by_definition = false;
    Rat giuga_fraction;                // sum of 1/p over p | n, minus 1/n
    bool carmichael_by_korselt = false;
    bool carmichael_by_lambda = false;
    std::optional<Int> k_min;          // present iff giuga_by_definition
    bool is_g1_counterexample = false; // giuga AND carmichael
    bool primality_probable = false;   // some factor only probabilistically prime
    Factorization factorization;
};

/// Definition test: composite, square-free, and p | (n/p - 1) for every
/// prime p dividing n.
bool is_giuga(const Factorization& f);

/// The exact rational sum of 1/p over the distinct primes of n, minus 1/n.
/// A positive integer exactly when n is a Giuga number.
Rat giuga_fraction(const Factorization& f);

/// Korselt: composite, square-free, (p-1) | (n-1) for all p | n.
bool carmichael_by_korselt(const Factorization& f);

/// Carmichael's own criterion: composite and lambda(n) | n-1.
bool carmichael_by_lambda(const Factorization& f);

/// Both criteria, which must agree (a disagreement is a defect and throws).
bool is_carmichael(const Factorization& f);

/// Minimal exponent multiplier lambda(n) / gcd(lambda(n), n-1).
/// Throws NotGiuga unless is_giuga(f).
Int k_min(const Factorization& f);

/// Membership in G_k: is_giuga and k_min | k.
bool in_gk(const Factorization& f, const Int& k);

/// Direct congruence route to the same membership question: evaluates
/// sum_{j=1}^{n-1} j^{k(n-1)} mod n by the fast per-prime-power method and
/// compares with n-1. Used by the test suites as an independent check.
bool gk_congruence_holds(const Factorization& f, const Int& k);

/// Square-free and, for every p | n, (p-1) | k(n/p - 1) and p | (n/p - 1).
/// Equivalent to in_gk over composite n.
bool wong_conditions(const Factorization& f, const Int& k);

/// K_n as described above.
KSpec k_set(const Factorization& f);

/// Classify n >= 2, factoring it (or validating the supplied prime factors:
/// product must equal n, every part prime, else BadFactorHint). Reports for
/// n <= 10^4 are additionally cross-checked against the literal phi- and
/// lambda-exponent power sums.
GiugaReport classify(const Int& n,
                     const std::optional<std::vector<Int>>& known_factors = std::nullopt);

} // namespace giuga
