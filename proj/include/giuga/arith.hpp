#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "giuga/errors.hpp"

namespace giuga {

/// Arbitrary-precision signed integer. All public arithmetic in this
/// library is exact and unbounded; there is no fixed-width fallback.
using Int = mpz_class;

/// Exact rational in lowest terms, denominator > 0.
using Rat = mpq_class;

Int int_from_decimal(const std::string& text); // throws Error on bad input
std::string to_decimal(const Int& v);

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
    Int prime;
    unsigned exponent = 1;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1,
/// product of prime^exponent equal to value. value == 1 has no factors.
struct Factorization {
    Int value{1};
    std::vector<PrimePower> factors;

    bool is_prime_value() const {
        return factors.size() == 1 && factors[0].exponent == 1;
    }
    bool is_composite() const {
        return value > 1 && !is_prime_value();
    }
    bool is_square_free() const;
    unsigned max_exponent() const;

    /// Re-checks every structural invariant (product, ordering, primality).
    bool valid() const;
};

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

enum class Primality { composite, prime, probable_prime };

/// Strong-probable-prime test. Below kDeterministicPrimalityBound the fixed
/// base set is known exhaustive and the answer is unconditional; above it,
/// 64 rounds give error probability below 2^-128 and the result is reported
/// as probable_prime.
Primality primality(const Int& n);

/// Largest bound below which primality() is unconditionally correct
/// (first thirteen prime bases; the bound is above 2^64).
const Int& deterministic_primality_bound();

inline bool is_prime(const Int& n) {
    return primality(n) != Primality::composite;
}

// ---------------------------------------------------------------------------
// Factoring
// ---------------------------------------------------------------------------

struct FactorConfig {
    std::uint32_t trial_bound = 1'000'000;      // trial division by primes below this
    std::uint64_t rho_budget = 30'000'000;      // total rho iterations per factor() call
    std::uint64_t seed = 0x5eedc0ffee;          // deterministic rho polynomial offsets
};

/// Process-wide factoring configuration, read once from the environment
/// (GIUGA_FACTOR_BUDGET overrides rho_budget) on first use.
const FactorConfig& default_factor_config();

/// Full factorization of n >= 1. Trial division below the configured bound,
/// then Brent-cycle rho within the iteration budget. Deterministic.
/// Throws ResourceExhausted when the budget runs out before completion.
Factorization factor(const Int& n);
Factorization factor(const Int& n, const FactorConfig& cfg);

/// Builds a Factorization from caller-supplied prime factors (repeats allowed,
/// any order). Throws BadFactorHint if the product differs from value or any
/// part fails the primality test.
Factorization factorization_from_parts(const Int& value, std::vector<Int> parts);

// ---------------------------------------------------------------------------
// Multiplicative functions
// ---------------------------------------------------------------------------

/// Euler totient from a factorization; phi(1) = 1.
Int euler_phi(const Factorization& f);

/// Carmichael function: lcm over prime powers, with lambda(2)=1, lambda(4)=2,
/// lambda(2^a)=2^(a-2) for a >= 3, lambda(p^r)=p^(r-1)(p-1) for odd p.
Int carmichael_lambda(const Factorization& f);

/// lambda on a single prime power.
Int carmichael_lambda_prime_power(const Int& p, unsigned r);

/// Arithmetic derivative: n' = sum over p^r || n of r * n / p; 1' = 0.
Int arithmetic_derivative(const Factorization& f);

// ---------------------------------------------------------------------------
// Modular arithmetic
// ---------------------------------------------------------------------------

/// base^exponent mod modulus, exponent >= 0, modulus >= 1.
/// mod_pow(0, 0, m) == 1 mod m (empty product).
Int mod_pow(const Int& base, const Int& exponent, const Int& modulus);

struct Congruence {
    Int residue;
    Int modulus; // >= 1
};

/// Unique x in [0, product of moduli) satisfying every congruence.
/// Throws NonCoprimeModuli if the moduli are not pairwise coprime.
Int crt_combine(std::span<const Congruence> parts);

/// numerator * denominator^{-1} mod n for n >= 2.
/// Throws DenominatorNotInvertible when gcd(denominator, n) != 1.
Int rational_mod(const Rat& q, const Int& n);

// ---------------------------------------------------------------------------
// Small-prime table
// ---------------------------------------------------------------------------

/// All primes below 1'000'000, sieved once.
const std::vector<std::uint32_t>& small_primes();

} // namespace giuga
