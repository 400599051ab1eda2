#pragma once

#include <vector>

#include "giuga/arith.hpp"

namespace giuga {

inline constexpr unsigned kBernoulliCap = 600;

/// Exact Bernoulli numbers B_0 .. B_max_index (B_1 = -1/2 convention).
struct BernoulliTable {
    unsigned max_index = 0;
    std::vector<Rat> values;

    const Rat& at(unsigned i) const; // throws IndexTooLarge beyond the table
};

/// Builds the table with the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 and
/// self-checks every even row against the von Staudt-Clausen denominator.
/// Throws ResourceExhausted when m exceeds the cap.
BernoulliTable bernoulli_upto(unsigned m, unsigned cap = kBernoulliCap);

/// Product of primes q with (q-1) | m; the exact denominator of B_m for
/// even m >= 2.
Int von_staudt_clausen_denominator(unsigned m);

/// The Bernoulli characterization of Giuga numbers: n * B_phi(n) = -1 (mod n)
/// with the denominator inverted mod n. Throws IndexTooLarge when phi(n)
/// exceeds the table and DenominatorNotInvertible when the congruence is
/// undefined (reported, never coerced).
bool agoh_giuga_check(const Factorization& f, const BernoulliTable& table);
bool agoh_giuga_check(const Factorization& f, unsigned cap = kBernoulliCap);

/// Residue of n * B_{n-1} mod n. Equals n-1 on primes; whether that holds
/// only for primes is Agoh's conjecture. (Stated with index n the congruence
/// would be vacuous for odd n > 1 since those Bernoulli numbers vanish, so
/// the n-1 form is the one implemented.)
Int agoh_primality_residue(const Int& n, const BernoulliTable& table);
Int agoh_primality_residue(const Int& n, unsigned cap = kBernoulliCap);

} // namespace giuga
