#pragma once

#include <optional>

#include "giuga/arith.hpp"

namespace giuga {

struct PowerSumQuery {
    Int n;        // >= 2
    Int exponent; // >= 1
    std::optional<Factorization> factorization; // of n, when already known
};

inline constexpr std::uint64_t kNaivePowerSumCutoff = 1'000'000;

/// S(n, e) = sum_{j=1}^{n-1} j^e mod n by literal term-by-term evaluation.
/// This is the trusted oracle: no exponent reduction of any kind.
/// Throws ResourceExhausted for n above the cutoff.
Int power_sum_naive(const PowerSumQuery& q, std::uint64_t cutoff = kNaivePowerSumCutoff);

/// Same sum via per-prime-power residues and CRT recombination.
///
/// For each p^r || n the terms divisible by p vanish mod p^r once e >= r,
/// leaving (n/p^r) * U(p^r, e) where U sums j^e over units only. Unit
/// exponents reduce mod lambda(p^r) (a reduced exponent of 0 is replaced by
/// lambda(p^r)), and for square-free parts U collapses to the closed form
/// U(p, e) = p-1 if (p-1) | e, else 0 — so square-free n costs O(#primes)
/// big-integer work no matter how large the exponent is.
///
/// Throws PreconditionViolated if e < r for some prime power (callers may
/// fall back to the naive path) and MissingFactorization if a supplied
/// factorization does not describe n.
Int power_sum_fast(const PowerSumQuery& q);

/// Checks S(N, A*lambda(N)) == S(N, B*phi(N)) with each side evaluated
/// independently. Returns true for every valid input; exists as an
/// executable cross-check of the two exponent families.
bool lambda_phi_power_sums_agree(const Int& n, const Int& a, const Int& b);

} // namespace giuga
