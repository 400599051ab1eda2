#include "giuga/power_sum.hpp"

namespace giuga {

Int power_sum_naive(const PowerSumQuery& q, std::uint64_t cutoff) {
    if (q.n < 2)
        throw Error("power_sum_naive: n must be >= 2");
    if (q.exponent < 1)
        throw Error("power_sum_naive: exponent must be >= 1");
    if (q.n > Int(static_cast<unsigned long>(cutoff)))
        throw ResourceExhausted("power_sum_naive: n = " + to_decimal(q.n) +
                                " exceeds cutoff " + std::to_string(cutoff));
    Int acc = 0;
    for (Int j = 1; j < q.n; ++j)
        acc += mod_pow(j, q.exponent, q.n);
    return acc % q.n;
}

namespace {

// Sum of j^e over units j mod p^r, exponent already reduced mod lambda(p^r).
Int unit_power_sum(const Int& p, const Int& reduced_exp, const Int& prime_power) {
    // For p^r beyond this there is no point iterating phi(p^r) units here.
    static const Int kUnitLoopLimit(10'000'000);
    if (prime_power > kUnitLoopLimit)
        throw ResourceExhausted("power_sum_fast: prime power " + to_decimal(prime_power) +
                                " too large for unit summation");
    Int acc = 0;
    for (Int j = 1; j < prime_power; ++j) {
        if (mpz_divisible_p(j.get_mpz_t(), p.get_mpz_t())) continue;
        acc += mod_pow(j, reduced_exp, prime_power);
    }
    return acc % prime_power;
}

} // namespace

Int power_sum_fast(const PowerSumQuery& q) {
    if (q.n < 2)
        throw Error("power_sum_fast: n must be >= 2");
    if (q.exponent < 1)
        throw Error("power_sum_fast: exponent must be >= 1");

    Factorization local;
    const Factorization* f = nullptr;
    if (q.factorization) {
        if (q.factorization->value != q.n)
            throw MissingFactorization("power_sum_fast: supplied factorization describes " +
                                       to_decimal(q.factorization->value) + ", not " +
                                       to_decimal(q.n));
        f = &*q.factorization;
    } else {
        local = factor(q.n);
        f = &local;
    }

    std::vector<Congruence> residues;
    residues.reserve(f->factors.size());
    for (const auto& pp : f->factors) {
        if (q.exponent < pp.exponent)
            throw PreconditionViolated(
                "power_sum_fast: exponent " + to_decimal(q.exponent) + " below prime-power exponent " +
                std::to_string(pp.exponent) + " of " + to_decimal(pp.prime));
        Int prime_power;
        mpz_pow_ui(prime_power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);

        Int unit_sum;
        if (pp.exponent == 1) {
            // Closed form: full unit-group sum is -1 when (p-1) | e, else 0.
            Int rem = q.exponent % (pp.prime - 1); // p = 2 gives rem = 0
            unit_sum = (rem == 0) ? pp.prime - 1 : Int(0);
        } else {
            Int lam = carmichael_lambda_prime_power(pp.prime, pp.exponent);
            Int reduced = q.exponent % lam;
            if (reduced == 0) reduced = lam;
            unit_sum = unit_power_sum(pp.prime, reduced, prime_power);
        }
        Int cofactor = (f->value / prime_power) % prime_power;
        residues.push_back({(cofactor * unit_sum) % prime_power, prime_power});
    }
    return crt_combine(residues);
}

bool lambda_phi_power_sums_agree(const Int& n, const Int& a, const Int& b) {
    if (n < 2 || a < 1 || b < 1)
        throw Error("lambda_phi_power_sums_agree: need n >= 2, a >= 1, b >= 1");
    Factorization f = factor(n);
    Int lambda_exp = a * carmichael_lambda(f);
    Int phi_exp = b * euler_phi(f);

    auto evaluate = [&](const Int& exponent) {
        PowerSumQuery q{n, exponent, f};
        try {
            return power_sum_fast(q);
        } catch (const PreconditionViolated&) {
            // Exponent below a prime-power exponent (only 2^3 with a*lambda = 2
            // can get here); the literal sum settles it.
            return power_sum_naive(q);
        }
    };
    return evaluate(lambda_exp) == evaluate(phi_exp);
}

} // namespace giuga
