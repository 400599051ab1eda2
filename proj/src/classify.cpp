#include "giuga/classify.hpp"

#include "giuga/power_sum.hpp"

namespace giuga {

bool is_giuga(const Factorization& f) {
    if (!f.is_composite() || !f.is_square_free())
        return false;
    for (const auto& pp : f.factors) {
        Int cofactor_minus_1 = f.value / pp.prime - 1;
        if (!mpz_divisible_p(cofactor_minus_1.get_mpz_t(), pp.prime.get_mpz_t()))
            return false;
    }
    return true;
}

Rat giuga_fraction(const Factorization& f) {
    if (f.value < 2)
        throw Error("giuga_fraction: n must be >= 2");
    Rat acc(0);
    for (const auto& pp : f.factors)
        acc += Rat(1, pp.prime);
    acc -= Rat(1, f.value);
    acc.canonicalize();
    return acc;
}

bool carmichael_by_korselt(const Factorization& f) {
    if (!f.is_composite() || !f.is_square_free())
        return false;
    Int n_minus_1 = f.value - 1;
    for (const auto& pp : f.factors) {
        Int p_minus_1 = pp.prime - 1;
        if (!mpz_divisible_p(n_minus_1.get_mpz_t(), p_minus_1.get_mpz_t()))
            return false;
    }
    return true;
}

bool carmichael_by_lambda(const Factorization& f) {
    if (!f.is_composite())
        return false;
    Int lambda = carmichael_lambda(f);
    Int n_minus_1 = f.value - 1;
    return mpz_divisible_p(n_minus_1.get_mpz_t(), lambda.get_mpz_t()) != 0;
}

bool is_carmichael(const Factorization& f) {
    bool korselt = carmichael_by_korselt(f);
    bool lambda = carmichael_by_lambda(f);
    if (korselt != lambda)
        throw Error("is_carmichael: Korselt and lambda criteria disagree on " +
                    to_decimal(f.value)); // unreachable unless a criterion is broken
    return lambda;
}

Int k_min(const Factorization& f) {
    if (!is_giuga(f))
        throw NotGiuga("k_min: " + to_decimal(f.value) + " is not a Giuga number");
    Int lambda = carmichael_lambda(f);
    Int g;
    Int n_minus_1 = f.value - 1;
    mpz_gcd(g.get_mpz_t(), lambda.get_mpz_t(), n_minus_1.get_mpz_t());
    return lambda / g;
}

bool in_gk(const Factorization& f, const Int& k) {
    if (k < 1 || !is_giuga(f))
        return false;
    Int km = k_min(f);
    return mpz_divisible_p(k.get_mpz_t(), km.get_mpz_t()) != 0;
}

bool gk_congruence_holds(const Factorization& f, const Int& k) {
    if (k < 1 || f.value < 2)
        return false;
    PowerSumQuery q{f.value, k * (f.value - 1), f};
    return power_sum_fast(q) == f.value - 1;
}

bool wong_conditions(const Factorization& f, const Int& k) {
    if (k < 1 || !f.is_square_free() || f.value < 2)
        return false;
    for (const auto& pp : f.factors) {
        Int cofactor_minus_1 = f.value / pp.prime - 1;
        if (!mpz_divisible_p(cofactor_minus_1.get_mpz_t(), pp.prime.get_mpz_t()))
            return false;
        Int scaled = k * cofactor_minus_1;
        Int p_minus_1 = pp.prime - 1;
        if (p_minus_1 > 0 && !mpz_divisible_p(scaled.get_mpz_t(), p_minus_1.get_mpz_t()))
            return false;
    }
    return true;
}

KSpec k_set(const Factorization& f) {
    if (f.value < 2)
        throw Error("k_set: n must be >= 2");
    if (!is_giuga(f))
        return KSpec{KSpec::Kind::empty, Int(0)};
    return KSpec{KSpec::Kind::all_multiples_of, k_min(f)};
}

GiugaReport classify(const Int& n, const std::optional<std::vector<Int>>& known_factors) {
    if (n < 2)
        throw Error("classify: n must be >= 2");
    Factorization f =
        known_factors ? factorization_from_parts(n, *known_factors) : factor(n);

    GiugaReport report;
    report.n = n;
    report.is_composite = f.is_composite();
    report.is_square_free = f.is_square_free();
    report.giuga_by_definition = is_giuga(f);
    report.giuga_fraction = giuga_fraction(f);
    report.carmichael_by_korselt = carmichael_by_korselt(f);
    report.carmichael_by_lambda = carmichael_by_lambda(f);
    if (report.carmichael_by_korselt != report.carmichael_by_lambda)
        throw Error("classify: Carmichael criteria disagree on " + to_decimal(n));
    if (report.giuga_by_definition)
        report.k_min = k_min(f);
    report.is_g1_counterexample =
        report.giuga_by_definition && report.carmichael_by_lambda;
    for (const auto& pp : f.factors)
        if (primality(pp.prime) == Primality::probable_prime)
            report.primality_probable = true;

    // Small-n self-check: the definition flag must match the literal phi- and
    // lambda-exponent congruences.
    if (report.is_composite && n <= 10'000) {
        Int phi = euler_phi(f);
        Int lambda = carmichael_lambda(f);
        bool phi_route = power_sum_naive({n, phi, f}) == n - 1;
        bool lambda_route = power_sum_naive({n, lambda, f}) == n - 1;
        if (phi_route != report.giuga_by_definition ||
            lambda_route != report.giuga_by_definition)
            throw Error("classify: characterization mismatch on " + to_decimal(n));
    }

    report.factorization = std::move(f);
    return report;
}

} // namespace giuga
