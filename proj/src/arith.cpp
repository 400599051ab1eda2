#include "giuga/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace giuga {

Int int_from_decimal(const std::string& text) {
    if (text.empty())
        throw Error("empty integer literal");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size())
        throw Error("bad integer literal: " + text);
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw Error("bad integer literal: " + text);
    return Int(text, 10);
}

std::string to_decimal(const Int& v) {
    return v.get_str(10);
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

bool Factorization::is_square_free() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

unsigned Factorization::max_exponent() const {
    unsigned m = 0;
    for (const auto& pp : factors) m = std::max(m, pp.exponent);
    return m;
}

bool Factorization::valid() const {
    Int prod = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& pp = factors[i];
        if (pp.exponent < 1) return false;
        if (i > 0 && factors[i - 1].prime >= pp.prime) return false;
        if (!is_prime(pp.prime)) return false;
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        prod *= pe;
    }
    return prod == value && value >= 1;
}

// ---------------------------------------------------------------------------
// Small primes
// ---------------------------------------------------------------------------

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> sieve(limit, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

namespace {

// First thirteen primes; exhaustive as Miller-Rabin bases for every
// n < 3'317'044'064'679'887'385'961'981 (Sorenson & Webster).
constexpr unsigned long kFixedBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(const Int& n, const Int& base, const Int& d, unsigned long twos) {
    Int a = base % n;
    if (a == 0) return true; // base divisible by n carries no information
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < twos; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

const Int& deterministic_primality_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

Primality primality(const Int& n) {
    if (n < 2) return Primality::composite;
    for (unsigned long p : kFixedBases) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return n == p ? Primality::prime : Primality::composite;
    }
    // n odd, > 41 here: decompose n-1 = d * 2^twos
    Int d = n - 1;
    unsigned long twos = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);

    for (unsigned long b : kFixedBases)
        if (!strong_probable_prime(n, Int(b), d, twos))
            return Primality::composite;
    if (n < deterministic_primality_bound())
        return Primality::prime;

    // 51 extra pseudorandom bases (64 rounds total): error < 4^-64 = 2^-128.
    // Seeded from n so results are reproducible.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(Int(n ^ Int("0x9e3779b97f4a7c15")));
    for (int round = 0; round < 51; ++round) {
        Int a = rng.get_z_range(n - 3) + 2;
        if (!strong_probable_prime(n, a, d, twos))
            return Primality::composite;
    }
    return Primality::probable_prime;
}

// ---------------------------------------------------------------------------
// Factoring
// ---------------------------------------------------------------------------

const FactorConfig& default_factor_config() {
    static const FactorConfig cfg = [] {
        FactorConfig c;
        if (const char* env = std::getenv("GIUGA_FACTOR_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) c.rho_budget = v;
        }
        return c;
    }();
    return cfg;
}

namespace {

// Brent's cycle variant of Pollard rho with x^2 + c. Returns a nontrivial
// divisor of n, or 0 if the budget ran out. May return n (bad cycle);
// callers retry with the next c.
Int rho_brent(const Int& n, unsigned long c, std::uint64_t& budget) {
    const unsigned long batch = 128;
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) {
            y = (y * y + c) % n;
            if (budget == 0) return 0;
            --budget;
        }
        for (unsigned long k = 0; k < r && g == 1; k += batch) {
            ys = y;
            unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = (q * abs(x - y)) % n;
                if (budget == 0) return 0;
                --budget;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            Int diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (budget == 0) return 0;
            --budget;
        } while (g == 1);
    }
    return g;
}

void factor_hard(const Int& n, std::vector<Int>& primes_out, std::uint64_t& budget,
                 unsigned long seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes_out.push_back(n);
        return;
    }
    for (unsigned long c = seed;; ++c) {
        if (budget == 0)
            throw ResourceExhausted("factoring effort budget exhausted at cofactor " +
                                    to_decimal(n));
        Int d = rho_brent(n, c, budget);
        if (d == 0)
            throw ResourceExhausted("factoring effort budget exhausted at cofactor " +
                                    to_decimal(n));
        if (d == n || d == 1) continue;
        factor_hard(d, primes_out, budget, seed);
        factor_hard(n / d, primes_out, budget, seed);
        return;
    }
}

Factorization from_sorted_primes(Int value, std::vector<Int> primes) {
    std::sort(primes.begin(), primes.end());
    Factorization f;
    f.value = std::move(value);
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return f;
}

} // namespace

Factorization factor(const Int& n) {
    return factor(n, default_factor_config());
}

Factorization factor(const Int& n, const FactorConfig& cfg) {
    if (n < 1)
        throw Error("factor: n must be >= 1");
    std::vector<Int> primes;
    Int rem = n;
    for (std::uint32_t p : small_primes()) {
        if (p >= cfg.trial_bound) break;
        Int p2 = Int(p) * p;
        if (p2 > rem) break;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            primes.push_back(Int(p));
            rem /= p;
        }
    }
    if (rem > 1) {
        if (is_prime(rem)) {
            primes.push_back(rem);
        } else {
            std::uint64_t budget = cfg.rho_budget;
            factor_hard(rem, primes, budget, static_cast<unsigned long>(cfg.seed & 0xffff) + 1);
        }
    }
    return from_sorted_primes(n, std::move(primes));
}

Factorization factorization_from_parts(const Int& value, std::vector<Int> parts) {
    Int prod = 1;
    for (const Int& p : parts) {
        if (p < 2 || !is_prime(p))
            throw BadFactorHint("supplied factor " + to_decimal(p) + " is not prime");
        prod *= p;
    }
    if (prod != value)
        throw BadFactorHint("supplied factors multiply to " + to_decimal(prod) +
                            ", expected " + to_decimal(value));
    return from_sorted_primes(value, std::move(parts));
}

// ---------------------------------------------------------------------------
// Multiplicative functions
// ---------------------------------------------------------------------------

Int euler_phi(const Factorization& f) {
    Int result = 1;
    for (const auto& pp : f.factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
        result *= pe * (pp.prime - 1);
    }
    return result;
}

Int carmichael_lambda_prime_power(const Int& p, unsigned r) {
    if (p == 2) {
        if (r == 1) return 1;
        if (r == 2) return 2;
        Int v;
        mpz_ui_pow_ui(v.get_mpz_t(), 2, r - 2);
        return v;
    }
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), r - 1);
    return pe * (p - 1);
}

Int carmichael_lambda(const Factorization& f) {
    Int result = 1;
    for (const auto& pp : f.factors) {
        Int part = carmichael_lambda_prime_power(pp.prime, pp.exponent);
        mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), part.get_mpz_t());
    }
    return result;
}

Int arithmetic_derivative(const Factorization& f) {
    Int result = 0;
    for (const auto& pp : f.factors)
        result += pp.exponent * (f.value / pp.prime);
    return result;
}

// ---------------------------------------------------------------------------
// Modular arithmetic
// ---------------------------------------------------------------------------

Int mod_pow(const Int& base, const Int& exponent, const Int& modulus) {
    if (modulus < 1)
        throw Error("mod_pow: modulus must be >= 1");
    if (exponent < 0)
        throw Error("mod_pow: exponent must be >= 0");
    Int result;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return result;
}

Int crt_combine(std::span<const Congruence> parts) {
    Int x = 0, modulus = 1;
    for (const auto& part : parts) {
        if (part.modulus < 1)
            throw Error("crt_combine: modulus must be >= 1");
        if (part.modulus == 1) continue;
        Int r;
        mpz_mod(r.get_mpz_t(), part.residue.get_mpz_t(), part.modulus.get_mpz_t());
        Int inv;
        Int m = modulus % part.modulus;
        if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), part.modulus.get_mpz_t()) == 0)
            throw NonCoprimeModuli("crt_combine: modulus " + to_decimal(part.modulus) +
                                   " shares a factor with the others");
        Int delta = ((r - x) * inv) % part.modulus;
        if (delta < 0) delta += part.modulus;
        x += modulus * delta;
        modulus *= part.modulus;
    }
    return x;
}

Int rational_mod(const Rat& q, const Int& n) {
    if (n < 2)
        throw Error("rational_mod: modulus must be >= 2");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), n.get_mpz_t()) == 0)
        throw DenominatorNotInvertible("denominator " + to_decimal(q.get_den()) +
                                       " not invertible mod " + to_decimal(n));
    Int result;
    mpz_mod(result.get_mpz_t(), Int(q.get_num() * inv).get_mpz_t(), n.get_mpz_t());
    return result;
}

} // namespace giuga
