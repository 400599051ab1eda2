#include "giuga/bernoulli.hpp"

namespace giuga {

const Rat& BernoulliTable::at(unsigned i) const {
    if (i > max_index)
        throw IndexTooLarge("Bernoulli index " + std::to_string(i) +
                            " beyond table max " + std::to_string(max_index));
    return values[i];
}

Int von_staudt_clausen_denominator(unsigned m) {
    if (m < 2 || m % 2 != 0)
        throw Error("von_staudt_clausen_denominator: index must be even and >= 2");
    Int result = 1;
    for (std::uint32_t q : small_primes()) {
        if (q > m + 1) break;
        if (m % (q - 1) == 0) result *= q;
    }
    return result;
}

BernoulliTable bernoulli_upto(unsigned m, unsigned cap) {
    if (m > cap)
        throw ResourceExhausted("bernoulli_upto: index " + std::to_string(m) +
                                " exceeds cap " + std::to_string(cap));
    BernoulliTable table;
    table.max_index = m;
    table.values.assign(m + 1, Rat(0));
    table.values[0] = Rat(1);
    if (m >= 1) table.values[1] = Rat(-1, 2);

    // sum_{j=0}^{k} C(k+1, j) B_j = 0, odd rows >= 3 stay zero.
    for (unsigned k = 2; k <= m; ++k) {
        if (k % 2 == 1) continue;
        Rat sum(0);
        Int binom = 1; // C(k+1, 0)
        for (unsigned j = 0; j < k; ++j) {
            if (j == 0 || j == 1 || j % 2 == 0)
                sum += Rat(binom) * table.values[j];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        table.values[k] = -sum / Rat(k + 1);
        table.values[k].canonicalize();
        if (table.values[k].get_den() != von_staudt_clausen_denominator(k))
            throw Error("bernoulli_upto: denominator self-check failed at index " +
                        std::to_string(k));
    }
    return table;
}

namespace {

Int residue_of_n_times_bernoulli(const Int& n, const Rat& b) {
    Rat q = Rat(n) * b;
    q.canonicalize();
    return rational_mod(q, n);
}

} // namespace

bool agoh_giuga_check(const Factorization& f, const BernoulliTable& table) {
    if (!f.is_composite())
        throw Error("agoh_giuga_check: n must be composite");
    Int phi = euler_phi(f);
    if (phi > table.max_index)
        throw IndexTooLarge("agoh_giuga_check: phi(n) = " + to_decimal(phi) +
                            " beyond Bernoulli table max " + std::to_string(table.max_index));
    unsigned index = static_cast<unsigned>(phi.get_ui());
    return residue_of_n_times_bernoulli(f.value, table.at(index)) == f.value - 1;
}

bool agoh_giuga_check(const Factorization& f, unsigned cap) {
    Int phi = euler_phi(f);
    if (phi > cap)
        throw IndexTooLarge("agoh_giuga_check: phi(n) = " + to_decimal(phi) +
                            " beyond cap " + std::to_string(cap));
    return agoh_giuga_check(f, bernoulli_upto(static_cast<unsigned>(phi.get_ui()), cap));
}

Int agoh_primality_residue(const Int& n, const BernoulliTable& table) {
    if (n < 2)
        throw Error("agoh_primality_residue: n must be >= 2");
    Int index = n - 1;
    if (index > table.max_index)
        throw IndexTooLarge("agoh_primality_residue: index " + to_decimal(index) +
                            " beyond Bernoulli table max " + std::to_string(table.max_index));
    return residue_of_n_times_bernoulli(n, table.at(static_cast<unsigned>(index.get_ui())));
}

Int agoh_primality_residue(const Int& n, unsigned cap) {
    if (n < 2)
        throw Error("agoh_primality_residue: n must be >= 2");
    Int index = n - 1;
    if (index > cap)
        throw IndexTooLarge("agoh_primality_residue: index " + to_decimal(index) +
                            " beyond cap " + std::to_string(cap));
    return agoh_primality_residue(n, bernoulli_upto(static_cast<unsigned>(index.get_ui()), cap));
}

} // namespace giuga
