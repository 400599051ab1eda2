#pragma once

#include <string>
#include <utility>
#include <vector>

#include "giuga/arith.hpp"

namespace giuga {

/// One row of the catalog of known Giuga numbers: the number, its published
/// prime factorization, and the published minimal exponent multiplier.
struct KnownGiugaEntry {
    Int n;
    std::vector<Int> factors;   // strictly increasing, all distinct
    Int published_k;
    std::string source_note;
};

/// Per-entry verification outcome. Every check is recomputed from scratch;
/// mismatches are reported, never repaired.
struct CatalogCheck {
    bool product_ok = false;
    bool primes_ok = false;
    bool giuga_ok = false;
    bool fraction_ok = false;     // giuga fraction == 1
    bool derivative_ok = false;   // n' == n + 1
    bool k_min_ok = false;        // computed k_min == published_k
    bool primality_probable = false;

    bool ok() const {
        return product_ok && primes_ok && giuga_ok && fraction_ok &&
               derivative_ok && k_min_ok;
    }
    std::string failure_summary() const;
};

/// The thirteen known Giuga numbers, embedded. Throws CorruptCatalog if the
/// embedded data fails its structural invariants (product, ordering,
/// distinctness).
std::vector<KnownGiugaEntry> load_catalog();

/// Same format from a file: one record per line,
///   n <space> comma-separated-factors <space> published_k [<space> note...]
/// '#' lines and blank lines are skipped. Decimal strings of any length.
std::vector<KnownGiugaEntry> load_catalog_file(const std::string& path);

/// Parses catalog records from text (the file loader's core).
std::vector<KnownGiugaEntry> parse_catalog(const std::string& text);

std::vector<std::pair<KnownGiugaEntry, CatalogCheck>>
verify_catalog(const std::vector<KnownGiugaEntry>& entries);

std::vector<std::pair<KnownGiugaEntry, CatalogCheck>> verify_catalog();

/// The embedded catalog text, byte-identical to data/giuga_catalog.txt.
const std::string& embedded_catalog_text();

} // namespace giuga
