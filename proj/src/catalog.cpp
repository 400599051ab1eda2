#include "giuga/catalog.hpp"

#include <fstream>
#include <sstream>

#include "giuga/classify.hpp"

namespace giuga {

namespace {

// n, comma-separated factors, published k, free-text note.
const char kEmbeddedCatalog[] =
    R"(# Known Giuga numbers (OEIS A007850) with prime factorizations and
# minimal exponent multipliers k = lambda(n)/gcd(lambda(n), n-1).
30 2,3,5 4
858 2,3,11,13 60
1722 2,3,7,41 120 one source set listing prints 1772, which is 4*443 and not square-free; 1722 is the verified member
66198 2,3,11,17,59 2320
2214408306 2,3,11,23,31,47057 1552848
24423128562 2,3,7,43,3041,4447 10080
432749205173838 2,3,7,59,163,1381,775807 139714902540
14737133470010574 2,3,7,71,103,67213,713863 93294624780
550843391309130318 2,3,7,71,103,61559,29133437 228657996794220
244197000982499715087866346 2,3,11,23,31,47137,28282147,3892535183 4756736241732916394976
554079914617070801288578559178 2,3,11,23,31,47059,2259696349,110725121051 20024071474861042488900
1910667181420507984555759916338506 2,3,7,43,1831,138683,2861051,1456230512169437 2176937111336664570375832140 source elides the factors between 43 and 1831; list restored and product-verified
4200017949707747062038711509670656632404195753751630609228764416142557211582098432545190323474818 2,3,11,23,31,47059,2217342227,1729101023519,8491659218261819498490029296021,58254480569119734123541298976556403 15366743578393906356665002406454800354974137359272445859047945613961394951904884493965220 source omits the factor 31 and prints the last factor with a stray leading digit; list restored and product-verified
)";

void check_entry_invariants(const KnownGiugaEntry& e, std::size_t line_no) {
    auto fail = [&](const std::string& what) {
        throw CorruptCatalog("catalog record " + std::to_string(line_no) + ": " + what);
    };
    if (e.factors.empty()) fail("no factors");
    Int prod = 1;
    for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (e.factors[i] < 2) fail("factor below 2");
        if (i > 0 && e.factors[i - 1] >= e.factors[i])
            fail("factors not strictly increasing");
        prod *= e.factors[i];
    }
    if (prod != e.n)
        fail("factors multiply to " + to_decimal(prod) + ", not " + to_decimal(e.n));
    if (e.published_k < 1) fail("published k below 1");
}

} // namespace

const std::string& embedded_catalog_text() {
    static const std::string text(kEmbeddedCatalog);
    return text;
}

std::vector<KnownGiugaEntry> parse_catalog(const std::string& text) {
    std::vector<KnownGiugaEntry> entries;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string n_text, factors_text, k_text;
        if (!(fields >> n_text >> factors_text >> k_text))
            throw CorruptCatalog("catalog line " + std::to_string(line_no) +
                                 ": expected n, factors, k");
        KnownGiugaEntry entry;
        try {
            entry.n = int_from_decimal(n_text);
            std::istringstream flist(factors_text);
            std::string part;
            while (std::getline(flist, part, ','))
                entry.factors.push_back(int_from_decimal(part));
            entry.published_k = int_from_decimal(k_text);
        } catch (const Error& e) {
            throw CorruptCatalog("catalog line " + std::to_string(line_no) + ": " + e.what());
        }
        std::getline(fields >> std::ws, entry.source_note);
        check_entry_invariants(entry, line_no);
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<KnownGiugaEntry> load_catalog() {
    auto entries = parse_catalog(embedded_catalog_text());
    if (entries.size() != 13)
        throw CorruptCatalog("embedded catalog must hold exactly 13 entries, found " +
                             std::to_string(entries.size()));
    return entries;
}

std::vector<KnownGiugaEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CorruptCatalog("cannot open catalog file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

std::string CatalogCheck::failure_summary() const {
    if (ok()) return "";
    std::string out;
    auto add = [&out](bool good, const char* what) {
        if (!good) {
            if (!out.empty()) out += ", ";
            out += what;
        }
    };
    add(product_ok, "product");
    add(primes_ok, "primality");
    add(giuga_ok, "giuga test");
    add(fraction_ok, "fraction");
    add(derivative_ok, "derivative");
    add(k_min_ok, "k_min");
    return out;
}

std::vector<std::pair<KnownGiugaEntry, CatalogCheck>>
verify_catalog(const std::vector<KnownGiugaEntry>& entries) {
    std::vector<std::pair<KnownGiugaEntry, CatalogCheck>> out;
    out.reserve(entries.size());
    for (const auto& entry : entries) {
        CatalogCheck check;
        Int prod = 1;
        for (const Int& p : entry.factors) prod *= p;
        check.product_ok = prod == entry.n;

        check.primes_ok = true;
        for (const Int& p : entry.factors) {
            switch (primality(p)) {
                case Primality::composite: check.primes_ok = false; break;
                case Primality::probable_prime: check.primality_probable = true; break;
                case Primality::prime: break;
            }
        }

        if (check.product_ok && check.primes_ok) {
            Factorization f = factorization_from_parts(entry.n, entry.factors);
            check.giuga_ok = is_giuga(f);
            check.fraction_ok = giuga_fraction(f) == Rat(1);
            check.derivative_ok = arithmetic_derivative(f) == entry.n + 1;
            check.k_min_ok = check.giuga_ok && k_min(f) == entry.published_k;
        }
        out.emplace_back(entry, check);
    }
    return out;
}

std::vector<std::pair<KnownGiugaEntry, CatalogCheck>> verify_catalog() {
    return verify_catalog(load_catalog());
}

} // namespace giuga
