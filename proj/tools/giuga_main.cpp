// giuga - command line front end for the Giuga-number toolkit.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "giuga/arith.hpp"
#include "giuga/bernoulli.hpp"
#include "giuga/catalog.hpp"
#include "giuga/classify.hpp"
#include "giuga/power_sum.hpp"
#include "giuga/search.hpp"

using json = nlohmann::json;
using namespace giuga;

namespace {

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }
};

json make_record(const std::string& command, json input, json result, long long timing_ms,
                 const std::vector<std::string>& warnings) {
    return json{{"schema_version", "1"},
                {"command", command},
                {"input", std::move(input)},
                {"result", std::move(result)},
                {"timing_ms", timing_ms},
                {"warnings", warnings}};
}

void emit(const json& record) { std::cout << record.dump() << "\n"; }

std::string rat_to_string(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::vector<Int> parse_factor_csv(const std::string& csv) {
    std::vector<Int> out;
    std::istringstream in(csv);
    std::string part;
    while (std::getline(in, part, ','))
        out.push_back(int_from_decimal(part));
    if (out.empty())
        throw Error("empty factor list");
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string kset_body(const KSpec& spec) {
    if (spec.kind == KSpec::Kind::empty) return "∅";
    std::string body = "{ " + to_decimal(spec.k_min) + "t : t >= 1 }";
    if (spec.all_naturals())
        body += "  (every positive integer: counterexample territory)";
    return body;
}

std::string kset_text(const Int& n, const KSpec& spec) {
    return "K_" + to_decimal(n) + " = " + kset_body(spec);
}

json kset_json(const KSpec& spec) {
    if (spec.kind == KSpec::Kind::empty)
        return json{{"kind", "empty"}};
    return json{{"kind", "all_multiples_of"},
                {"k_min", to_decimal(spec.k_min)},
                {"all_naturals", spec.all_naturals()}};
}

std::string residue_text(const Int& residue, const Int& modulus) {
    std::string s = to_decimal(residue);
    if (residue == modulus - 1) s += "  (≡ -1 mod " + to_decimal(modulus) + ")";
    return s;
}

// ---------------------------------------------------------------------------

int cmd_classify(const std::string& n_text, const std::string& factors_csv, bool as_json) {
    Stopwatch sw;
    std::vector<std::string> warnings;
    Int n = int_from_decimal(n_text);
    if (n < 2)
        throw Error("classify: n must be >= 2");
    std::optional<std::vector<Int>> hints;
    if (!factors_csv.empty()) hints = parse_factor_csv(factors_csv);

    GiugaReport report = classify(n, hints);
    KSpec kspec = k_set(report.factorization);
    if (report.primality_probable)
        warnings.push_back("some prime factor exceeds the deterministic primality bound; "
                           "primality is probabilistic (error < 2^-128)");

    if (as_json) {
        json factors = json::array();
        for (const auto& pp : report.factorization.factors)
            factors.push_back({{"prime", to_decimal(pp.prime)}, {"exponent", pp.exponent}});
        json result{{"n", to_decimal(report.n)},
                    {"composite", report.is_composite},
                    {"square_free", report.is_square_free},
                    {"giuga", report.giuga_by_definition},
                    {"giuga_fraction", rat_to_string(report.giuga_fraction)},
                    {"carmichael_korselt", report.carmichael_by_korselt},
                    {"carmichael_lambda", report.carmichael_by_lambda},
                    {"k_min", report.k_min ? json(to_decimal(*report.k_min)) : json(nullptr)},
                    {"k_set", kset_json(kspec)},
                    {"g1_counterexample", report.is_g1_counterexample},
                    {"primality_probable", report.primality_probable},
                    {"factors", factors}};
        json input{{"n", n_text}};
        if (!factors_csv.empty()) input["factors"] = factors_csv;
        emit(make_record("classify", input, result, sw.ms(), warnings));
        return 0;
    }

    std::string factor_line;
    for (const auto& pp : report.factorization.factors) {
        if (!factor_line.empty()) factor_line += " * ";
        factor_line += to_decimal(pp.prime);
        if (pp.exponent > 1) factor_line += "^" + std::to_string(pp.exponent);
    }
    std::cout << "n                    " << to_decimal(report.n) << "\n"
              << "factors              " << factor_line << "\n"
              << "composite            " << yes_no(report.is_composite) << "\n"
              << "square-free          " << yes_no(report.is_square_free) << "\n"
              << "giuga                " << yes_no(report.giuga_by_definition) << "\n"
              << "giuga fraction       " << rat_to_string(report.giuga_fraction) << "\n"
              << "carmichael (Korselt) " << yes_no(report.carmichael_by_korselt) << "\n"
              << "carmichael (lambda)  " << yes_no(report.carmichael_by_lambda) << "\n"
              << "k_min                "
              << (report.k_min ? to_decimal(*report.k_min) : std::string("-")) << "\n"
              << "K_n                  " << kset_body(kspec) << "\n"
              << "G_1 counterexample   " << yes_no(report.is_g1_counterexample) << "\n"
              << "primality            "
              << (report.primality_probable ? "probable" : "deterministic") << "\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    return 0;
}

int cmd_powersum(const std::string& n_text, const std::string& e_text,
                 const std::string& method, bool as_json) {
    Stopwatch sw;
    std::vector<std::string> warnings;
    Int n = int_from_decimal(n_text);
    Int e = int_from_decimal(e_text);
    if (n < 2 || e < 1)
        throw Error("powersum: need n >= 2 and exponent >= 1");

    std::optional<Int> naive_value, fast_value;
    if (method == "naive" || method == "both")
        naive_value = power_sum_naive({n, e, std::nullopt});
    if (method == "fast" || method == "both") {
        try {
            fast_value = power_sum_fast({n, e, std::nullopt});
        } catch (const PreconditionViolated& ex) {
            warnings.push_back(std::string(ex.what()) + "; fell back to the literal sum");
            fast_value = power_sum_naive({n, e, std::nullopt});
        }
    }

    bool agree = true;
    if (naive_value && fast_value) agree = *naive_value == *fast_value;
    Int shown = fast_value ? *fast_value : *naive_value;

    if (as_json) {
        json residues = json::object();
        if (naive_value) residues["naive"] = to_decimal(*naive_value);
        if (fast_value) residues["fast"] = to_decimal(*fast_value);
        json result{{"residues", residues},
                    {"agree", agree},
                    {"is_minus_one", shown == n - 1}};
        emit(make_record("powersum",
                         json{{"n", n_text}, {"exponent", e_text}, {"method", method}}, result,
                         sw.ms(), warnings));
    } else {
        if (naive_value)
            std::cout << (method == "both" ? "naive: " : "") << residue_text(*naive_value, n)
                      << "\n";
        if (fast_value)
            std::cout << (method == "both" ? "fast:  " : "") << residue_text(*fast_value, n)
                      << "\n";
        if (method == "both")
            std::cout << "agree: " << (agree ? "true" : "false") << "\n";
        for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    }
    if (!agree) {
        std::cerr << "error: naive and fast power sums disagree\n";
        return 5;
    }
    return 0;
}

int cmd_kset(const std::string& n_text, bool as_json) {
    Stopwatch sw;
    Int n = int_from_decimal(n_text);
    if (n < 2)
        throw Error("kset: n must be >= 2");
    KSpec spec = k_set(factor(n));
    if (as_json) {
        emit(make_record("kset", json{{"n", n_text}},
                         json{{"n", to_decimal(n)}, {"k_set", kset_json(spec)}}, sw.ms(), {}));
    } else {
        std::cout << kset_text(n, spec) << "\n";
    }
    return 0;
}

int cmd_search(const std::string& bound_text, const std::string& k_text,
               const std::string& checkpoint, unsigned jobs, bool as_json) {
    Stopwatch sw;
    Int bound_int = int_from_decimal(bound_text);
    if (bound_int < 2 || !bound_int.fits_ulong_p())
        throw Error("search: bound must be an integer in [2, 2^64)");
    std::uint64_t bound = bound_int.get_ui();

    std::optional<Int> k;
    if (!k_text.empty()) {
        k = int_from_decimal(k_text);
        if (*k < 1)
            throw Error("search: k must be >= 1");
    }

    SearchOptions opts;
    opts.jobs = jobs;
    opts.checkpoint_path = checkpoint;
    auto matches_filter = [&](const GiugaHit& hit) {
        return !k || mpz_divisible_p(k->get_mpz_t(), hit.k_min.get_mpz_t());
    };
    opts.on_hit = [&](const GiugaHit& hit) {
        if (!matches_filter(hit)) return;
        if (as_json) {
            emit(make_record("search.hit", json{{"bound", bound_text}},
                             json{{"n", std::to_string(hit.n)},
                                  {"k_min", to_decimal(hit.k_min)}},
                             sw.ms(), {}));
        } else {
            std::cout << hit.n << "  k_min=" << to_decimal(hit.k_min) << "\n";
        }
    };

    SearchResult result = search_giuga(bound, opts);
    std::size_t shown = 0;
    for (const auto& hit : result.hits)
        if (matches_filter(hit)) ++shown;

    if (as_json) {
        json input{{"bound", bound_text}};
        if (k) input["k"] = k_text;
        if (!checkpoint.empty()) input["checkpoint"] = checkpoint;
        json hits = json::array();
        for (const auto& hit : result.hits)
            if (matches_filter(hit))
                hits.push_back({{"n", std::to_string(hit.n)}, {"k_min", to_decimal(hit.k_min)}});
        emit(make_record("search", input,
                         json{{"bound", std::to_string(result.bound)},
                              {"hits", hits},
                              {"scanned", result.scanned},
                              {"frontier", result.frontier},
                              {"complete", result.complete}},
                         sw.ms(), {}));
    } else {
        std::cout << "scanned " << result.scanned << " integers in [2, " << result.bound
                  << "]; " << shown << (k ? " member(s) of G_" + to_decimal(*k) : " hit(s)")
                  << "; " << (result.complete ? "complete" : "interrupted") << "\n";
    }
    return 0;
}

int cmd_verify_catalog(const std::string& catalog_path, bool as_json) {
    Stopwatch sw;
    auto entries = catalog_path.empty() ? load_catalog() : load_catalog_file(catalog_path);
    auto results = verify_catalog(entries);
    std::size_t passed = 0;
    for (const auto& [entry, check] : results) {
        if (check.ok()) ++passed;
        if (as_json) {
            json result{{"n", to_decimal(entry.n)},
                        {"published_k", to_decimal(entry.published_k)},
                        {"ok", check.ok()},
                        {"checks",
                         json{{"product", check.product_ok},
                              {"primality", check.primes_ok},
                              {"giuga", check.giuga_ok},
                              {"fraction", check.fraction_ok},
                              {"derivative", check.derivative_ok},
                              {"k_min", check.k_min_ok}}},
                        {"primality_probable", check.primality_probable},
                        {"source_note", entry.source_note}};
            std::vector<std::string> warnings;
            if (check.primality_probable)
                warnings.push_back("factor primality is probabilistic for this entry");
            emit(make_record("verify-catalog.entry", json::object(), result, sw.ms(), warnings));
        } else {
            std::string n_str = to_decimal(entry.n);
            if (n_str.size() > 40) n_str = n_str.substr(0, 37) + "...";
            std::cout << n_str << std::string(n_str.size() < 42 ? 42 - n_str.size() : 1, ' ')
                      << (check.ok() ? "ok" : "FAIL: " + check.failure_summary()) << "\n";
        }
    }
    if (!as_json)
        std::cout << passed << "/" << results.size() << " entries verified\n";
    else
        emit(make_record("verify-catalog", json::object(),
                         json{{"entries", results.size()}, {"passed", passed}}, sw.ms(), {}));
    return passed == results.size() ? 0 : 1;
}

int cmd_bernoulli(const std::string& n_text, const std::string& mode, bool as_json) {
    Stopwatch sw;
    std::vector<std::string> warnings;
    Int n = int_from_decimal(n_text);
    if (n < 2)
        throw Error("bernoulli: n must be >= 2");

    Int index;
    std::string status = "defined";
    std::optional<Int> residue;
    bool passes = false;

    if (mode == "giuga") {
        Factorization f = factor(n);
        if (!f.is_composite())
            throw Error("bernoulli --mode giuga expects composite n");
        index = euler_phi(f);
        if (index > kBernoulliCap)
            throw IndexTooLarge("phi(n) = " + to_decimal(index) + " beyond cap " +
                                std::to_string(kBernoulliCap));
        BernoulliTable table = bernoulli_upto(static_cast<unsigned>(index.get_ui()));
        try {
            Rat q = Rat(n) * table.at(static_cast<unsigned>(index.get_ui()));
            q.canonicalize();
            residue = rational_mod(q, n);
            passes = *residue == n - 1;
        } catch (const DenominatorNotInvertible&) {
            status = "undefined";
            warnings.push_back("denominator of n*B_phi(n) shares a factor with n; "
                               "congruence undefined");
        }
    } else { // agoh
        index = n - 1;
        if (index > kBernoulliCap)
            throw IndexTooLarge("n-1 = " + to_decimal(index) + " beyond cap " +
                                std::to_string(kBernoulliCap));
        try {
            residue = agoh_primality_residue(n);
            passes = *residue == n - 1;
        } catch (const DenominatorNotInvertible&) {
            status = "undefined";
            warnings.push_back("denominator of n*B_{n-1} shares a factor with n; "
                               "congruence undefined");
        }
    }

    if (as_json) {
        json result{{"n", to_decimal(n)},
                    {"mode", mode},
                    {"bernoulli_index", to_decimal(index)},
                    {"status", status},
                    {"residue", residue ? json(to_decimal(*residue)) : json(nullptr)},
                    {"is_minus_one", passes}};
        emit(make_record("bernoulli", json{{"n", n_text}, {"mode", mode}}, result, sw.ms(),
                         warnings));
    } else {
        std::cout << "index: B_" << to_decimal(index) << "\n";
        if (residue) {
            std::cout << to_decimal(n) << " * B_" << to_decimal(index) << " mod "
                      << to_decimal(n) << " = " << residue_text(*residue, n) << "\n"
                      << (mode == "giuga" ? std::string("giuga congruence: ")
                                          : std::string("prime-residue congruence: "))
                      << (passes ? "pass" : "fail") << "\n";
        } else {
            std::cout << "status: undefined\n";
        }
        for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Giuga number toolkit: classification, generalized power-sum congruences, "
                 "K_n sets, catalog verification, range search, Bernoulli checks"};
    app.require_subcommand(1);

    std::string n_text, e_text, factors_csv, method = "fast", mode = "giuga";
    std::string bound_text, k_text, checkpoint, catalog_path;
    unsigned jobs = 0;
    bool as_json = false;

    auto* classify_cmd = app.add_subcommand("classify", "Classify an integer");
    classify_cmd->add_option("n", n_text, "integer to classify (decimal)")->required();
    classify_cmd->add_option("--factors", factors_csv, "comma-separated prime factorization hint");
    classify_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* powersum_cmd = app.add_subcommand("powersum", "Evaluate sum of j^e for j in [1, n) mod n");
    powersum_cmd->add_option("n", n_text, "modulus (decimal)")->required();
    powersum_cmd->add_option("e", e_text, "exponent (decimal)")->required();
    powersum_cmd->add_option("--method", method, "naive | fast | both")
        ->check(CLI::IsMember({"naive", "fast", "both"}));
    powersum_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* kset_cmd = app.add_subcommand("kset", "Describe K_n");
    kset_cmd->add_option("n", n_text, "integer (decimal)")->required();
    kset_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* search_cmd = app.add_subcommand("search", "Scan [2, bound] for Giuga numbers");
    search_cmd->add_option("--bound", bound_text, "scan upper bound (decimal)")->required();
    search_cmd->add_option("--k", k_text, "restrict to members of G_k");
    search_cmd->add_option("--checkpoint", checkpoint, "checkpoint file for resumable scans");
    search_cmd->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
    search_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* verify_cmd = app.add_subcommand("verify-catalog", "Re-derive every catalog entry");
    verify_cmd->add_option("--catalog", catalog_path, "catalog file (default: embedded copy)");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* bernoulli_cmd = app.add_subcommand("bernoulli", "Bernoulli-number congruences");
    bernoulli_cmd->add_option("n", n_text, "integer (decimal)")->required();
    bernoulli_cmd->add_option("--mode", mode, "giuga | agoh")
        ->check(CLI::IsMember({"giuga", "agoh"}));
    bernoulli_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(n_text, factors_csv, as_json);
        if (powersum_cmd->parsed()) return cmd_powersum(n_text, e_text, method, as_json);
        if (kset_cmd->parsed()) return cmd_kset(n_text, as_json);
        if (search_cmd->parsed())
            return cmd_search(bound_text, k_text, checkpoint, jobs, as_json);
        if (verify_cmd->parsed()) return cmd_verify_catalog(catalog_path, as_json);
        if (bernoulli_cmd->parsed()) return cmd_bernoulli(n_text, mode, as_json);
    } catch (const BadFactorHint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IndexTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ResourceExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const CorruptCheckpoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const CorruptCatalog& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
