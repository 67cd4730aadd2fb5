// pseudochar: run verification suites, or evaluate f^[n], D_f and the
// characteristic polynomial of trace on user-supplied matrices.
//
// Exit codes: 0 when every requested suite passes, 1 when one fails,
// 2 on usage or configuration errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pseudochar/determinant.hpp"
#include "pseudochar/verify/suite.hpp"

namespace {

using namespace pseudochar;
using verify::ConfigError;

constexpr int kPass = 0;
constexpr int kSuiteFailure = 1;
constexpr int kUsageError = 2;

/// First line: the size n. Then n rows of n entries, each an integer or p/q.
Matrix read_matrix(const std::string& path, const ScalarRing& ring) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read matrix file '" + path + "'");
    long long n = 0;
    if (!(in >> n) || n < 1) throw ConfigError(path + ": first token must be the matrix size");
    std::vector<Scalar> entries;
    std::string token;
    while (in >> token) {
        mpq_class q;
        if (q.set_str(token, 10) != 0 || q.get_den() == 0) throw ConfigError(path + ": bad entry '" + token + "'");
        q.canonicalize();
        entries.push_back(ring.from_rational(q));
    }
    if (entries.size() != static_cast<std::size_t>(n * n))
        throw ConfigError(path + ": expected " + std::to_string(n * n) + " entries, found " +
                          std::to_string(entries.size()));
    return Matrix(static_cast<std::size_t>(n), std::move(entries));
}

struct EvalOptions {
    std::string what;
    std::vector<std::string> matrices;
};

int run_eval(const EvalOptions& opts, const std::string& ring_text, unsigned dim, bool dim_given) {
    if (ring_text == "words") throw ConfigError("eval needs a scalar ring, not 'words'");
    ScalarRing ring = ScalarRing::rational();
    try {
        ring = ScalarRing::parse(ring_text);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (opts.matrices.empty()) throw ConfigError("eval needs at least one --matrix");

    std::vector<Element> xs;
    for (const std::string& path : opts.matrices) xs.emplace_back(read_matrix(path, ring));
    const std::size_t n = xs.front().as_matrix().size();
    for (const Element& x : xs)
        if (x.as_matrix().size() != n) throw ConfigError("all matrices must have the same size");

    const Algebra alg = Algebra::matrices(n, ring);
    const unsigned d = dim_given ? dim : static_cast<unsigned>(n);
    if (opts.what == "fn") {
        const CentralFunction f = CentralFunction::trace(alg, std::nullopt);
        std::cout << f_rec(f, xs).to_string() << "\n";
        return kPass;
    }
    if (xs.size() != 1) throw ConfigError("eval " + opts.what + " takes exactly one --matrix");
    CentralFunction f = [&] {
        try {
            return CentralFunction::trace(alg, d);
        } catch (const NotInvertible& e) {
            throw ConfigError(e.what());
        }
    }();
    if (opts.what == "det") {
        std::cout << det_from_pseudocharacter(f, xs.front()).to_string() << "\n";
    } else {
        std::cout << char_poly(f, xs.front()).to_string() << "\n";
    }
    return kPass;
}

int run_check(const std::string& target, verify::SuiteConfig cfg, const std::string& json_path, bool quiet) {
    std::vector<verify::SuiteConfig> configs;
    if (target == "all") {
        configs = verify::default_suite_matrix(cfg);
    } else {
        cfg.suite = verify::parse_suite(target);
        configs.push_back(cfg);
    }
    // Validate everything before running anything.
    for (const auto& c : configs) c.validate();

    std::vector<verify::SuiteReport> reports;
    for (const auto& c : configs) {
        reports.push_back(verify::run_suite(c));
        if (!quiet) std::cout << reports.back().to_text() << std::flush;
    }
    const auto document = verify::report_document(reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw ConfigError("cannot write '" + json_path + "'");
        out << document.dump(2) << "\n";
    }
    const bool pass = document["pass"].get<bool>();
    if (!quiet) {
        const auto& counts = document["counts"];
        std::cout << (pass ? "PASS" : "FAIL") << ": " << counts["suites_passed"].get<std::size_t>() << "/"
                  << counts["suites"].get<std::size_t>() << " suites, " << counts["evaluations"].get<std::size_t>()
                  << " evaluations\n";
    }
    return pass ? kPass : kSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiset-ring forms, pseudocharacters and their determinants, checked by exact arithmetic"};
    app.require_subcommand(1);

    verify::SuiteConfig defaults;
    std::string config_path, json_path, ring = defaults.ring;
    unsigned dim = defaults.dim, size = 0, trials = defaults.trials, threads = 0;
    std::uint64_t seed = defaults.seed, budget = defaults.budget;
    std::int64_t bound = defaults.bound;
    bool quiet = false;

    auto* dim_opt = app.add_option("--dim", dim, "Declared dimension d")->check(CLI::PositiveNumber);
    auto* size_opt = app.add_option("--size", size, "Matrix size (defaults to d)")->check(CLI::PositiveNumber);
    auto* ring_opt = app.add_option("--ring", ring, "Scalar backend: rational, mod:<m> or words");
    auto* trials_opt = app.add_option("--trials", trials, "Random trials per suite");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for every per-trial stream");
    auto* bound_opt = app.add_option("--bound", bound, "Random integer entries lie in [-bound, bound]");
    auto* budget_opt = app.add_option("--budget", budget, "Cap on intermediate multisets per product");
    auto* threads_opt = app.add_option("--threads", threads, "Worker threads (results do not depend on it)");
    app.add_option("--config", config_path, "key = value file mirroring the suite configuration");
    app.add_option("--json", json_path, "Write the JSON report here");
    app.add_flag("--quiet", quiet, "Print nothing but errors");

    std::string target;
    auto* check = app.add_subcommand("check", "Run one suite or the default suite matrix");
    check->add_option("suite", target,
                      "assoc|functoriality|product-formula|degree-d|det-mult|charpoly|taylor-equiv|"
                      "pseudochar-axioms|all (may come from --config instead)");
    check->fallthrough();

    EvalOptions eval_opts;
    auto* eval = app.add_subcommand("eval", "Evaluate f^[n] (fn), D_f (det) or char_poly for trace");
    eval->add_option("what", eval_opts.what, "fn|det|charpoly")
        ->required()
        ->check(CLI::IsMember({"fn", "det", "charpoly"}));
    eval->add_option("--matrix", eval_opts.matrices, "Matrix file; repeat for the arguments of fn")->required();
    eval->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, std::cout, std::cerr);
        return e.get_exit_code() == 0 ? code : kUsageError;
    }

    try {
        verify::SuiteConfig cfg;
        bool suite_in_config = false;
        if (!config_path.empty()) {
            const auto keys = verify::load_config_file(config_path, cfg);
            suite_in_config = std::find(keys.begin(), keys.end(), "suite") != keys.end();
        }
        // Explicit flags override the config file.
        if (dim_opt->count()) cfg.dim = dim;
        if (size_opt->count()) cfg.size = size;
        if (ring_opt->count()) cfg.ring = ring;
        if (trials_opt->count()) cfg.trials = trials;
        if (seed_opt->count()) cfg.seed = seed;
        if (bound_opt->count()) cfg.bound = bound;
        if (budget_opt->count()) cfg.budget = budget;
        if (threads_opt->count()) cfg.threads = threads;

        if (*eval) return run_eval(eval_opts, cfg.ring, dim, dim_opt->count() > 0);
        if (target.empty()) {
            if (!suite_in_config) throw ConfigError("check needs a suite name or a config file with 'suite = ...'");
            target = verify::suite_name(cfg.suite);
        }
        return run_check(target, cfg, json_path, quiet);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}
