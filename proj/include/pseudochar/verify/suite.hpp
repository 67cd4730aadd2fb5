#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pseudochar/errors.hpp"
#include "pseudochar/forms.hpp"

namespace pseudochar::verify {

/// Invalid suite configuration (bad ring, unsupported suite/backend pair,
/// non-invertible d!, ...). The CLI maps it to exit code 2.
class ConfigError : public Error {
   public:
    using Error::Error;
};

enum class SuiteKind {
    Assoc,
    Functoriality,
    ProductFormula,
    DegreeD,
    DetMult,
    Charpoly,
    TaylorEquiv,
    PseudocharAxioms,
};

const char* suite_name(SuiteKind kind) noexcept;
/// Inverse of suite_name; ConfigError for unknown names.
SuiteKind parse_suite(const std::string& name);
const std::vector<SuiteKind>& all_suites();

struct SuiteConfig {
    SuiteKind suite = SuiteKind::Assoc;
    std::string ring = "rational";  ///< `rational`, `mod:<m>` or `words`
    unsigned size = 0;              ///< matrix size; 0 means the same as dim
    unsigned dim = 2;               ///< declared pseudocharacter dimension
    unsigned trials = 25;
    std::uint64_t seed = 42;
    std::int64_t bound = 5;         ///< random entries in [-bound, bound]
    std::uint64_t budget = 10'000'000;
    FormCaps caps;
    unsigned max_cardinality = 3;   ///< multiset cardinalities in the ring-structure suites
    unsigned max_total_arity = 6;   ///< n+m for product formulas, n for form identities
    unsigned word_length = 2;
    unsigned threads = 0;           ///< worker threads for trials; 0 picks the hardware count. Never changes results.

    unsigned matrix_size() const noexcept { return size == 0 ? dim : size; }

    bool uses_words() const noexcept { return ring == "words"; }
    /// Scalar ring for matrix backends; ConfigError for `words` or garbage.
    ScalarRing scalar_ring() const;

    /// Throws ConfigError describing the first problem found.
    void validate() const;

    /// Applies one `key = value` setting (config file or flag).
    void set(const std::string& key, const std::string& value);

    nlohmann::ordered_json to_json() const;
    std::string describe() const;
};

/// Reads `key = value` lines (`#` starts a comment) into `cfg`; returns the keys set, in file order.
std::vector<std::string> load_config_file(const std::string& path, SuiteConfig& cfg);

/// One recorded evaluation with rendered exact values.
struct Observation {
    unsigned trial = 0;
    std::string lhs;
    std::string rhs;
    std::string inputs;
};

/// Aggregated outcome of one named check across all trials of a suite.
///
/// For an ordinary check every evaluation must hold. For a negative control
/// the identity is expected to break: the check is ok iff at least one
/// evaluation was violated, and the first violation is kept as the witness.
struct CheckSummary {
    std::string name;
    bool negative_control = false;
    std::size_t evaluations = 0;
    std::size_t held = 0;
    std::optional<Observation> sample;
    std::vector<Observation> failures;

    std::size_t violated() const noexcept { return evaluations - held; }
    bool ok() const noexcept { return negative_control ? violated() > 0 : (evaluations > 0 && violated() == 0); }
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckSummary> checks;
    double duration_ms = 0;

    bool passed() const;
    const CheckSummary* find(const std::string& name) const;
    std::size_t evaluations() const;

    /// Everything except timing; byte-identical for identical (suite, seed, config).
    nlohmann::ordered_json body_json() const;
    std::string to_text() const;
};

/// Runs one suite. Deterministic given the config; each trial draws from
/// Rng::for_trial(seed, trial). Throws ConfigError for invalid configs.
SuiteReport run_suite(const SuiteConfig& cfg);

/// The default matrix: d in {1,2,3} x ring in {rational, mod:7, mod:101} for
/// every matrix suite, plus the exhaustive word suites. `base` supplies
/// trials, seed, bound, budget and caps.
std::vector<SuiteConfig> default_suite_matrix(const SuiteConfig& base);

/// Top-level report document: `{schema, pass, counts, suites[], timing}`.
nlohmann::ordered_json report_document(const std::vector<SuiteReport>& reports);

/// report_document without timing fields.
nlohmann::ordered_json report_body(const std::vector<SuiteReport>& reports);

}  // namespace pseudochar::verify
