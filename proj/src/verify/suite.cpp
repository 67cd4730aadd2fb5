#include "pseudochar/verify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "pseudochar/determinant.hpp"
#include "pseudochar/verify/generators.hpp"
#include "pseudochar/verify/oracles.hpp"
#include "pseudochar/verify/rng.hpp"

namespace pseudochar::verify {

// ---------------------------------------------------------------------------
// Names and configuration

namespace {

struct SuiteNameEntry {
    SuiteKind kind;
    const char* name;
};

constexpr SuiteNameEntry kSuiteNames[] = {
    {SuiteKind::Assoc, "assoc"},
    {SuiteKind::Functoriality, "functoriality"},
    {SuiteKind::ProductFormula, "product-formula"},
    {SuiteKind::DegreeD, "degree-d"},
    {SuiteKind::DetMult, "det-mult"},
    {SuiteKind::Charpoly, "charpoly"},
    {SuiteKind::TaylorEquiv, "taylor-equiv"},
    {SuiteKind::PseudocharAxioms, "pseudochar-axioms"},
};

/// Suites whose statements need f to be a pseudocharacter of the declared dimension.
bool needs_pseudocharacter(SuiteKind kind) {
    return kind == SuiteKind::DegreeD || kind == SuiteKind::DetMult || kind == SuiteKind::Charpoly ||
           kind == SuiteKind::PseudocharAxioms;
}

bool supports_words(SuiteKind kind) { return kind == SuiteKind::Assoc || kind == SuiteKind::Functoriality; }

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) throw ConfigError("invalid value for " + key + ": '" + value + "'");
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

const char* suite_name(SuiteKind kind) noexcept {
    for (const auto& e : kSuiteNames)
        if (e.kind == kind) return e.name;
    return "?";
}

SuiteKind parse_suite(const std::string& name) {
    for (const auto& e : kSuiteNames)
        if (name == e.name) return e.kind;
    throw ConfigError("unknown suite '" + name + "'");
}

const std::vector<SuiteKind>& all_suites() {
    static const std::vector<SuiteKind> suites = [] {
        std::vector<SuiteKind> out;
        for (const auto& e : kSuiteNames) out.push_back(e.kind);
        return out;
    }();
    return suites;
}

ScalarRing SuiteConfig::scalar_ring() const {
    if (ring == "rational" || ring == "Q") return ScalarRing::rational();
    if (ring.rfind("mod:", 0) == 0) {
        try {
            return ScalarRing::parse(ring);
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
    if (ring == "words") throw ConfigError("suite " + std::string(suite_name(suite)) + " has no scalar ring for 'words'");
    throw ConfigError("unknown ring '" + ring + "' (expected rational, mod:<m> or words)");
}

void SuiteConfig::validate() const {
    const std::string name = suite_name(suite);
    if (trials == 0) throw ConfigError("trials must be at least 1");
    if (bound < 1) throw ConfigError("bound must be at least 1");
    if (budget == 0) throw ConfigError("budget must be at least 1");
    if (dim == 0) throw ConfigError("dim must be at least 1");
    if (max_total_arity == 0) throw ConfigError("max_total_arity must be at least 1");
    if (word_length == 0) throw ConfigError("word_length must be at least 1");
    if (caps.max_oracle_arity > caps.max_arity) throw ConfigError("max_oracle_arity exceeds max_arity");

    if (uses_words()) {
        if (!supports_words(suite)) throw ConfigError("suite " + name + " needs a matrix backend, not 'words'");
        return;
    }
    const ScalarRing r = scalar_ring();
    const unsigned n = matrix_size();
    if (n == 0) throw ConfigError("size must be at least 1");
    if (n > kLeibnizCap && suite != SuiteKind::Assoc && suite != SuiteKind::Functoriality)
        throw ConfigError("size " + std::to_string(n) + " exceeds the Leibniz oracle cap " +
                          std::to_string(kLeibnizCap));

    if (needs_pseudocharacter(suite)) {
        if (n != dim)
            throw ConfigError("suite " + name + " uses trace on M_d, so size must equal dim (got size " +
                              std::to_string(n) + ", dim " + std::to_string(dim) + ")");
        try {
            (void)inverse_of_factorial(dim, r);
        } catch (const NotInvertible& e) {
            throw ConfigError(e.what());
        }
        // The pseudocharacter axioms check f^[d+2]; the degree-d formula sums d! forms.
        if (dim + 2 > caps.max_arity)
            throw ConfigError("dim " + std::to_string(dim) + " needs arity " + std::to_string(dim + 2) +
                              " but max_arity is " + std::to_string(caps.max_arity));
        if (suite == SuiteKind::DegreeD && dim > caps.max_oracle_arity)
            throw ConfigError("degree-d sums d! forms; dim exceeds max_oracle_arity");
    }
    if (suite == SuiteKind::TaylorEquiv && std::max(3u, max_total_arity) > caps.max_oracle_arity)
        throw ConfigError("taylor-equiv arity exceeds max_oracle_arity");
    if ((suite == SuiteKind::ProductFormula || suite == SuiteKind::Charpoly) && max_total_arity > caps.max_arity)
        throw ConfigError("max_total_arity exceeds max_arity");
}

void SuiteConfig::set(const std::string& key, const std::string& raw) {
    const std::string value = trim(raw);
    if (key == "suite") suite = parse_suite(value);
    else if (key == "ring") ring = value;
    else if (key == "size") size = parse_number<unsigned>(key, value);
    else if (key == "dim") dim = parse_number<unsigned>(key, value);
    else if (key == "trials") trials = parse_number<unsigned>(key, value);
    else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
    else if (key == "bound") bound = parse_number<std::int64_t>(key, value);
    else if (key == "budget") budget = parse_number<std::uint64_t>(key, value);
    else if (key == "max_arity") caps.max_arity = parse_number<unsigned>(key, value);
    else if (key == "max_oracle_arity") caps.max_oracle_arity = parse_number<unsigned>(key, value);
    else if (key == "max_cardinality") max_cardinality = parse_number<unsigned>(key, value);
    else if (key == "max_total_arity") max_total_arity = parse_number<unsigned>(key, value);
    else if (key == "word_length") word_length = parse_number<unsigned>(key, value);
    else if (key == "threads") threads = parse_number<unsigned>(key, value);
    else throw ConfigError("unknown config key '" + key + "'");
}

nlohmann::ordered_json SuiteConfig::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_name(suite);
    j["ring"] = ring;
    if (!uses_words()) j["size"] = matrix_size();
    j["dim"] = dim;
    j["trials"] = trials;
    j["seed"] = seed;
    j["bound"] = bound;
    j["budget"] = budget;
    j["max_arity"] = caps.max_arity;
    j["max_oracle_arity"] = caps.max_oracle_arity;
    j["max_cardinality"] = max_cardinality;
    j["max_total_arity"] = max_total_arity;
    j["word_length"] = word_length;
    return j;
}

std::string SuiteConfig::describe() const {
    std::ostringstream out;
    out << ring;
    if (!uses_words()) out << ", size " << matrix_size() << ", dim " << dim;
    out << ", trials " << trials << ", seed " << seed;
    return out.str();
}

std::vector<std::string> load_config_file(const std::string& path, SuiteConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::vector<std::string> keys;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        keys.push_back(trim(line.substr(0, eq)));
        cfg.set(keys.back(), line.substr(eq + 1));
    }
    return keys;
}

// ---------------------------------------------------------------------------
// Recording

namespace {

constexpr std::size_t kMaxStoredFailures = 10;
constexpr std::size_t kSampleChars = 400;

struct Event {
    std::string check;
    bool negative;
    bool held;
    std::string lhs;
    std::string rhs;
    std::string inputs;
};

/// Evaluations of one trial, in the order they were made. Inputs are rendered
/// only where a report can use them: the first evaluation of each check in the
/// trial, every unexpected result, and the first violation of a control.
class TrialLog {
   public:
    template <class Inputs>
    void check(const std::string& name, bool held, std::string lhs, std::string rhs, Inputs&& inputs) {
        add(name, false, held, std::move(lhs), std::move(rhs), std::forward<Inputs>(inputs));
    }
    template <class Inputs>
    void control(const std::string& name, bool held, std::string lhs, std::string rhs, Inputs&& inputs) {
        add(name, true, held, std::move(lhs), std::move(rhs), std::forward<Inputs>(inputs));
    }

    std::vector<Event>& events() noexcept { return events_; }

   private:
    template <class Inputs>
    void add(const std::string& name, bool negative, bool held, std::string lhs, std::string rhs, Inputs&& inputs) {
        const bool first = seen_.insert(name).second;
        bool render = first;
        if (!held) render = negative ? violated_.insert(name).second || render : true;
        events_.push_back(Event{name, negative, held, std::move(lhs), std::move(rhs), render ? inputs() : std::string{}});
    }

    std::vector<Event> events_;
    std::set<std::string> seen_;
    std::set<std::string> violated_;
};

using TrialBody = std::function<void(unsigned trial, Rng& rng, TrialLog& log)>;

/// Runs `count` trials, possibly on several threads, and folds the logs into
/// check summaries in trial order, so the result never depends on scheduling.
std::vector<CheckSummary> drive(const SuiteConfig& cfg, unsigned count, const TrialBody& body) {
    std::vector<TrialLog> logs(count);
    unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);

    std::atomic<unsigned> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const unsigned t = next.fetch_add(1);
            if (t >= count) return;
            try {
                Rng rng = Rng::for_trial(cfg.seed, t);
                body(t, rng, logs[t]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<CheckSummary> summaries;
    std::map<std::string, std::size_t> index;
    for (unsigned t = 0; t < count; ++t) {
        for (Event& e : logs[t].events()) {
            auto [it, inserted] = index.try_emplace(e.check, summaries.size());
            if (inserted) {
                CheckSummary s;
                s.name = e.check;
                s.negative_control = e.negative;
                summaries.push_back(std::move(s));
            }
            CheckSummary& s = summaries[it->second];
            ++s.evaluations;
            if (e.held) ++s.held;
            if (!s.sample) {
                Observation o{t, e.lhs, e.rhs, e.inputs};
                if (o.lhs.size() > kSampleChars) o.lhs = o.lhs.substr(0, kSampleChars) + "...";
                if (o.rhs.size() > kSampleChars) o.rhs = o.rhs.substr(0, kSampleChars) + "...";
                s.sample = std::move(o);
            }
            const std::size_t keep = s.negative_control ? 1 : kMaxStoredFailures;
            if (!e.held && s.failures.size() < keep)
                s.failures.push_back(Observation{t, std::move(e.lhs), std::move(e.rhs), std::move(e.inputs)});
        }
        logs[t] = TrialLog{};
    }
    return summaries;
}

// ---------------------------------------------------------------------------
// Rendering helpers

std::string render(std::span<const Element> xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) out += ", ";
        out += xs[i].to_string();
    }
    return out + "]";
}

std::string render_pair(const std::string& a, const std::string& b) { return "x=" + a + "; y=" + b; }

std::string str(const Scalar& s) { return s.to_string(); }

std::string str(const std::vector<Scalar>& coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += (i ? ", " : "") + coeffs[i].to_string();
    return out + "]";
}

// ---------------------------------------------------------------------------
// Shared fixtures

CentralFunction plain_trace(const Algebra& matrices) {
    return CentralFunction("trace", matrices, matrices.ring(), std::nullopt,
                           [](const Element& x) { return x.as_matrix().trace(); });
}

/// Central but not a pseudocharacter: Tr(x^2) + Tr(x)^3.
CentralFunction nonlinear_central(const Algebra& matrices) {
    return CentralFunction("tr(x^2)+tr(x)^3", matrices, matrices.ring(), std::nullopt, [](const Element& x) {
        const Matrix& m = x.as_matrix();
        const Scalar t = m.trace();
        return (m * m).trace() + t * t * t;
    });
}

/// Top-left entry: not central once the size is at least 2.
CentralFunction top_left_entry(const Algebra& matrices) {
    return CentralFunction("x[0][0]", matrices, matrices.ring(), std::nullopt,
                           [](const Element& x) { return x.as_matrix()(0, 0); }, false);
}

/// Trace on M_d that claims the wrong dimension: d - 1 on M_d, or 1 on M_2 when d = 1.
CentralFunction misdeclared_trace(const ScalarRing& ring, unsigned d) {
    if (d == 1) return CentralFunction::trace(Algebra::matrices(2, ring), 1u);
    return CentralFunction::trace(Algebra::matrices(d, ring), d - 1);
}

std::vector<Element> draw(const ElementSpace& space, std::size_t n, Rng& rng) {
    return random_elements(space, n, rng);
}

FormalSum as_sum(const Multiset& m) { return FormalSum(m); }

/// x × y restricted to partial bijections of rank at most 1. Bilinear but not
/// associative; a negative control for the associativity check.
FormalSum truncated_product(const FormalSum& s, const FormalSum& t) {
    FormalSum out;
    for (const auto& [x, a] : s.terms())
        for (const auto& [y, b] : t.terms()) {
            const auto n = static_cast<std::uint32_t>(x.size());
            const auto m = static_cast<std::uint32_t>(y.size());
            for_each_partial_bijection(n, m, [&](std::span<const PartialBijection::Pair> pairs) {
                if (pairs.size() > 1) return;
                out.add(product_along(x, y, PartialBijection(n, m, {pairs.begin(), pairs.end()})), a * b);
            });
        }
    return out;
}

/// Replaces every word by the image of its first letter: not a semigroup
/// homomorphism, so it should break functoriality.
FormalSum map_first_letter(const SemigroupHom& hom, const FormalSum& s) {
    FormalSum out;
    for (const auto& [m, c] : s.terms()) {
        std::vector<Element> entries;
        for (const Element& e : m.entries()) entries.push_back(hom.apply(Word(e.as_word().letters().front())));
        out.add(Multiset(std::move(entries)), c);
    }
    return out;
}

/// Sum over S_n of the product over cycles of f(cycle product), without the sign.
Scalar unsigned_cycle_sum(const CentralFunction& f, std::span<const Element> xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Scalar total = f.ring().zero();
    do {
        std::vector<bool> seen(n, false);
        Scalar term = f.ring().one();
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            Element prod = xs[i];
            seen[i] = true;
            for (std::size_t j = sigma[i]; j != i; j = sigma[j]) {
                prod = prod * xs[j];
                seen[j] = true;
            }
            term *= f(prod);
        }
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

// ---------------------------------------------------------------------------
// assoc

/// Anti-automorphism of H: word reversal, matrix transpose. An involution
/// with rev(ab) = rev(b) rev(a).
Element reversed(const Element& e) {
    if (e.kind() == Element::Kind::Word) {
        std::vector<Letter> letters = e.as_word().letters();
        std::reverse(letters.begin(), letters.end());
        return Word(std::move(letters));
    }
    const Matrix& m = e.as_matrix();
    const std::size_t n = m.size();
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) entries.push_back(m(c, r));
    return Matrix(n, std::move(entries));
}

Multiset reversed(const Multiset& x) {
    std::vector<Element> entries;
    for (const Element& e : x.entries()) entries.push_back(reversed(e));
    return Multiset(std::move(entries));
}

FormalSum reversed(const FormalSum& s) {
    FormalSum out;
    for (const auto& [m, c] : s.terms()) out.add(reversed(m), c);
    return out;
}

void commutativity_control(TrialLog& log, const Multiset& x, const Multiset& y, const ProductBudget& budget) {
    const FormalSum xy = multiset_product(x, y, budget);
    const FormalSum yx = multiset_product(y, x, budget);
    log.control("commutativity-in-noncommutative-h", xy == yx, xy.to_string(), yx.to_string(),
                [&] { return render_pair(x.to_string(), y.to_string()); });
}

/// `commutative_h`: whether H itself is commutative. Only then is x × y = y × x;
/// in general, inverting the partial bijections gives x × y = rev(rev(y) × rev(x)).
/// Callers supply the commutativity negative control for noncommutative H.
void ring_structure_checks(TrialLog& log, Rng& rng, const Multiset& x, const Multiset& y, const ProductBudget& budget,
                           bool distinct_entries, bool commutative_h) {
    const auto inputs = [&] { return render_pair(x.to_string(), y.to_string()); };
    const FormalSum xy = multiset_product(x, y, budget);
    const FormalSum yx = multiset_product(y, x, budget);
    if (commutative_h) log.check("commutativity", xy == yx, xy.to_string(), yx.to_string(), inputs);
    const FormalSum flipped = reversed(multiset_product(reversed(y), reversed(x), budget));
    log.check("commutativity-up-to-reversal", xy == flipped, xy.to_string(), flipped.to_string(), inputs);

    const FormalSum xe = multiset_product(x, Multiset{}, budget);
    const FormalSum ex = multiset_product(Multiset{}, y, budget);
    log.check("unit", xe == as_sum(x) && ex == as_sum(y), xe.to_string() + " | " + ex.to_string(),
              x.to_string() + " | " + y.to_string(), inputs);

    bool bounds = true;
    for (const auto& [m, c] : xy.terms())
        bounds = bounds && m.size() >= std::max(x.size(), y.size()) && m.size() <= x.size() + y.size();
    log.check("cardinality-bounds", bounds, std::to_string(xy.size()) + " terms", "sizes in [max(n,m), n+m]", inputs);

    if (distinct_entries) {
        bool ones = true;
        for (const auto& [m, c] : xy.terms()) ones = ones && c == 1;
        const mpz_class count = partial_bijection_count(static_cast<std::uint32_t>(x.size()),
                                                        static_cast<std::uint32_t>(y.size()));
        log.check("distinct-terms", ones && mpz_class(static_cast<unsigned long>(xy.size())) == count,
                  std::to_string(xy.size()) + " terms, all coefficients 1", count.get_str() + " partial bijections",
                  inputs);
    }

    std::vector<Element> xs = x.entries();
    std::vector<Element> ys = y.entries();
    rng.shuffle(xs.begin(), xs.end());
    rng.shuffle(ys.begin(), ys.end());
    const FormalSum shuffled = multiset_product(xs, ys, budget);
    log.check("order-independence", shuffled == xy, shuffled.to_string(), xy.to_string(),
              [&] { return "x=" + render(xs) + "; y=" + render(ys); });
}

void associativity_check(TrialLog& log, const Multiset& x, const Multiset& y, const Multiset& z,
                         const ProductBudget& budget) {
    const auto inputs = [&] { return "x=" + x.to_string() + "; y=" + y.to_string() + "; z=" + z.to_string(); };
    const FormalSum fx = as_sum(x), fy = as_sum(y), fz = as_sum(z);
    const FormalSum lhs = formal_product(formal_product(fx, fy, budget), fz, budget);
    const FormalSum rhs = formal_product(fx, formal_product(fy, fz, budget), budget);
    log.check("associativity", lhs == rhs, lhs.to_string(), rhs.to_string(), inputs);
}

void partial_bijection_counts(TrialLog& log) {
    const struct {
        std::uint32_t n, m;
        unsigned long expected;
    } cases[] = {{2, 1, 3}, {2, 2, 7}, {3, 3, 34}};
    for (const auto& c : cases) {
        unsigned long enumerated = 0;
        for_each_partial_bijection(c.n, c.m, [&](std::span<const PartialBijection::Pair>) { ++enumerated; });
        const mpz_class formula = partial_bijection_count(c.n, c.m);
        log.check("partial-bijection-count", enumerated == c.expected && formula == c.expected,
                  std::to_string(enumerated) + " enumerated, " + formula.get_str() + " by formula",
                  std::to_string(c.expected),
                  [&] { return "n=" + std::to_string(c.n) + ", m=" + std::to_string(c.m); });
    }
}

std::vector<CheckSummary> run_assoc_words(const SuiteConfig& cfg) {
    const unsigned k = cfg.max_cardinality + 1;
    const unsigned triples = k * k * k;
    const ProductBudget budget{cfg.budget};
    const auto letters = [](char family, unsigned n) { return letter_multiset(family, n); };
    // Trials enumerate every cardinality triple, then every pair.
    return drive(cfg, triples + k * k, [&](unsigned t, Rng& rng, TrialLog& log) {
        if (t == 0) partial_bijection_counts(log);
        if (t < triples) {
            const Multiset x = letters('x', t / (k * k)), y = letters('y', (t / k) % k), z = letters('z', t % k);
            associativity_check(log, x, y, z, budget);
            const FormalSum fx = as_sum(x), fy = as_sum(y), fz = as_sum(z);
            const FormalSum lhs = truncated_product(truncated_product(fx, fy), fz);
            const FormalSum rhs = truncated_product(fx, truncated_product(fy, fz));
            log.control("truncated-product-associativity", lhs == rhs, lhs.to_string(), rhs.to_string(), [&] {
                return "x=" + x.to_string() + "; y=" + y.to_string() + "; z=" + z.to_string();
            });
            return;
        }
        const unsigned p = t - triples;
        const Multiset x = letters('x', p / k), y = letters('y', p % k);
        ring_structure_checks(log, rng, x, y, budget, true, false);
        commutativity_control(log, x, y, budget);
    });
}

std::vector<CheckSummary> run_assoc_matrices(const SuiteConfig& cfg) {
    const Algebra alg = Algebra::matrices(cfg.matrix_size(), cfg.scalar_ring());
    const ElementSpace space{alg, cfg.bound};
    const ProductBudget budget{cfg.budget};
    const auto card = static_cast<std::int64_t>(cfg.max_cardinality);
    return drive(cfg, cfg.trials, [&](unsigned t, Rng& rng, TrialLog& log) {
        if (t == 0) partial_bijection_counts(log);
        const auto draw_multiset = [&] { return random_multiset(space, static_cast<std::size_t>(rng.uniform(0, card)), rng); };
        const Multiset x = draw_multiset(), y = draw_multiset(), z = draw_multiset();
        associativity_check(log, x, y, z, budget);
        ring_structure_checks(log, rng, x, y, budget, false, cfg.matrix_size() == 1);
        // Fresh singletons: an empty draw would make the control hold vacuously.
        if (cfg.matrix_size() > 1)
            commutativity_control(log, Multiset{random_element(space, rng)}, Multiset{random_element(space, rng)}, budget);

        // {1} is a nonempty multiset, not the unit.
        const Multiset one{alg.one()};
        const FormalSum lhs = multiset_product(one, x, budget);
        log.control("identity-singleton-unit", lhs == as_sum(x), lhs.to_string(), x.to_string(),
                    [&] { return "x=" + x.to_string(); });
    });
}

// ---------------------------------------------------------------------------
// functoriality

std::vector<CheckSummary> run_functoriality(const SuiteConfig& cfg) {
    const ElementSpace words{Algebra::words(), 0, cfg.word_length, 3, 'x'};
    const bool to_words = cfg.uses_words();
    const ElementSpace target = to_words ? ElementSpace{Algebra::words(), 0, cfg.word_length, 2, 'y'}
                                         : ElementSpace{Algebra::matrices(cfg.matrix_size(), cfg.scalar_ring()), cfg.bound};
    const ProductBudget budget{cfg.budget};
    return drive(cfg, cfg.trials, [&](unsigned, Rng& rng, TrialLog& log) {
        const FormalSum s = random_formal_sum(words, 2, cfg.max_cardinality, 3, rng);
        const FormalSum t = random_formal_sum(words, 2, cfg.max_cardinality, 3, rng);
        SemigroupHom psi;
        for (std::uint32_t i = 1; i <= words.alphabet_size; ++i) psi.assign(Letter{'x', i}, random_element(target, rng));
        const auto inputs = [&] {
            std::string out = "S=" + s.to_string() + "; T=" + t.to_string() + "; psi={";
            bool first = true;
            for (const auto& [letter, image] : psi.images()) {
                out += (first ? "" : ", ") + letter.to_string() + "->" + image.to_string();
                first = false;
            }
            return out + "}";
        };

        const FormalSum lhs = map_formal(psi, formal_product(s, t, budget));
        const FormalSum rhs = formal_product(map_formal(psi, s), map_formal(psi, t), budget);
        log.check("functoriality", lhs == rhs, lhs.to_string(), rhs.to_string(), inputs);

        const FormalSum bad_lhs = map_first_letter(psi, formal_product(s, t, budget));
        const FormalSum bad_rhs = formal_product(map_first_letter(psi, s), map_first_letter(psi, t), budget);
        log.control("first-letter-map", bad_lhs == bad_rhs, bad_lhs.to_string(), bad_rhs.to_string(), inputs);
    });
}

// ---------------------------------------------------------------------------
// product-formula

std::vector<CheckSummary> run_product_formula(const SuiteConfig& cfg) {
    const ScalarRing ring = cfg.scalar_ring();
    const Algebra alg = Algebra::matrices(cfg.matrix_size(), ring);
    const ElementSpace space{alg, cfg.bound};
    const CentralFunction f = plain_trace(alg);
    const CentralFunction g = nonlinear_central(alg);
    const Algebra wide = Algebra::matrices(std::max(2u, cfg.matrix_size()), ring);
    const ElementSpace wide_space{wide, cfg.bound};
    const CentralFunction h = top_left_entry(wide);
    const ProductBudget budget{cfg.budget};
    const unsigned total = cfg.max_total_arity;

    return drive(cfg, cfg.trials, [&](unsigned, Rng& rng, TrialLog& log) {
        for (unsigned n = 0; n <= total; ++n)
            for (unsigned m = 0; n + m <= total; ++m) {
                const Multiset x = random_multiset(space, n, rng), y = random_multiset(space, m, rng);
                const auto inputs = [&] { return render_pair(x.to_string(), y.to_string()); };
                const IdentityCheck r = product_formula_check(f, x, y, cfg.caps, budget);
                log.check("product-formula", r.equal, str(r.lhs), str(r.rhs), inputs);
                if (n + m <= std::min(total, 4u)) {
                    const IdentityCheck q = product_formula_check(g, x, y, cfg.caps, budget);
                    log.check("product-formula-nonlinear-central", q.equal, str(q.lhs), str(q.rhs), inputs);
                }
            }

        const unsigned card = std::min(2u, total / 2);
        const FormalSum s = random_formal_sum(space, 2, card, 3, rng);
        const FormalSum t = random_formal_sum(space, 2, card, 3, rng);
        const Scalar lhs = f_hat(f, formal_product(s, t, budget), cfg.caps);
        const Scalar rhs = f_hat(f, s, cfg.caps) * f_hat(f, t, cfg.caps);
        log.check("ring-homomorphism", lhs == rhs, str(lhs), str(rhs),
                  [&] { return "S=" + s.to_string() + "; T=" + t.to_string(); });

        for (const auto& [n, m] : {std::pair{1u, 2u}, std::pair{2u, 2u}}) {
            const Multiset x = random_multiset(wide_space, n, rng), y = random_multiset(wide_space, m, rng);
            const IdentityCheck r = product_formula_check(h, x, y, cfg.caps, budget);
            log.control("non-central-top-left-entry", r.equal, str(r.lhs), str(r.rhs),
                        [&] { return render_pair(x.to_string(), y.to_string()); });
        }
    });
}

// ---------------------------------------------------------------------------
// degree-d

std::vector<CheckSummary> run_degree_d(const SuiteConfig& cfg) {
    const ScalarRing ring = cfg.scalar_ring();
    const unsigned d = cfg.dim;
    const Algebra alg = Algebra::matrices(d, ring);
    const ElementSpace space{alg, cfg.bound};
    const CentralFunction f = CentralFunction::trace(alg, d);
    const CentralFunction wrong = misdeclared_trace(ring, d);
    const ElementSpace wrong_space{wrong.domain(), cfg.bound};

    return drive(cfg, cfg.trials, [&](unsigned, Rng& rng, TrialLog& log) {
        const auto xs = draw(space, d, rng), ys = draw(space, d, rng);
        const IdentityCheck r = degree_d_product_check(f, xs, ys, cfg.caps);
        log.check("degree-d-product", r.equal, str(r.lhs), str(r.rhs),
                  [&] { return render_pair(render(xs), render(ys)); });

        const unsigned k = wrong.dimension();
        const auto ws = draw(wrong_space, k, rng), vs = draw(wrong_space, k, rng);
        const IdentityCheck q = degree_d_product_check(wrong, ws, vs, cfg.caps);
        log.control("declared-dimension-wrong", q.equal, str(q.lhs), str(q.rhs),
                    [&] { return render_pair(render(ws), render(vs)) + "; declared d=" + std::to_string(k); });
    });
}

// ---------------------------------------------------------------------------
// det-mult

std::vector<CheckSummary> run_det_mult(const SuiteConfig& cfg) {
    const ScalarRing ring = cfg.scalar_ring();
    const unsigned d = cfg.dim;
    const Algebra alg = Algebra::matrices(d, ring);
    const ElementSpace space{alg, cfg.bound};
    const CentralFunction f = CentralFunction::trace(alg, d);
    const CentralFunction wrong = misdeclared_trace(ring, d);
    const ElementSpace wrong_space{wrong.domain(), cfg.bound};

    return drive(cfg, cfg.trials, [&](unsigned, Rng& rng, TrialLog& log) {
        const Element x = random_element(space, rng), y = random_element(space, rng);
        const auto inputs = [&] { return render_pair(x.to_string(), y.to_string()); };

        const Scalar dx = det_from_pseudocharacter(f, x, cfg.caps);
        const Scalar leib = leibniz_det(x.as_matrix());
        log.check("det-equals-leibniz", dx == leib, str(dx), str(leib), inputs);

        const IdentityCheck m = multiplicativity_check(f, x, y, cfg.caps);
        log.check("multiplicative", m.equal, str(m.lhs), str(m.rhs), inputs);

        const Scalar d1 = det_from_pseudocharacter(f, alg.one(), cfg.caps);
        log.check("unit-determinant", d1.is_one(), str(d1), "1", [] { return std::string("x=1"); });

        const Scalar a = ring.from_int(rng.uniform(-cfg.bound, cfg.bound));
        const Scalar lhs = det_from_pseudocharacter(f, x.scaled(a), cfg.caps);
        const Scalar rhs = a.pow(d) * dx;
        log.check("homogeneous", lhs == rhs, str(lhs), str(rhs), [&] { return inputs() + "; a=" + str(a); });

        const Element u = random_element(wrong_space, rng), v = random_element(wrong_space, rng);
        const IdentityCheck w = multiplicativity_check(wrong, u, v, cfg.caps);
        log.control("declared-dimension-wrong", w.equal, str(w.lhs), str(w.rhs), [&] {
            return render_pair(u.to_string(), v.to_string()) + "; declared d=" + std::to_string(wrong.dimension());
        });
    });
}

// ---------------------------------------------------------------------------
// charpoly

std::vector<CheckSummary> run_charpoly(const SuiteConfig& cfg) {
    const ScalarRing ring = cfg.scalar_ring();
    const unsigned d = cfg.dim;
    const Algebra alg = Algebra::matrices(d, ring);
    const ElementSpace space{alg, cfg.bound};
    const CentralFunction f = CentralFunction::trace(alg, d);

    return drive(cfg, cfg.trials, [&](unsigned, Rng& rng, TrialLog& log) {
        const Element x = random_element(space, rng);
        const auto inputs = [&] { return "x=" + x.to_string(); };

        const CharPoly cp = char_poly(f, x, cfg.caps);
        const std::vector<Scalar> leib = leibniz_char_poly(x.as_matrix());
        log.check("matches-leibniz", cp.coefficients == leib, str(cp.coefficients), str(leib), inputs);

        const CharPoly interp = char_poly_by_interpolation(f, x, cfg.caps);
        log.check("matches-interpolation", cp == interp, cp.to_string(), interp.to_string(), inputs);

        log.check("trace-roundtrip", cp.recovered_trace() == f(x), str(cp.recovered_trace()), str(f(x)), inputs);
        log.check("monic", cp.is_monic() && cp.degree() == d, cp.to_string(), "degree " + std::to_string(d) + ", monic",
                  inputs);

        const Scalar c0 = cp.coefficients.front();
        const Scalar expected = det_from_pseudocharacter(f, x, cfg.caps).times(d % 2 == 0 ? 1 : -1);
        log.check("constant-term", c0 == expected, str(c0), str(expected), inputs);

        for (unsigned n = 1; n <= cfg.max_total_arity; ++n) {
            const IdentityCheck r = lemma_ones_check(f, x, n, cfg.caps);
            log.check("lemma-ones", r.equal, str(r.lhs), str(r.rhs),
                      [&] { return inputs() + "; n=" + std::to_string(n); });

            // Off by one: an extra factor (f(1) - n).
            const Scalar f1 = f(alg.one());
            const Scalar skewed = r.rhs * (f1 - ring.from_int(n));
            log.control("lemma-extra-factor", r.lhs == skewed, str(r.lhs), str(skewed),
                        [&] { return inputs() + "; n=" + std::to_string(n); });
        }

        // A wrongly declared dimension changes the polynomial.
        bool equal = false;
        std::string got = "d+1 not invertible";
        try {
            const CharPoly wrong = char_poly(f.with_dimension(d + 1), x, cfg.caps);
            equal = wrong.coefficients == leib;
            got = str(wrong.coefficients);
        } catch (const NotInvertible&) {
        }
        log.control("declared-dimension-wrong", equal, got, str(leib), inputs);
    });
}

// ---------------------------------------------------------------------------
// taylor-equiv

Scalar closed_form_f2(const CentralFunction& f, const Element& a, const Element& b) { return f(a) * f(b) - f(a * b); }

Scalar closed_form_f3(const CentralFunction& f, const Element& a, const Element& b, const Element& c, bool flip) {
    const Scalar last = f(a * c * b);
    return f(a) * f(b) * f(c) - f(a * b) * f(c) - f(a * c) * f(b) - f(b * c) * f(a) + f(a * b * c) +
           (flip ? -last : last);
}

std::vector<CheckSummary> run_taylor(const SuiteConfig& cfg) {
    const Algebra alg = Algebra::matrices(cfg.matrix_size(), cfg.scalar_ring());
    const ElementSpace space{alg, cfg.bound};
    const CentralFunction f = plain_trace(alg);

    return drive(cfg, cfg.trials, [&](unsigned, Rng& rng, TrialLog& log) {
        const auto v = draw(space, 3, rng);
        const auto in2 = [&] { return render(std::span(v).first(2)); };
        const auto in3 = [&] { return render(v); };
        const Scalar r2 = f_rec(f, std::span(v).first(2), cfg.caps);
        const Scalar h2 = closed_form_f2(f, v[0], v[1]);
        log.check("closed-form-f2", r2 == h2, str(r2), str(h2), in2);
        const Scalar r3 = f_rec(f, v, cfg.caps);
        const Scalar h3 = closed_form_f3(f, v[0], v[1], v[2], false);
        log.check("closed-form-f3", r3 == h3, str(r3), str(h3), in3);
        const Scalar flipped = closed_form_f3(f, v[0], v[1], v[2], true);
        log.control("closed-form-f3-sign-flip", r3 == flipped, str(r3), str(flipped), in3);

        for (unsigned n = 1; n <= cfg.max_total_arity; ++n) {
            auto xs = draw(space, n, rng);
            const auto inputs = [&] { return render(xs); };
            const Scalar rec = f_rec(f, xs, cfg.caps);
            const Scalar oracle = taylor_oracle(f, xs, cfg.caps);
            log.check("oracle-equivalence", rec == oracle, str(rec), str(oracle), inputs);

            if (n >= 2) {
                std::vector<Element> shuffled = xs;
                rng.shuffle(shuffled.begin(), shuffled.end());
                FormEvaluator ordered(f, cfg.caps, false);
                const Scalar perm = ordered(shuffled);
                log.check("symmetry", perm == rec, str(perm), str(rec),
                          [&] { return inputs() + " shuffled to " + render(shuffled); });
            }
            if (n >= 2 && n <= 4) {
                const Scalar unsigned_sum = unsigned_cycle_sum(f, xs);
                log.control("unsigned-cycle-sum", rec == unsigned_sum, str(rec), str(unsigned_sum), inputs);
            }
        }
    });
}

// ---------------------------------------------------------------------------
// pseudochar-axioms

void record_axioms(TrialLog& log, const std::string& prefix, const CheckReport& report,
                   const std::function<std::string()>& inputs) {
    for (const CheckEntry& e : report.entries)
        log.check(prefix + e.name, e.passed, e.detail, "holds", inputs);
}

std::vector<CheckSummary> run_axioms(const SuiteConfig& cfg) {
    const ScalarRing ring = cfg.scalar_ring();
    const unsigned d = cfg.dim;
    const Algebra alg = Algebra::matrices(d, ring);
    const ElementSpace space{alg, cfg.bound};
    const CentralFunction f = CentralFunction::trace(alg, d);
    const Algebra group_alg = Algebra::group_algebra(Group::cyclic(d), ring);
    const ElementSpace group_space{group_alg, cfg.bound};
    const CentralFunction regular = CentralFunction::regular_trace(group_alg, d);

    return drive(cfg, cfg.trials, [&](unsigned, Rng& rng, TrialLog& log) {
        const auto samples = draw(space, 4, rng);
        const auto inputs = [&] { return "samples=" + render(samples); };
        record_axioms(log, "axiom:", check_pseudocharacter(f, samples, cfg.caps), inputs);

        for (unsigned k = d + 1; k <= d + 2; ++k) {
            const auto xs = draw(space, k, rng);
            const Scalar v = f_rec(f, xs, cfg.caps);
            log.check("vanishing", v.is_zero(), str(v), "0", [&] { return render(xs); });
        }

        const auto group_samples = draw(group_space, 3, rng);
        record_axioms(log, "group-algebra:", check_pseudocharacter(regular, group_samples, cfg.caps),
                      [&] { return "samples=" + render(group_samples); });

        bool passed = false;
        std::string detail = "(d+1)! not invertible";
        try {
            const CheckReport over = check_pseudocharacter(f.with_dimension(d + 1), samples, cfg.caps);
            passed = over.passed();
            const CheckEntry* unit = over.find("unit");
            detail = unit ? unit->detail : "";
        } catch (const NotInvertible&) {
        }
        log.control("declared-dimension-plus-one", passed, detail, "all axioms hold", inputs);

        const auto ys = draw(space, d, rng);
        const Scalar w = f_rec(f, ys, cfg.caps);
        log.control("vanishing-at-d", w.is_zero(), str(w), "0", [&] { return render(ys); });
    });
}

}  // namespace

// ---------------------------------------------------------------------------
// Reports

bool SuiteReport::passed() const {
    if (checks.empty()) return false;
    bool has_control = false;
    for (const CheckSummary& c : checks) {
        if (!c.ok()) return false;
        has_control = has_control || c.negative_control;
    }
    return has_control;
}

const CheckSummary* SuiteReport::find(const std::string& name) const {
    for (const CheckSummary& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::size_t SuiteReport::evaluations() const {
    std::size_t n = 0;
    for (const CheckSummary& c : checks) n += c.evaluations;
    return n;
}

namespace {

nlohmann::ordered_json observation_json(const Observation& o) {
    nlohmann::ordered_json j;
    j["trial"] = o.trial;
    j["inputs"] = o.inputs;
    j["lhs"] = o.lhs;
    j["rhs"] = o.rhs;
    return j;
}

}  // namespace

nlohmann::ordered_json SuiteReport::body_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["config"] = config.to_json();
    j["pass"] = passed();

    std::size_t held = 0, violated = 0, controls = 0, ok = 0;
    auto checks_json = nlohmann::ordered_json::array();
    auto failures = nlohmann::ordered_json::array();
    for (const CheckSummary& c : checks) {
        held += c.held;
        violated += c.violated();
        if (c.negative_control) ++controls;
        if (c.ok()) ++ok;

        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["negative_control"] = c.negative_control;
        cj["pass"] = c.ok();
        cj["evaluations"] = c.evaluations;
        cj["held"] = c.held;
        cj["violated"] = c.violated();
        if (c.sample) cj["sample"] = observation_json(*c.sample);
        if (c.negative_control) {
            if (!c.failures.empty()) cj["witness"] = observation_json(c.failures.front());
        } else {
            auto fj = nlohmann::ordered_json::array();
            for (const Observation& o : c.failures) fj.push_back(observation_json(o));
            cj["failures"] = std::move(fj);
        }
        checks_json.push_back(std::move(cj));

        if (!c.ok()) {
            nlohmann::ordered_json f;
            f["check"] = c.name;
            f["seed"] = config.seed;
            if (c.negative_control) {
                f["reason"] = "negative control held on every evaluation";
            } else if (!c.failures.empty()) {
                f["trial"] = c.failures.front().trial;
                f["inputs"] = c.failures.front().inputs;
                f["reason"] = std::to_string(c.violated()) + " of " + std::to_string(c.evaluations) + " violated";
            } else {
                f["reason"] = "no evaluations";
            }
            failures.push_back(std::move(f));
        }
    }
    if (controls == 0) {
        nlohmann::ordered_json f;
        f["check"] = "";
        f["reason"] = "suite has no negative control";
        failures.push_back(std::move(f));
    }

    nlohmann::ordered_json counts;
    counts["checks"] = checks.size();
    counts["checks_passed"] = ok;
    counts["negative_controls"] = controls;
    counts["evaluations"] = held + violated;
    counts["held"] = held;
    counts["violated"] = violated;
    j["counts"] = std::move(counts);
    j["checks"] = std::move(checks_json);
    j["failures"] = std::move(failures);
    return j;
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << (passed() ? "PASS " : "FAIL ") << suite << " [" << config.describe() << "] " << evaluations()
        << " evaluations, " << static_cast<long long>(duration_ms) << " ms\n";
    for (const CheckSummary& c : checks) {
        out << "  " << (c.ok() ? "ok   " : "FAIL ") << c.name;
        if (c.negative_control)
            out << " (negative control): violated " << c.violated() << "/" << c.evaluations << "\n";
        else
            out << ": held " << c.held << "/" << c.evaluations << "\n";
        if (!c.ok()) {
            if (!c.negative_control && !c.failures.empty()) {
                const Observation& o = c.failures.front();
                out << "       reproduce: seed " << config.seed << " trial " << o.trial << "\n"
                    << "       inputs: " << o.inputs << "\n"
                    << "       lhs: " << o.lhs << "\n"
                    << "       rhs: " << o.rhs << "\n";
            } else if (c.negative_control) {
                out << "       the identity was expected to break but held every time\n";
            }
        }
    }
    return out.str();
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = suite_name(cfg.suite);
    report.config = cfg;
    switch (cfg.suite) {
        case SuiteKind::Assoc:
            report.checks = cfg.uses_words() ? run_assoc_words(cfg) : run_assoc_matrices(cfg);
            break;
        case SuiteKind::Functoriality: report.checks = run_functoriality(cfg); break;
        case SuiteKind::ProductFormula: report.checks = run_product_formula(cfg); break;
        case SuiteKind::DegreeD: report.checks = run_degree_d(cfg); break;
        case SuiteKind::DetMult: report.checks = run_det_mult(cfg); break;
        case SuiteKind::Charpoly: report.checks = run_charpoly(cfg); break;
        case SuiteKind::TaylorEquiv: report.checks = run_taylor(cfg); break;
        case SuiteKind::PseudocharAxioms: report.checks = run_axioms(cfg); break;
    }
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<SuiteConfig> default_suite_matrix(const SuiteConfig& base) {
    std::vector<SuiteConfig> out;
    for (SuiteKind kind : {SuiteKind::Assoc, SuiteKind::Functoriality}) {
        SuiteConfig c = base;
        c.suite = kind;
        c.ring = "words";
        out.push_back(c);
    }
    for (unsigned d = 1; d <= 3; ++d)
        for (const char* ring : {"rational", "mod:7", "mod:101"})
            for (SuiteKind kind : all_suites()) {
                SuiteConfig c = base;
                c.suite = kind;
                c.ring = ring;
                c.dim = d;
                c.size = d;
                out.push_back(c);
            }
    return out;
}

nlohmann::ordered_json report_body(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json j;
    j["schema"] = "pseudochar-report/1";
    bool pass = !reports.empty();
    std::size_t passed = 0, evaluations = 0;
    auto suites = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) {
        pass = pass && r.passed();
        if (r.passed()) ++passed;
        evaluations += r.evaluations();
        suites.push_back(r.body_json());
    }
    j["pass"] = pass;
    nlohmann::ordered_json counts;
    counts["suites"] = reports.size();
    counts["suites_passed"] = passed;
    counts["suites_failed"] = reports.size() - passed;
    counts["evaluations"] = evaluations;
    j["counts"] = std::move(counts);
    j["suites"] = std::move(suites);
    return j;
}

nlohmann::ordered_json report_document(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json j = report_body(reports);
    nlohmann::ordered_json timing;
    double total = 0;
    auto per_suite = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) {
        total += r.duration_ms;
        nlohmann::ordered_json t;
        t["suite"] = r.suite;
        t["config"] = r.config.describe();
        t["duration_ms"] = r.duration_ms;
        per_suite.push_back(std::move(t));
    }
    timing["total_ms"] = total;
    timing["suites"] = std::move(per_suite);
    j["timing"] = std::move(timing);
    return j;
}

}  // namespace pseudochar::verify
