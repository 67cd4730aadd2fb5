#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "pseudochar/verify/generators.hpp"
#include "pseudochar/verify/rng.hpp"
#include "pseudochar/verify/suite.hpp"

using namespace pseudochar;
using namespace pseudochar::verify;

TEST_CASE("rng streams are deterministic and independent per trial") {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        CHECK(x == b.next());
        differs = differs || x != c.next();
    }
    CHECK(differs);

    Rng t1 = Rng::for_trial(42, 7), t2 = Rng::for_trial(42, 7), t3 = Rng::for_trial(42, 8);
    CHECK(t1.next() == t2.next());
    CHECK(t1.next() != t3.next());

    // The first output of mt19937_64 under its default seed is fixed by the standard.
    Rng fixed(5489);
    CHECK(fixed.next() == 14514284786278117030ULL);
}

TEST_CASE("bounded draws stay in range and hit both ends") {
    Rng rng(1);
    bool lo = false, hi = false;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.uniform(-5, 5);
        CHECK(v >= -5);
        CHECK(v <= 5);
        lo = lo || v == -5;
        hi = hi || v == 5;
    }
    CHECK(lo);
    CHECK(hi);
    CHECK(rng.uniform(3, 3) == 3);
}

TEST_CASE("random elements respect their space") {
    Rng rng(2);
    const ElementSpace m2{Algebra::matrices(2, ScalarRing::rational()), 5};
    for (int i = 0; i < 50; ++i) {
        const Matrix m = random_element(m2, rng).as_matrix();
        for (const Scalar& s : m.entries()) {
            CHECK(s >= Scalar::rational(-5));
            CHECK(s <= Scalar::rational(5));
        }
    }
    const ElementSpace zero{Algebra::matrices(3, ScalarRing::modular(7)), 0};
    for (int i = 0; i < 5; ++i) CHECK(random_element(zero, rng) == Element(Matrix::zero(3, ScalarRing::modular(7))));

    const ElementSpace words{Algebra::words(), 0, 2, 3, 'x'};
    for (int i = 0; i < 50; ++i) {
        const Word w = random_element(words, rng).as_word();
        CHECK(w.length() >= 1);
        CHECK(w.length() <= 2);
        for (const Letter& l : w.letters()) {
            CHECK(l.family == 'x');
            CHECK(l.index >= 1);
            CHECK(l.index <= 3);
        }
    }

    Rng r1(9), r2(9);
    CHECK(random_elements(m2, 5, r1) == random_elements(m2, 5, r2));
}

TEST_CASE("config validation") {
    SuiteConfig cfg;
    cfg.suite = SuiteKind::DegreeD;
    cfg.dim = 3;
    cfg.ring = "mod:6";
    try {
        cfg.validate();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()) == "3! not invertible mod 6");
    }
    cfg.ring = "mod:7";
    CHECK_NOTHROW(cfg.validate());
    cfg.ring = "words";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.suite = SuiteKind::Assoc;
    CHECK_NOTHROW(cfg.validate());
    cfg.ring = "reals";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    SuiteConfig zero_trials;
    zero_trials.trials = 0;
    CHECK_THROWS_AS(zero_trials.validate(), ConfigError);
    SuiteConfig zero_bound;
    zero_bound.bound = 0;
    CHECK_THROWS_AS(zero_bound.validate(), ConfigError);
    SuiteConfig mismatch;
    mismatch.suite = SuiteKind::DetMult;
    mismatch.size = 3;
    mismatch.dim = 2;
    CHECK_THROWS_AS(mismatch.validate(), ConfigError);

    CHECK_THROWS_AS(parse_suite("nope"), ConfigError);
    CHECK(parse_suite("taylor-equiv") == SuiteKind::TaylorEquiv);
    CHECK(std::string(suite_name(SuiteKind::PseudocharAxioms)) == "pseudochar-axioms");
}

TEST_CASE("config files") {
    const std::string path = "test_verify_config.txt";
    {
        std::ofstream out(path);
        out << "# comment\nsuite = det-mult\nring = mod:101\n\ndim = 3  # trailing\ntrials=7\nseed = 9\n";
    }
    SuiteConfig cfg;
    load_config_file(path, cfg);
    CHECK(cfg.suite == SuiteKind::DetMult);
    CHECK(cfg.ring == "mod:101");
    CHECK(cfg.dim == 3);
    CHECK(cfg.matrix_size() == 3);
    CHECK(cfg.trials == 7);
    CHECK(cfg.seed == 9);
    {
        std::ofstream out(path);
        out << "colour = blue\n";
    }
    CHECK_THROWS_AS(load_config_file(path, cfg), ConfigError);
    {
        std::ofstream out(path);
        out << "trials = many\n";
    }
    CHECK_THROWS_AS(load_config_file(path, cfg), ConfigError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config_file("does/not/exist", cfg), ConfigError);
}

TEST_CASE("suites are deterministic and independent of threading") {
    SuiteConfig cfg;
    cfg.suite = SuiteKind::TaylorEquiv;
    cfg.trials = 6;
    cfg.max_total_arity = 4;
    cfg.threads = 1;
    const SuiteReport a = run_suite(cfg);
    cfg.threads = 3;
    const SuiteReport b = run_suite(cfg);
    CHECK(a.passed());
    CHECK(a.body_json().dump() == b.body_json().dump());
    cfg.seed = 43;
    CHECK(run_suite(cfg).body_json().dump() != a.body_json().dump());
}

TEST_CASE("reports: negative controls must fail for the suite to pass") {
    SuiteConfig cfg;
    cfg.suite = SuiteKind::DegreeD;
    cfg.trials = 5;
    const SuiteReport r = run_suite(cfg);
    CHECK(r.passed());
    const CheckSummary* control = r.find("declared-dimension-wrong");
    REQUIRE(control != nullptr);
    CHECK(control->negative_control);
    CHECK(control->violated() > 0);
    CHECK(control->ok());
    REQUIRE_FALSE(control->failures.empty());
    CHECK_FALSE(control->failures.front().inputs.empty());

    CheckSummary never_broken;
    never_broken.negative_control = true;
    never_broken.evaluations = 3;
    never_broken.held = 3;
    CHECK_FALSE(never_broken.ok());
    SuiteReport tampered = r;
    tampered.checks.push_back(never_broken);
    CHECK_FALSE(tampered.passed());

    const auto j = r.body_json();
    for (const char* key : {"suite", "config", "pass", "counts", "checks", "failures"}) CHECK(j.contains(key));
    CHECK(j["checks"][0].contains("sample"));
    CHECK(j["counts"]["evaluations"].get<std::size_t>() == r.evaluations());
}

TEST_CASE("default matrix covers every suite, dimension and backend") {
    SuiteConfig base;
    base.trials = 3;
    const auto configs = default_suite_matrix(base);
    CHECK(configs.size() == 2 + 3 * 3 * all_suites().size());
    for (const auto& c : configs) {
        CHECK_NOTHROW(c.validate());
        CHECK(c.trials == 3);
    }
    const auto doc = report_document({});
    CHECK(doc["schema"] == "pseudochar-report/1");
    CHECK(doc.contains("timing"));
    CHECK_FALSE(report_body({}).contains("timing"));
}
