// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudochar/determinant.hpp"
#include "pseudochar/verify/generators.hpp"
#include "pseudochar/verify/oracles.hpp"
#include "pseudochar/verify/suite.hpp"
#include "support.hpp"

#ifndef PSEUDOCHAR_CLI
#error "PSEUDOCHAR_CLI must name the command-line tool"
#endif

using namespace pseudochar;
using namespace pseudochar::verify;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = what;
            pass = false;
            notes.push_back("violated: " + what);
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    if (limit_s > 0 && elapsed >= limit_s) {
        out.notes.push_back("runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(limit_s) + " s");
        if (out.pass) out.detail = "too slow";
        out.pass = false;
    }
    if (!out.pass) ++failures;
    std::ostringstream line;
    line << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << elapsed << " s";
    if (limit_s > 0) line << ", limit " << limit_s << " s";
    line << ")";
    if (!out.pass) line << " -- " << out.detail;
    std::cout << line.str() << "\n";
    for (const auto& n : out.notes) std::cout << "    " << n << "\n";
    std::cout << std::flush;
}

CentralFunction trace_on(std::size_t n, const ScalarRing& ring, std::optional<unsigned> d = std::nullopt) {
    return CentralFunction::trace(Algebra::matrices(n, ring), d);
}

std::vector<Element> tuple(const ScalarRing& ring, std::size_t n, std::size_t count, Rng& rng) {
    return test_support::random_matrices(ring, n, count, rng);
}

/// f^[n] by the signed cycle sum; 1 for n = 0.
Scalar oracle_or_one(const CentralFunction& f, const std::vector<Element>& xs) {
    return xs.empty() ? f.ring().one() : taylor_oracle(f, xs);
}

Multiset letters(char family, unsigned n) { return letter_multiset(family, n); }

// 1 -----------------------------------------------------------------------
Outcome closed_forms() {
    Outcome out;
    Rng rng(1001);
    for (std::size_t n : {2u, 3u}) {
        const CentralFunction f = trace_on(n, ScalarRing::rational());
        for (int t = 0; t < 100; ++t) {
            const auto v = tuple(ScalarRing::rational(), n, 3, rng);
            const Element &a = v[0], &b = v[1], &c = v[2];
            const Scalar two = f(a) * f(b) - f(a * b);
            const Scalar three = f(a) * f(b) * f(c) - f(a * b) * f(c) - f(a * c) * f(b) - f(b * c) * f(a) +
                                 f(a * b * c) + f(a * c * b);
            out.require(f_rec(f, std::span(v).first(2)) == two, "f^[2] on " + std::to_string(n) + "x" + std::to_string(n));
            out.require(f_rec(f, v) == three, "f^[3] on " + std::to_string(n) + "x" + std::to_string(n));
        }
    }
    return out;
}

// 2 -----------------------------------------------------------------------
Outcome ring_structure() {
    Outcome out;
    const ProductBudget budget;
    bool commutative = true;
    std::string witness;

    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; b <= 3; ++b) {
            const Multiset x = letters('x', a), y = letters('y', b);
            const FormalSum xy = multiset_product(x, y, budget);
            out.require(multiset_product(x, Multiset{}, budget) == FormalSum(x), "right unit");
            out.require(multiset_product(Multiset{}, y, budget) == FormalSum(y), "left unit");
            const FormalSum yx = multiset_product(y, x, budget);
            if (xy != yx && commutative) {
                commutative = false;
                witness = x.to_string() + " × " + y.to_string() + " = " + xy.to_string() + ", but " + y.to_string() +
                          " × " + x.to_string() + " = " + yx.to_string();
            }
            for (unsigned c = 0; c <= 3; ++c) {
                const FormalSum fz(letters('z', c));
                const FormalSum lhs = formal_product(xy, fz, budget);
                const FormalSum rhs = formal_product(FormalSum(x), multiset_product(y, letters('z', c), budget), budget);
                out.require(lhs == rhs, "associativity on letters " + std::to_string(a) + "," + std::to_string(b) +
                                            "," + std::to_string(c));
            }
        }
    {
        const Multiset x = letters('x', 2), y = letters('y', 2), z = letters('z', 2);
        const FormalSum lhs = formal_product(multiset_product(x, y), FormalSum(z));
        const FormalSum rhs = formal_product(FormalSum(x), multiset_product(y, z));
        out.require(lhs == rhs, "associativity for (2,2,2)");
        out.notes.push_back("(2,2,2): both sides have " + std::to_string(lhs.size()) + " terms and agree");
    }

    Rng rng(2002);
    const ElementSpace space{Algebra::matrices(2, ScalarRing::rational()), 5};
    bool matrix_commutative = true;
    for (int t = 0; t < 100; ++t) {
        const auto draw = [&] { return random_multiset(space, static_cast<std::size_t>(rng.uniform(0, 3)), rng); };
        const Multiset x = draw(), y = draw(), z = draw();
        const FormalSum lhs = formal_product(multiset_product(x, y), FormalSum(z));
        const FormalSum rhs = formal_product(FormalSum(x), multiset_product(y, z));
        out.require(lhs == rhs, "associativity on random matrix triple " + std::to_string(t));
        out.require(multiset_product(x, Multiset{}) == FormalSum(x), "unit on random matrices");
        matrix_commutative = matrix_commutative && multiset_product(x, y) == multiset_product(y, x);
    }

    const struct {
        unsigned n, m;
        unsigned long expected;
    } counts[] = {{2, 1, 3}, {2, 2, 7}, {3, 3, 34}};
    for (const auto& c : counts) {
        out.require(partial_bijections(c.n, c.m).size() == c.expected, "enumerated partial bijection count");
        out.require(test_support::brute_force_partial_injections(c.n, c.m) == c.expected, "brute-force count");
        out.require(partial_bijection_count(c.n, c.m) == c.expected, "count formula");
    }

    if (out.pass) out.notes.push_back("unit law, associativity (exhaustive + 100 random triples) and counts 3, 7, 34 hold");
    out.require(commutative, "commutativity: x × y != y × x when H is a free semigroup, e.g. " + witness);
    if (!matrix_commutative) out.notes.push_back("commutativity also fails for random 2x2 matrix multisets");
    return out;
}

// 3 -----------------------------------------------------------------------
Outcome functoriality() {
    Outcome out;
    Rng rng(3003);
    const ElementSpace words{Algebra::words(), 0, 2, 3, 'x'};
    for (const auto& [n, ring] : {std::pair{2u, ScalarRing::rational()}, std::pair{3u, ScalarRing::modular(7)}}) {
        const ElementSpace target{Algebra::matrices(n, ring), 5};
        for (int t = 0; t < 100; ++t) {
            const FormalSum s = random_formal_sum(words, 2, 3, 3, rng);
            const FormalSum u = random_formal_sum(words, 2, 3, 3, rng);
            SemigroupHom psi;
            for (std::uint32_t i = 1; i <= 3; ++i) psi.assign(Letter{'x', i}, random_element(target, rng));
            out.require(map_formal(psi, formal_product(s, u)) == formal_product(map_formal(psi, s), map_formal(psi, u)),
                        "functoriality into " + Algebra::matrices(n, ring).to_string());
        }
    }
    return out;
}

// 4 -----------------------------------------------------------------------
Outcome product_formula() {
    Outcome out;
    Rng rng(4004);
    const std::pair<std::size_t, ScalarRing> cases[] = {
        {2, ScalarRing::rational()}, {3, ScalarRing::rational()}, {2, ScalarRing::modular(101)}};
    std::size_t checked = 0;
    for (const auto& [size, ring] : cases) {
        const CentralFunction f = trace_on(size, ring);
        for (unsigned n = 0; n <= 6; ++n)
            for (unsigned m = 0; n + m <= 6; ++m)
                for (int t = 0; t < 50; ++t) {
                    const auto xs = tuple(ring, size, n, rng), ys = tuple(ring, size, m, rng);
                    const Scalar lhs = f_hat(f, multiset_product(Multiset(xs), Multiset(ys)));
                    const Scalar rhs = oracle_or_one(f, xs) * oracle_or_one(f, ys);
                    out.require(lhs == rhs, "product formula on " + Algebra::matrices(size, ring).to_string() +
                                                " for (" + std::to_string(n) + "," + std::to_string(m) + ")");
                    ++checked;
                }
    }
    out.notes.push_back(std::to_string(checked) + " tuples; right side by the signed cycle sum");
    return out;
}

// 5 -----------------------------------------------------------------------
Outcome degree_d() {
    Outcome out;
    for (unsigned d = 1; d <= 3; ++d)
        for (const char* ring : {"rational", "mod:7"}) {
            SuiteConfig cfg;
            cfg.suite = SuiteKind::DegreeD;
            cfg.ring = ring;
            cfg.dim = d;
            cfg.trials = 100;
            cfg.seed = 5005;
            const SuiteReport r = run_suite(cfg);
            const std::string where = "d=" + std::to_string(d) + " " + ring;
            const CheckSummary* main = r.find("degree-d-product");
            const CheckSummary* control = r.find("declared-dimension-wrong");
            out.require(main && main->evaluations == 100 && main->held == 100, "degree-d formula, " + where);
            out.require(control && control->negative_control && control->violated() > 0,
                        "declared-wrong control did not fail, " + where);
            out.require(r.passed(), "suite " + where);
        }
    return out;
}

// 6 -----------------------------------------------------------------------
Outcome determinant() {
    Outcome out;
    Rng rng(6006);
    for (const ScalarRing ring : {ScalarRing::rational(), ScalarRing::modular(101)})
        for (unsigned d = 1; d <= 3; ++d) {
            const CentralFunction f = trace_on(d, ring, d);
            const std::string where = Algebra::matrices(d, ring).to_string();
            for (int t = 0; t < 200; ++t) {
                const auto v = tuple(ring, d, 2, rng);
                const Scalar dx = det_from_pseudocharacter(f, v[0]);
                out.require(dx == leibniz_det(v[0].as_matrix()), "D_f = Leibniz on " + where);
                out.require(det_from_pseudocharacter(f, v[0] * v[1]) == dx * det_from_pseudocharacter(f, v[1]),
                            "multiplicativity on " + where);
                const CharPoly cp = char_poly(f, v[0]);
                out.require(cp.coefficients == leibniz_char_poly(v[0].as_matrix()), "char_poly = Leibniz on " + where);
                out.require(cp.coefficients.size() == d + 1 && -cp.coefficients[d - 1] == f(v[0]),
                            "trace round trip on " + where);
            }
        }
    return out;
}

// 7 -----------------------------------------------------------------------
Outcome lemma_ones() {
    Outcome out;
    Rng rng(7007);
    for (std::size_t size : {2u, 3u}) {
        const ScalarRing q = ScalarRing::rational();
        const CentralFunction f = trace_on(size, q);
        const Element one = Matrix::identity(size, q);
        const Scalar f1 = f(one);
        for (int t = 0; t < 100; ++t) {
            const Element x = test_support::random_matrix(q, size, rng);
            for (unsigned n = 1; n <= 6; ++n) {
                std::vector<Element> args(n, one);
                args.front() = x;
                Scalar rhs = f(x);
                for (unsigned i = 1; i < n; ++i) rhs *= f1 - q.from_int(i);
                out.require(f_rec(f, args) == rhs, "lemma on M" + std::to_string(size) + ", n=" + std::to_string(n));
            }
        }
    }
    return out;
}

// 8 -----------------------------------------------------------------------
Outcome oracle_equivalence() {
    Outcome out;
    Rng rng(8008);
    for (const ScalarRing ring : {ScalarRing::rational(), ScalarRing::modular(101)})
        for (std::size_t size : {2u, 3u}) {
            const CentralFunction f = trace_on(size, ring);
            for (unsigned n = 1; n <= 6; ++n)
                for (int t = 0; t < 50; ++t) {
                    const auto xs = tuple(ring, size, n, rng);
                    out.require(f_rec(f, xs) == taylor_oracle(f, xs),
                                "f_rec vs cycle sum on " + Algebra::matrices(size, ring).to_string() + ", n=" +
                                    std::to_string(n));
                }
        }
    return out;
}

// 9 -----------------------------------------------------------------------
Outcome vanishing() {
    Outcome out;
    Rng rng(9009);
    for (const ScalarRing ring : {ScalarRing::rational(), ScalarRing::modular(101)})
        for (unsigned d = 1; d <= 3; ++d) {
            const CentralFunction f = trace_on(d, ring, d);
            for (unsigned k = d + 1; k <= d + 2; ++k)
                for (int t = 0; t < 100; ++t)
                    out.require(f_rec(f, tuple(ring, d, k, rng)).is_zero(),
                                "f^[" + std::to_string(k) + "] on " + Algebra::matrices(d, ring).to_string());
        }
    return out;
}

// 10 ----------------------------------------------------------------------
nlohmann::json body_of(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing report " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    j.erase("timing");
    return j;
}

Outcome reproducibility() {
    Outcome out;
    const std::string cli = PSEUDOCHAR_CLI;
    std::string bodies[2];
    for (int run = 0; run < 2; ++run) {
        const std::string path = "acceptance_report_" + std::to_string(run) + ".json";
        const std::string cmd = "\"" + cli + "\" check all --seed 42 --quiet --json " + path;
        const int status = std::system(cmd.c_str());
        out.require(status == 0, "check all exited with status " + std::to_string(status));
        bodies[run] = body_of(path).dump(2);
        std::remove(path.c_str());
    }
    out.require(!bodies[0].empty() && bodies[0] == bodies[1], "report bodies differ between runs");
    out.notes.push_back("report body: " + std::to_string(bodies[0].size()) + " bytes, identical across runs");
    return out;
}

}  // namespace

int main() {
    report(1, "f^[2], f^[3] equal the closed expressions on 100 tuples, 2x2 and 3x3", 5, closed_forms);
    report(2, "M(H): unit law, commutativity, associativity; counts 3, 7, 34", 30, ring_structure);
    report(3, "functoriality into M2(Q) and M3(Z/7), 100 formal sums each", 0, functoriality);
    report(4, "product formula, n+m <= 6, M2(Q), M3(Q), M2(Z/101), 50 tuples each", 60, product_formula);
    report(5, "degree-d formula, d = 1..3, rational and mod 7, 100 tuples; wrong d fails", 0, degree_d);
    report(6, "D_f = det, multiplicativity, char_poly, trace round trip; 200 matrices", 60, determinant);
    report(7, "f^[n](x,1,..,1) = f(x) prod (f(1)-i), n <= 6, M2 and M3, 100 x", 0, lemma_ones);
    report(8, "recursion = cycle-sum oracle, n <= 6, 50 tuples per n, both backends", 0, oracle_equivalence);
    report(9, "f^[k] = 0 for d < k <= d+2, d = 1..3, 100 tuples each", 0, vanishing);
    report(10, "check all --seed 42 twice gives identical report bodies", 0, reproducibility);
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}
