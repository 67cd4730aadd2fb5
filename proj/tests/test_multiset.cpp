#include <string>
#include <vector>

#include "doctest.h"
#include "pseudochar/errors.hpp"
#include "pseudochar/multiset.hpp"
#include "pseudochar/verify/generators.hpp"
#include "support.hpp"

using namespace pseudochar;

namespace {

Element w(const char* text) { return Word::parse(text); }

Multiset ms(std::initializer_list<const char*> words) {
    std::vector<Element> entries;
    for (const char* t : words) entries.push_back(w(t));
    return Multiset(std::move(entries));
}

std::string render(const std::vector<PartialBijection>& alphas) {
    std::string out;
    for (const auto& a : alphas) out += a.to_string() + ";";
    return out;
}

}  // namespace

TEST_CASE("multisets are canonical") {
    CHECK(ms({"x2", "x1", "x2"}) == ms({"x2", "x2", "x1"}));
    CHECK(ms({"x1", "x2"}) != ms({"x1", "x2", "x2"}));
    CHECK(Multiset{}.empty());
    CHECK(ms({"x2", "x1*y1"}).to_string() == "{x1*y1,x2}");
    CHECK(Multiset{}.to_string() == "{}");
    CHECK_THROWS_AS(Multiset({w("x1"), test_support::mat(ScalarRing::rational(), 1, {1})}), BackendMismatch);
}

TEST_CASE("partial bijection counts") {
    CHECK(partial_bijection_count(0, 5) == 1);
    CHECK(partial_bijections(0, 5).size() == 1);
    CHECK(partial_bijection_count(2, 1) == 3);
    CHECK(partial_bijection_count(2, 2) == 7);
    CHECK(partial_bijection_count(3, 3) == 34);
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned m = 0; m <= 4; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const unsigned long brute = test_support::brute_force_partial_injections(n, m);
            CHECK(partial_bijection_count(n, m) == brute);
            CHECK(partial_bijections(n, m).size() == brute);
        }
}

TEST_CASE("partial bijections enumerate by rank, then subsets, then images") {
    CHECK(render(partial_bijections(2, 1)) == "{};{(1,1)};{(2,1)};");
    CHECK(render(partial_bijections(2, 2)) ==
          "{};{(1,1)};{(1,2)};{(2,1)};{(2,2)};{(1,1),(2,2)};{(1,2),(2,1)};");
}

TEST_CASE("partial bijections validate") {
    CHECK_NOTHROW(PartialBijection(2, 2, {{2, 1}, {1, 2}}));
    CHECK(PartialBijection(2, 2, {{2, 1}, {1, 2}}).pairs().front().first == 1);
    CHECK_THROWS(PartialBijection(2, 2, {{1, 1}, {2, 1}}));
    CHECK_THROWS(PartialBijection(2, 2, {{3, 1}}));
    CHECK_THROWS(PartialBijection(2, 2, {{1, 1}, {1, 2}}));
}

TEST_CASE("product along a partial bijection") {
    const Multiset x = ms({"x1", "x2"}), y = ms({"y1"}), z = ms({"z1", "z2"});
    CHECK(product_along(x, y, PartialBijection(2, 1, {})) == ms({"x1", "x2", "y1"}));
    CHECK(product_along(x, y, PartialBijection(2, 1, {{1, 1}})) == ms({"x1*y1", "x2"}));
    CHECK(product_along(x, z, PartialBijection(2, 2, {{1, 2}, {2, 1}})) == ms({"x1*z2", "x2*z1"}));
    CHECK(product_along(x, z, PartialBijection(2, 2, {{1, 2}})).size() == 3);
    CHECK_THROWS_AS(product_along(x, z, PartialBijection(2, 1, {})), DimensionMismatch);
}

TEST_CASE("golden product rendering") {
    const FormalSum p = multiset_product(ms({"x1", "x2"}), ms({"y1"}));
    CHECK(p.to_string() == "1*{x1,x2,y1} + 1*{x1*y1,x2} + 1*{x1,x2*y1}");
    CHECK((-p).to_string() == "-1*{x1,x2,y1} - 1*{x1*y1,x2} - 1*{x1,x2*y1}");
    CHECK(FormalSum().to_string() == "0");

    const FormalSum q = multiset_product(ms({"x1", "x2"}), ms({"z1", "z2"}));
    CHECK(q.size() == 7);
    CHECK(q.coefficient(ms({"x1*z2", "x2*z1"})) == 1);
    CHECK(q.coefficient(ms({"x1*z1", "x2", "z2"})) == 1);
    CHECK(q.coefficient(ms({"x1", "x2", "z1", "z2"})) == 1);
}

TEST_CASE("empty multiset is the unit") {
    const Multiset x = ms({"x1", "x2", "x2"});
    CHECK(multiset_product(x, Multiset{}) == FormalSum(x));
    CHECK(multiset_product(Multiset{}, x) == FormalSum(x));
    const FormalSum s = FormalSum(x, 3) + FormalSum(ms({"y1"}), -2);
    CHECK(formal_product(s, FormalSum::unit()) == s);
    CHECK(formal_product(FormalSum::unit(), s) == s);
}

TEST_CASE("formal products are bilinear") {
    const FormalSum a(ms({"x1"}), 2), b(ms({"y1"}), 3);
    const FormalSum p = formal_product(a, b);
    CHECK(p.to_string() == "6*{x1,y1} + 6*{x1*y1}");
    CHECK((formal_product(a - a, b)).is_zero());
    const FormalSum c(ms({"z1", "z2"}), -1);
    CHECK(formal_product(a + c, b) == formal_product(a, b) + formal_product(c, b));
}

TEST_CASE("repeated entries produce multiplicities") {
    // {x1, x1} × {y1}: both matchings give {x1*y1, x1}.
    const FormalSum p = multiset_product(ms({"x1", "x1"}), ms({"y1"}));
    CHECK(p.coefficient(ms({"x1*y1", "x1"})) == 2);
    CHECK(p.coefficient(ms({"x1", "x1", "y1"})) == 1);
}

TEST_CASE("product is independent of the entry ordering") {
    const Multiset x = ms({"x1", "x2", "x3"}), y = ms({"y1", "y2"});
    std::vector<Element> xs = x.entries(), ys = y.entries();
    const FormalSum canonical = multiset_product(x, y);
    verify::Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        rng.shuffle(xs.begin(), xs.end());
        rng.shuffle(ys.begin(), ys.end());
        CHECK(multiset_product(xs, ys) == canonical);
    }
}

TEST_CASE("budget guards the product") {
    const Multiset x = verify::letter_multiset('x', 6), y = verify::letter_multiset('y', 6);
    CHECK_THROWS_AS(multiset_product(x, y, ProductBudget{1000}), BudgetExceeded);
    CHECK_THROWS_AS(formal_product(FormalSum(x), FormalSum(y), ProductBudget{1000}), BudgetExceeded);
    CHECK_NOTHROW(multiset_product(verify::letter_multiset('x', 2), verify::letter_multiset('y', 2), ProductBudget{7}));
}

TEST_CASE("mapping merges collisions") {
    const ScalarRing q = ScalarRing::rational();
    const Element m = test_support::mat(q, 2, {1, 1, 0, 1});
    SemigroupHom psi;
    psi.assign(Letter{'x', 1}, m);
    psi.assign(Letter{'x', 2}, m);
    const FormalSum s = FormalSum(ms({"x1"})) + FormalSum(ms({"x2"}));
    CHECK(map_formal(psi, s) == FormalSum(Multiset{m}, 2));
    CHECK(map_formal(psi, FormalSum::unit()) == FormalSum::unit());
    CHECK(map_formal(psi, FormalSum(ms({"x1", "x1"}), 1) - FormalSum(ms({"x1", "x2"}), 1)).is_zero());
    CHECK_THROWS_AS(map_formal(psi, FormalSum(ms({"y1"}))), UnknownLetter);
}
