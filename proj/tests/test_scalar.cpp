#include <string>
#include <vector>

#include "doctest.h"
#include "pseudochar/errors.hpp"
#include "pseudochar/scalar.hpp"
#include "pseudochar/verify/rng.hpp"

using namespace pseudochar;

namespace {

std::vector<Scalar> samples(const ScalarRing& ring, std::uint64_t seed) {
    verify::Rng rng(seed);
    std::vector<Scalar> out;
    for (int i = 0; i < 6; ++i) {
        const auto num = rng.uniform(-30, 30);
        const auto den = rng.uniform(1, 9);
        if (ring.kind() == ScalarRing::Kind::Polynomial) {
            const Scalar u(Polynomial::variable("u"));
            out.push_back(u.times(num) + ring.from_int(den));
        } else if (ring.kind() == ScalarRing::Kind::Modular) {
            out.push_back(ring.from_int(num));
        } else {
            out.push_back(ring.from_rational(mpq_class(num, den)));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("ring axioms hold exactly on every backend") {
    for (const ScalarRing ring : {ScalarRing::rational(), ScalarRing::modular(7), ScalarRing::modular(101),
                                  ScalarRing::modular((std::uint64_t{1} << 61) - 1), ScalarRing::polynomial()}) {
        CAPTURE(ring.to_string());
        const auto xs = samples(ring, 7);
        const Scalar zero = ring.zero(), one = ring.one();
        for (const Scalar& a : xs) {
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a + (-a) == zero);
            CHECK(a * zero == zero);
            for (const Scalar& b : xs) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const Scalar& c : xs) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
    CHECK((Scalar::rational(1, 2) + Scalar::rational(1, 3)).to_string() == "5/6");
    CHECK(Scalar::rational(4, -6).to_string() == "-2/3");
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(3, 4).inverse() == Scalar::rational(4, 3));
    CHECK_THROWS_AS(Scalar::rational(0).inverse(), NotInvertible);
}

TEST_CASE("residues live in [0, m)") {
    const ScalarRing z7 = ScalarRing::modular(7);
    CHECK(z7.from_int(3) * z7.from_int(5) == z7.one());
    CHECK(z7.from_int(-1).to_string() == "6");
    CHECK(z7.from_int(-15).to_string() == "6");
    CHECK(z7.from_int(3).inverse() == z7.from_int(5));
    CHECK(z7.from_rational(mpq_class(1, 2)) == z7.from_int(4));
    CHECK_THROWS_AS(ScalarRing::modular(6).from_int(2).inverse(), NotInvertible);
    CHECK(Residue(-8, 5).value() == 2);

    // Products near 2^62 must not overflow.
    const std::uint64_t big = std::uint64_t{1} << 62;
    const ScalarRing zb = ScalarRing::modular(big);
    const Scalar a = zb.from_int(-1);
    CHECK(a * a == zb.one());
}

TEST_CASE("polynomial backend") {
    const Scalar u(Polynomial::variable("u"));
    CHECK((u * u).to_string() == "u^2");
    const Scalar a(Polynomial::variable("a")), b(Polynomial::variable("b")), c(Polynomial::variable("c")),
        d(Polynomial::variable("d"));
    CHECK((a * d - b * c).to_string() == "a*d - b*c");
    CHECK((a - a).is_zero());
    CHECK(ScalarRing::polynomial().from_int(2).inverse() == ScalarRing::polynomial().from_rational(mpq_class(1, 2)));
    CHECK_THROWS_AS(u.inverse(), NotInvertible);
}

TEST_CASE("inverse of d!") {
    CHECK(inverse_of_factorial(3, ScalarRing::rational()) == Scalar::rational(1, 6));
    CHECK(inverse_of_factorial(3, ScalarRing::modular(7)) == ScalarRing::modular(7).from_int(6));
    CHECK(inverse_of_factorial(1, ScalarRing::modular(2)) == ScalarRing::modular(2).one());
    try {
        (void)inverse_of_factorial(3, ScalarRing::modular(6));
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
        CHECK(std::string(e.what()) == "3! not invertible mod 6");
    }
    CHECK_THROWS_AS((void)inverse_of_factorial(0, ScalarRing::rational()), PreconditionFailed);
    CHECK(factorial(6) == 720);
}

TEST_CASE("mixing backends is an error") {
    CHECK_THROWS_AS(Scalar::rational(1) + ScalarRing::modular(7).one(), BackendMismatch);
    CHECK_THROWS_AS(ScalarRing::modular(5).one() * ScalarRing::modular(7).one(), ModulusMismatch);
}

TEST_CASE("ring names parse") {
    CHECK(ScalarRing::parse("rational") == ScalarRing::rational());
    CHECK(ScalarRing::parse("mod:101") == ScalarRing::modular(101));
    CHECK(ScalarRing::parse("mod:101").to_string() == "mod:101");
    CHECK_THROWS_AS(ScalarRing::parse("mod:1"), ParseError);
    CHECK_THROWS_AS(ScalarRing::parse("mod:x"), ParseError);
    CHECK_THROWS_AS(ScalarRing::parse("reals"), ParseError);
    CHECK_THROWS_AS(ScalarRing::modular(1), PreconditionFailed);
}

TEST_CASE("scalar order is a strict total order") {
    std::vector<Scalar> xs = samples(ScalarRing::rational(), 3);
    for (const auto& s : samples(ScalarRing::modular(7), 4)) xs.push_back(s);
    for (const auto& s : samples(ScalarRing::polynomial(), 5)) xs.push_back(s);
    for (const Scalar& a : xs) {
        CHECK_FALSE(a < a);
        for (const Scalar& b : xs) {
            CHECK(((a < b) + (b < a) + (a == b)) == 1);
            for (const Scalar& c : xs)
                if (a < b && b < c) CHECK(a < c);
        }
    }
}
