#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "pseudochar/polynomial.hpp"

namespace pseudochar {

/// Integer modulo m, stored as its representative in [0, m).
class Residue {
   public:
    Residue(std::int64_t value, std::uint64_t modulus);

    /// Skips reduction and modulus validation; `value < modulus` must already hold.
    static Residue reduced(std::uint64_t value, std::uint64_t modulus) noexcept { return Residue(value, modulus, 0); }

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue&, const Residue&) = default;

   private:
    Residue(std::uint64_t value, std::uint64_t modulus, int) noexcept : value_(value), modulus_(modulus) {}

    std::uint64_t value_;
    std::uint64_t modulus_;
};

class Scalar;

/// Describes one of the scalar backends: Q, Z/m, or Q[named variables].
class ScalarRing {
   public:
    enum class Kind { Rational, Modular, Polynomial };

    static ScalarRing rational() noexcept { return ScalarRing(Kind::Rational, 0); }
    static ScalarRing modular(std::uint64_t modulus);
    static ScalarRing polynomial() noexcept { return ScalarRing(Kind::Polynomial, 0); }
    /// Parses `rational`, `poly` or `mod:<m>`.
    static ScalarRing parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_integer(const mpz_class& n) const;
    /// Maps p/q into the ring; in Z/m this needs q invertible mod m.
    Scalar from_rational(const mpq_class& q) const;

    std::string to_string() const;

    friend bool operator==(const ScalarRing&, const ScalarRing&) = default;

   private:
    ScalarRing(Kind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

/// Element of the base ring. Exact arithmetic only.
///
/// Binary operations require both operands to come from the same ring and
/// throw BackendMismatch / ModulusMismatch otherwise. The ordering is a strict
/// total order: rationals by value, residues by representative, polynomials by
/// their sorted term list, and distinct backends by backend tag.
class Scalar {
   public:
    using Value = std::variant<mpq_class, Residue, Polynomial>;

    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(mpq_class q);
    explicit Scalar(Residue r) : value_(r) {}
    explicit Scalar(Polynomial p) : value_(std::move(p)) {}

    static Scalar rational(long num, long den = 1);

    const Value& value() const noexcept { return value_; }
    ScalarRing ring() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /// Multiplication by an integer; never changes the backend.
    Scalar times(std::int64_t n) const;
    Scalar pow(unsigned e) const;
    /// Multiplicative inverse; throws NotInvertible when none exists.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string to_string() const;

   private:
    Value value_;
};

/// (d!)^{-1} in the given ring, or NotInvertible when gcd(d!, m) != 1.
Scalar inverse_of_factorial(unsigned d, const ScalarRing& ring);

mpz_class factorial(unsigned n);

}  // namespace pseudochar
