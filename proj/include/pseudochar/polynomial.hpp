#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pseudochar {

/// Product of named variables with positive exponents, sorted by variable name.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

/// Sparse commutative polynomial in named variables with rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal iff their
/// term maps are equal.
class Polynomial {
   public:
    using Terms = std::map<Monomial, mpq_class>;

    Polynomial() = default;
    explicit Polynomial(const mpq_class& constant);
    static Polynomial variable(const std::string& name);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True when the polynomial has no variable terms (zero counts as constant).
    bool is_constant() const noexcept;
    /// Constant coefficient (the coefficient of the empty monomial).
    mpq_class constant_term() const;
    unsigned total_degree() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial scaled(const mpq_class& c) const;

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.terms_ == rhs.terms_; }
    /// Lexicographic comparison of the sorted term lists.
    friend std::strong_ordering operator<=>(const Polynomial& lhs, const Polynomial& rhs);

    /// Renders terms by descending total degree, e.g. `a*d - b*c`.
    std::string to_string() const;

   private:
    void add_term(const Monomial& m, const mpq_class& c);

    Terms terms_;
};

}  // namespace pseudochar
