#pragma once

#include <compare>
#include <string>
#include <variant>

#include "pseudochar/group.hpp"
#include "pseudochar/matrix.hpp"
#include "pseudochar/word.hpp"

namespace pseudochar {

/// Element of a semigroup or algebra: a matrix, a free word, or a
/// group-algebra element.
///
/// Elements of different backends never multiply (BackendMismatch). The
/// ordering ranks backends by tag and otherwise defers to the backend order,
/// which makes it a strict total order suitable for canonical multisets.
class Element {
   public:
    enum class Kind { Matrix, Word, GroupAlgebra };
    using Value = std::variant<Matrix, Word, GroupAlgebraElement>;

    Element(Matrix m) : value_(std::move(m)) {}
    Element(Word w) : value_(std::move(w)) {}
    Element(GroupAlgebraElement g) : value_(std::move(g)) {}

    Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
    const Value& value() const noexcept { return value_; }

    const Matrix& as_matrix() const;
    const Word& as_word() const;
    const GroupAlgebraElement& as_group_algebra() const;

    friend Element operator*(const Element& a, const Element& b);
    /// Addition and scaling exist for matrices and group-algebra elements;
    /// words throw PreconditionFailed.
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    Element operator-() const;
    Element scaled(const Scalar& c) const;

    friend bool operator==(const Element& a, const Element& b) { return (a <=> b) == 0; }
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);

    std::string to_string() const;

   private:
    Value value_;
};

const char* kind_name(Element::Kind kind) noexcept;

}  // namespace pseudochar
