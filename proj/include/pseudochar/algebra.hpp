#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "pseudochar/element.hpp"

namespace pseudochar {

/// Describes which semigroup/algebra elements live in: M_n(A), the free
/// semigroup on letters, or the group algebra A[G].
class Algebra {
   public:
    static Algebra matrices(std::size_t n, const ScalarRing& ring);
    static Algebra words();
    static Algebra group_algebra(std::shared_ptr<const Group> group, const ScalarRing& ring);

    Element::Kind kind() const noexcept { return kind_; }
    /// Scalar ring; PreconditionFailed for the free semigroup.
    const ScalarRing& ring() const;
    std::size_t matrix_size() const noexcept { return n_; }
    const std::shared_ptr<const Group>& group() const noexcept { return group_; }

    bool is_unital() const noexcept { return kind_ != Element::Kind::Word; }
    bool has_addition() const noexcept { return kind_ != Element::Kind::Word; }
    /// Unit element; PreconditionFailed for the free semigroup.
    Element one() const;
    Element zero() const;

    /// True when `x` is an element of this algebra (same backend, size, ring, group).
    bool contains(const Element& x) const;

    std::string to_string() const;

   private:
    Algebra(Element::Kind kind, std::size_t n, std::optional<ScalarRing> ring, std::shared_ptr<const Group> group)
        : kind_(kind), n_(n), ring_(ring), group_(std::move(group)) {}

    Element::Kind kind_;
    std::size_t n_ = 0;
    std::optional<ScalarRing> ring_;
    std::shared_ptr<const Group> group_;
};

/// Semigroup homomorphism out of the free semigroup, determined by the image
/// of each letter. Multiplicativity holds by construction.
class SemigroupHom {
   public:
    SemigroupHom() = default;
    explicit SemigroupHom(std::map<Letter, Element> images) : images_(std::move(images)) {}

    void assign(Letter letter, Element image);
    const std::map<Letter, Element>& images() const noexcept { return images_; }

    /// Product of the letter images in order; UnknownLetter if one is unassigned.
    Element apply(const Word& w) const;
    Element apply(const Element& x) const { return apply(x.as_word()); }

   private:
    std::map<Letter, Element> images_;
};

}  // namespace pseudochar
