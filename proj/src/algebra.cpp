#include "pseudochar/algebra.hpp"

#include "pseudochar/errors.hpp"

namespace pseudochar {

Algebra Algebra::matrices(std::size_t n, const ScalarRing& ring) {
    if (n == 0) throw DimensionMismatch("matrix algebra needs n >= 1");
    return Algebra(Element::Kind::Matrix, n, ring, nullptr);
}

Algebra Algebra::words() { return Algebra(Element::Kind::Word, 0, std::nullopt, nullptr); }

Algebra Algebra::group_algebra(std::shared_ptr<const Group> group, const ScalarRing& ring) {
    if (!group) throw PreconditionFailed("group algebra needs a group");
    return Algebra(Element::Kind::GroupAlgebra, 0, ring, std::move(group));
}

const ScalarRing& Algebra::ring() const {
    if (!ring_) throw PreconditionFailed("the free semigroup has no scalar ring");
    return *ring_;
}

Element Algebra::one() const {
    switch (kind_) {
        case Element::Kind::Matrix:
            return Matrix::identity(n_, *ring_);
        case Element::Kind::GroupAlgebra:
            return GroupAlgebraElement::basis(group_, *ring_, 0);
        case Element::Kind::Word:
            break;
    }
    throw PreconditionFailed("the free semigroup has no unit");
}

Element Algebra::zero() const {
    switch (kind_) {
        case Element::Kind::Matrix:
            return Matrix::zero(n_, *ring_);
        case Element::Kind::GroupAlgebra:
            return GroupAlgebraElement::zero(group_, *ring_);
        case Element::Kind::Word:
            break;
    }
    throw PreconditionFailed("the free semigroup has no zero");
}

bool Algebra::contains(const Element& x) const {
    if (x.kind() != kind_) return false;
    switch (kind_) {
        case Element::Kind::Matrix: {
            const auto& m = x.as_matrix();
            return m.size() == n_ && m.ring() == *ring_;
        }
        case Element::Kind::GroupAlgebra: {
            const auto& g = x.as_group_algebra();
            return g.group() == *group_ && g.ring() == *ring_;
        }
        case Element::Kind::Word:
            return true;
    }
    return false;
}

std::string Algebra::to_string() const {
    switch (kind_) {
        case Element::Kind::Matrix:
            return "M" + std::to_string(n_) + "(" + ring_->to_string() + ")";
        case Element::Kind::GroupAlgebra:
            return "A[G], |G|=" + std::to_string(group_->order()) + " (" + ring_->to_string() + ")";
        case Element::Kind::Word:
            return "words";
    }
    return "?";
}

void SemigroupHom::assign(Letter letter, Element image) { images_.insert_or_assign(letter, std::move(image)); }

Element SemigroupHom::apply(const Word& w) const {
    auto image_of = [&](const Letter& l) -> const Element& {
        auto it = images_.find(l);
        if (it == images_.end()) throw UnknownLetter("no image assigned to letter " + l.to_string());
        return it->second;
    };
    Element out = image_of(w.letters().front());
    for (std::size_t i = 1; i < w.length(); ++i) out = out * image_of(w.letters()[i]);
    return out;
}

}  // namespace pseudochar
