#include "pseudochar/element.hpp"

#include "pseudochar/errors.hpp"

namespace pseudochar {

namespace {

[[noreturn]] void mismatch(const char* op, const Element& a, const Element& b) {
    throw BackendMismatch(std::string("cannot ") + op + " " + kind_name(a.kind()) + " and " + kind_name(b.kind()));
}

}  // namespace

const char* kind_name(Element::Kind kind) noexcept {
    switch (kind) {
        case Element::Kind::Matrix:
            return "matrix";
        case Element::Kind::Word:
            return "word";
        case Element::Kind::GroupAlgebra:
            return "group-algebra element";
    }
    return "?";
}

const Matrix& Element::as_matrix() const {
    if (const auto* m = std::get_if<Matrix>(&value_)) return *m;
    throw BackendMismatch(std::string("expected a matrix, got a ") + kind_name(kind()));
}

const Word& Element::as_word() const {
    if (const auto* w = std::get_if<Word>(&value_)) return *w;
    throw BackendMismatch(std::string("expected a word, got a ") + kind_name(kind()));
}

const GroupAlgebraElement& Element::as_group_algebra() const {
    if (const auto* g = std::get_if<GroupAlgebraElement>(&value_)) return *g;
    throw BackendMismatch(std::string("expected a group-algebra element, got a ") + kind_name(kind()));
}

Element operator*(const Element& a, const Element& b) {
    if (a.kind() != b.kind()) mismatch("multiply", a, b);
    return std::visit(
        [&](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            return Element(x * std::get<T>(b.value_));
        },
        a.value_);
}

Element operator+(const Element& a, const Element& b) {
    if (a.kind() != b.kind()) mismatch("add", a, b);
    return std::visit(
        [&](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Word>) throw PreconditionFailed("the free semigroup has no addition");
            else return Element(x + std::get<T>(b.value_));
        },
        a.value_);
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element Element::operator-() const {
    return std::visit(
        [](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Word>) throw PreconditionFailed("the free semigroup has no negation");
            else return Element(-x);
        },
        value_);
}

Element Element::scaled(const Scalar& c) const {
    return std::visit(
        [&](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Word>) throw PreconditionFailed("the free semigroup has no scalar action");
            else return Element(x.scaled(c));
        },
        value_);
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    return std::visit(
        [&](const auto& x) -> std::strong_ordering {
            using T = std::decay_t<decltype(x)>;
            return x <=> std::get<T>(b.value_);
        },
        a.value_);
}

std::string Element::to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, value_);
}

}  // namespace pseudochar
