#include "pseudochar/verify/generators.hpp"

namespace pseudochar::verify {

Element random_element(const ElementSpace& space, Rng& rng) {
    const Algebra& a = space.algebra;
    switch (a.kind()) {
        case Element::Kind::Matrix: {
            const std::size_t n = a.matrix_size();
            std::vector<Scalar> entries;
            entries.reserve(n * n);
            for (std::size_t i = 0; i < n * n; ++i) entries.push_back(a.ring().from_int(rng.uniform(-space.bound, space.bound)));
            return Matrix(n, std::move(entries));
        }
        case Element::Kind::Word: {
            const auto length = static_cast<std::size_t>(rng.uniform(1, space.max_word_length));
            std::vector<Letter> letters;
            for (std::size_t i = 0; i < length; ++i)
                letters.push_back(Letter{space.letter_family, static_cast<std::uint32_t>(rng.uniform(1, space.alphabet_size))});
            return Word(std::move(letters));
        }
        case Element::Kind::GroupAlgebra: {
            GroupAlgebraElement::Coefficients coeffs;
            for (std::uint32_t g = 0; g < a.group()->order(); ++g)
                coeffs.emplace(g, a.ring().from_int(rng.uniform(-space.bound, space.bound)));
            return GroupAlgebraElement(a.group(), a.ring(), std::move(coeffs));
        }
    }
    return a.zero();
}

std::vector<Element> random_elements(const ElementSpace& space, std::size_t count, Rng& rng) {
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_element(space, rng));
    return out;
}

Multiset random_multiset(const ElementSpace& space, std::size_t cardinality, Rng& rng) {
    return Multiset(random_elements(space, cardinality, rng));
}

FormalSum random_formal_sum(const ElementSpace& space, std::size_t terms, std::size_t max_cardinality,
                            std::int64_t max_coefficient, Rng& rng) {
    FormalSum s;
    for (std::size_t t = 0; t < terms; ++t) {
        auto card = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_cardinality)));
        std::int64_t c = rng.uniform(1, max_coefficient);
        if (rng.uniform(0, 1) == 1) c = -c;
        s.add(random_multiset(space, card, rng), mpz_class(static_cast<long>(c)));
    }
    return s;
}

Multiset letter_multiset(char family, std::uint32_t n) {
    std::vector<Element> entries;
    for (std::uint32_t i = 1; i <= n; ++i) entries.emplace_back(Word(Letter{family, i}));
    return Multiset(std::move(entries));
}

}  // namespace pseudochar::verify
