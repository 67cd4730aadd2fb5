#pragma once

#include <cstdint>
#include <vector>

#include "pseudochar/algebra.hpp"
#include "pseudochar/multiset.hpp"
#include "pseudochar/verify/rng.hpp"

namespace pseudochar::verify {

/// What random_element draws from.
struct ElementSpace {
    Algebra algebra;
    std::int64_t bound = 5;         ///< integer entries/coefficients in [-bound, bound]
    unsigned max_word_length = 3;   ///< words have length in [1, max_word_length]
    unsigned alphabet_size = 3;     ///< letters x1..x<alphabet_size>
    char letter_family = 'x';
};

/// Matrix with integer entries, word over the alphabet, or group-algebra
/// element with integer coefficients. Advances `rng` deterministically.
Element random_element(const ElementSpace& space, Rng& rng);

std::vector<Element> random_elements(const ElementSpace& space, std::size_t count, Rng& rng);

Multiset random_multiset(const ElementSpace& space, std::size_t cardinality, Rng& rng);

/// Formal sum of `terms` random multisets with cardinalities in [0, max_cardinality]
/// and nonzero coefficients in [-max_coefficient, max_coefficient].
FormalSum random_formal_sum(const ElementSpace& space, std::size_t terms, std::size_t max_cardinality,
                            std::int64_t max_coefficient, Rng& rng);

/// {family1, ..., family<n>} as single-letter words.
Multiset letter_multiset(char family, std::uint32_t n);

}  // namespace pseudochar::verify
