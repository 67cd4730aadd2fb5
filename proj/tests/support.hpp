#pragma once

// Small fixtures and test-local oracles shared by the unit tests.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pseudochar/algebra.hpp"
#include "pseudochar/matrix.hpp"
#include "pseudochar/verify/rng.hpp"

namespace test_support {

using namespace pseudochar;

inline Element mat(const ScalarRing& ring, std::size_t n, std::initializer_list<std::int64_t> entries) {
    return Matrix::from_ints(n, ring, entries);
}

inline Element random_matrix(const ScalarRing& ring, std::size_t n, verify::Rng& rng, std::int64_t bound = 5) {
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(ring.from_int(rng.uniform(-bound, bound)));
    return Matrix(n, std::move(entries));
}

inline std::vector<Element> random_matrices(const ScalarRing& ring, std::size_t n, std::size_t count,
                                            verify::Rng& rng, std::int64_t bound = 5) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_matrix(ring, n, rng, bound));
    return out;
}

/// Determinant by cofactor expansion along the first row.
inline Scalar cofactor_det(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m(0, 0);
    Scalar total = m.ring().zero();
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Scalar> minor;
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) minor.push_back(m(r, c));
        const Scalar term = m(0, col) * cofactor_det(Matrix(n - 1, std::move(minor)));
        total += col % 2 == 0 ? term : -term;
    }
    return total;
}

/// Number of injective partial maps [n] -> [m], by enumerating all maps
/// [n] -> {0 (unmatched), 1..m} and keeping the injective ones.
inline unsigned long brute_force_partial_injections(unsigned n, unsigned m) {
    std::vector<unsigned> image(n, 0);
    unsigned long count = 0;
    for (;;) {
        std::vector<bool> used(m + 1, false);
        bool ok = true;
        for (unsigned v : image) {
            if (v == 0) continue;
            if (used[v]) ok = false;
            used[v] = true;
        }
        if (ok) ++count;
        unsigned i = 0;
        while (i < n && image[i] == m) image[i++] = 0;
        if (i == n) return count;
        ++image[i];
    }
}

}  // namespace test_support
