#include "pseudochar/verify/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "pseudochar/errors.hpp"

namespace pseudochar::verify {

namespace {

void require_cap(const Matrix& x) {
    if (x.size() > kLeibnizCap)
        throw BudgetExceeded("Leibniz expansion capped at size " + std::to_string(kLeibnizCap) + ", got " +
                             std::to_string(x.size()));
}

bool odd_permutation(const std::vector<std::size_t>& p) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 1;
}

}  // namespace

Scalar leibniz_det(const Matrix& x) {
    require_cap(x);
    const std::size_t n = x.size();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Scalar det = x.ring().zero();
    do {
        Scalar term = x.ring().one();
        for (std::size_t i = 0; i < n; ++i) term *= x(i, sigma[i]);
        det += odd_permutation(sigma) ? -term : term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return det;
}

std::vector<Scalar> leibniz_char_poly(const Matrix& x) {
    require_cap(x);
    const std::size_t n = x.size();
    const ScalarRing ring = x.ring();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<Scalar> total(n + 1, ring.zero());
    do {
        // prod_i (t [i == sigma(i)] - x[i][sigma(i)]) as a polynomial in t.
        std::vector<Scalar> term{ring.one()};
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar c = -x(i, sigma[i]);
            const bool diagonal = sigma[i] == i;
            std::vector<Scalar> next(term.size() + (diagonal ? 1 : 0), ring.zero());
            for (std::size_t k = 0; k < term.size(); ++k) {
                next[k] += term[k] * c;
                if (diagonal) next[k + 1] += term[k];
            }
            term = std::move(next);
        }
        const bool odd = odd_permutation(sigma);
        for (std::size_t k = 0; k < term.size(); ++k) total[k] += odd ? -term[k] : term[k];
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace pseudochar::verify
