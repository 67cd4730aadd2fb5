#pragma once

#include <vector>

#include "pseudochar/matrix.hpp"

namespace pseudochar::verify {

/// Largest matrix size accepted by the Leibniz expansions (6! = 720 terms).
inline constexpr std::size_t kLeibnizCap = 6;

/// sum over sigma of sgn(sigma) prod_i x[i][sigma(i)]. Independent of the
/// pseudocharacter code; shares only scalar arithmetic with it.
Scalar leibniz_det(const Matrix& x);

/// Coefficients c_0..c_n of det(t I - x), by the same permutation expansion
/// carried out over univariate polynomials in t.
std::vector<Scalar> leibniz_char_poly(const Matrix& x);

}  // namespace pseudochar::verify
