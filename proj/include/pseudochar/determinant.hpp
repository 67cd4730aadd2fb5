#pragma once

#include <span>
#include <string>
#include <vector>

#include "pseudochar/forms.hpp"

namespace pseudochar {

/// Characteristic polynomial D_f(t - x) = sum_k c_k t^k, coefficients c_0..c_d.
struct CharPoly {
    std::vector<Scalar> coefficients;

    std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    bool is_monic() const { return !coefficients.empty() && coefficients.back().is_one(); }
    /// -c_{d-1}, the trace recovered from the polynomial.
    Scalar recovered_trace() const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

    /// `t^2 - 5*t - 2` style rendering, highest power first.
    std::string to_string() const;
};

/// Polynomial in t with coefficients in R, i.e. an element of R ⊗ A[t].
/// The highest stored coefficient is nonzero unless the polynomial is zero.
class RPolynomial {
   public:
    RPolynomial(Algebra algebra, std::vector<Element> coefficients);

    /// t·1 - x.
    static RPolynomial t_minus(const Algebra& algebra, const Element& x);

    const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
    /// Substitutes a scalar for t.
    Element evaluate(const Scalar& t) const;

   private:
    Algebra algebra_;
    std::vector<Element> coeffs_;
};

/// D_f(x) = (1/d!) f^[d](x, ..., x) for the declared dimension d.
Scalar det_from_pseudocharacter(const CentralFunction& f, const Element& x, FormCaps caps = {});

/// D_f(t - x), expanded by symmetry and multilinearity:
/// c_k = (1/d!) C(d,k) f^[d](-x, ..., -x, 1, ..., 1) with d-k copies of -x.
/// Requires a unital domain and an invertible d!.
CharPoly char_poly(const CentralFunction& f, const Element& x, FormCaps caps = {});

/// Same polynomial by evaluating D_f(t_j - x) at t_j = 0..d and Lagrange
/// interpolation. Used to cross-check char_poly.
CharPoly char_poly_by_interpolation(const CentralFunction& f, const Element& x, FormCaps caps = {});

/// Outcome of comparing two sides of an identity.
struct IdentityCheck {
    Scalar lhs;
    Scalar rhs;
    bool equal;
};

/// f^(x × y) against f^[n](x) · f^[m](y). Holds for every central f.
IdentityCheck product_formula_check(const CentralFunction& f, const Multiset& x, const Multiset& y,
                                    FormCaps caps = {}, const ProductBudget& budget = {});

/// f^[d](x) f^[d](y) against sum over sigma in S_d of f^[d](x_1 y_sigma(1), ..., x_d y_sigma(d)).
/// Needs |x| = |y| = d, the declared dimension.
IdentityCheck degree_d_product_check(const CentralFunction& f, std::span<const Element> xs,
                                     std::span<const Element> ys, FormCaps caps = {});

/// D_f(xy) against D_f(x) D_f(y).
IdentityCheck multiplicativity_check(const CentralFunction& f, const Element& x, const Element& y,
                                     FormCaps caps = {});

/// f^[n](x, 1, ..., 1) against f(x) prod_{i=1}^{n-1} (f(1) - i).
IdentityCheck lemma_ones_check(const CentralFunction& f, const Element& x, unsigned n, FormCaps caps = {});

struct CheckEntry {
    std::string name;
    bool passed;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    bool passed() const;
    const CheckEntry* find(const std::string& name) const;
};

/// Checks f(1) = d, invertibility of d!, centrality and linearity on sample
/// pairs, and vanishing of f^[d+1] on windows of d+1 consecutive samples.
CheckReport check_pseudocharacter(const CentralFunction& f, std::span<const Element> samples, FormCaps caps = {});

/// For every sample, -c_{d-1} of char_poly(f, x) must equal f(x).
CheckReport trace_roundtrip_check(const CentralFunction& f, std::span<const Element> samples, FormCaps caps = {});

}  // namespace pseudochar
