#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "pseudochar/central_function.hpp"
#include "pseudochar/multiset.hpp"

namespace pseudochar {

/// Arity caps for the recursive forms and the permutation-sum oracle.
struct FormCaps {
    unsigned max_arity = 8;         ///< largest n accepted by f^[n]
    unsigned max_oracle_arity = 7;  ///< largest n accepted by permutation sums (n! terms)
};

/// Evaluates the forms f^[n] defined by f^[1] = f and
///
///   f^[n](x_1..x_n) = f(x_n) f^[n-1](x_1..x_{n-1})
///                     - sum_i f^[n-1](x_1.., x_i x_n, ..x_{n-1}).
///
/// With memoization on, every sub-evaluation is keyed on the canonical
/// multiset of its arguments and the recursion peels the largest argument,
/// so repeated arguments collapse. That relies on f^[n] being symmetric,
/// which holds for central f; without memoization the recursion follows the
/// arguments in the order given. The cache lives as long as the evaluator.
class FormEvaluator {
   public:
    explicit FormEvaluator(const CentralFunction& f, FormCaps caps = {});
    FormEvaluator(const CentralFunction& f, FormCaps caps, bool memoize);

    /// f^[n](args), n = args.size() >= 1.
    Scalar operator()(std::span<const Element> args);
    /// f^[|x|](x), with the empty multiset giving 1.
    Scalar operator()(const Multiset& x);

    bool memoizing() const noexcept { return memoize_; }
    std::size_t cache_size() const noexcept { return memo_.size(); }
    std::size_t calls_to_f() const noexcept { return calls_to_f_; }

   private:
    Scalar recurse_sorted(std::vector<Element> sorted_args);
    Scalar recurse_ordered(const std::vector<Element>& args);
    Scalar call_f(const Element& x);

    const CentralFunction& f_;
    FormCaps caps_;
    bool memoize_;
    std::map<Multiset, Scalar> memo_;
    std::size_t calls_to_f_ = 0;
};

/// f^[n](args) via the recursion; BudgetExceeded when n exceeds the cap and
/// PreconditionFailed when args is empty.
Scalar f_rec(const CentralFunction& f, std::span<const Element> args, FormCaps caps = {});

/// Z-linear extension to the multiset ring: sum of a_i f^[|x_i|](x_i), with f^[0](empty) = 1.
Scalar f_hat(const CentralFunction& f, const FormalSum& s, FormCaps caps = {});

/// Permutation cycle sum: sum over sigma in S_n of sgn(sigma) times the product
/// over cycles (i_1 ... i_k) of f(x_{i_1} ... x_{i_k}). Each cycle starts at its
/// smallest index and is read as i, sigma(i), sigma^2(i), ...
/// Shares no code with the recursion.
Scalar taylor_oracle(const CentralFunction& f, std::span<const Element> args, FormCaps caps = {});

}  // namespace pseudochar
