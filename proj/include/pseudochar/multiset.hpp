#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pseudochar/algebra.hpp"
#include "pseudochar/element.hpp"

namespace pseudochar {

/// Finite multiset of semigroup elements, stored sorted ascending.
///
/// Two multisets are equal iff their sorted sequences are equal. The empty
/// multiset is the unit of the multiset ring. All entries share one backend.
class Multiset {
   public:
    Multiset() = default;
    explicit Multiset(std::vector<Element> entries);
    Multiset(std::initializer_list<Element> entries) : Multiset(std::vector<Element>(entries)) {}

    const std::vector<Element>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const Element& operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    /// Cardinality first, then lexicographic on the sorted entries.
    friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);

    /// Entries rendered and sorted by their text, e.g. `{x1*y1,x2}`.
    std::string to_string() const;

   private:
    std::vector<Element> entries_;
};

/// Partial bijection (I, J, alpha) from [n] to [m], with 1-based indices.
/// Pairs (i, alpha(i)) are stored sorted by i.
class PartialBijection {
   public:
    using Pair = std::pair<std::uint32_t, std::uint32_t>;

    PartialBijection(std::uint32_t n, std::uint32_t m, std::vector<Pair> pairs);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t m() const noexcept { return m_; }
    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    std::size_t rank() const noexcept { return pairs_.size(); }

    friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

    std::string to_string() const;

   private:
    std::uint32_t n_;
    std::uint32_t m_;
    std::vector<Pair> pairs_;
};

/// Number of partial bijections [n] -> [m]: sum_k C(n,k) C(m,k) k!.
mpz_class partial_bijection_count(std::uint32_t n, std::uint32_t m);

/// Visits every partial bijection [n] -> [m] once, as 1-based (i, j) pairs
/// sorted by i. Order: rank k ascending; subsets I then J lexicographic; the
/// image sequence (alpha(i_1), ..., alpha(i_k)) lexicographic.
void for_each_partial_bijection(std::uint32_t n, std::uint32_t m,
                                const std::function<void(std::span<const PartialBijection::Pair>)>& visit);

/// All partial bijections in the order of for_each_partial_bijection.
std::vector<PartialBijection> partial_bijections(std::uint32_t n, std::uint32_t m);

/// Element of the multiset ring: a finite Z-linear combination of multisets.
/// No stored coefficient is zero.
class FormalSum {
   public:
    using Terms = std::map<Multiset, mpz_class>;

    FormalSum() = default;
    explicit FormalSum(Multiset m, mpz_class coefficient = 1);

    /// The empty multiset with coefficient 1.
    static FormalSum unit() { return FormalSum(Multiset{}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    mpz_class coefficient(const Multiset& m) const;

    void add(const Multiset& m, const mpz_class& c);
    void add(Multiset&& m, const mpz_class& c);
    FormalSum& operator+=(const FormalSum& rhs);
    FormalSum& operator-=(const FormalSum& rhs);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    FormalSum operator-() const;
    FormalSum scaled(const mpz_class& c) const;

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    /// Terms sorted by cardinality (largest first), then rendered multiset text, each with a coefficient
    /// prefix: `1*{x1,x2,y1} + 1*{x1*y1,x2} + 1*{x1,x2*y1}`. Zero renders `0`.
    std::string to_string() const;

   private:
    Terms terms_;
};

/// Limits on the size of multiset-ring products.
struct ProductBudget {
    /// Largest allowed number of intermediate multisets (one per partial bijection).
    std::uint64_t max_intermediate = 10'000'000;
};

/// x ×_alpha y. Indices refer to the canonical sorted order of x and y.
Multiset product_along(const Multiset& x, const Multiset& y, const PartialBijection& alpha);

/// x ×_alpha y for explicitly ordered entry sequences.
Multiset product_along(std::span<const Element> xs, std::span<const Element> ys, const PartialBijection& alpha);

/// x × y: the sum of x ×_alpha y over all partial bijections alpha.
FormalSum multiset_product(const Multiset& x, const Multiset& y, const ProductBudget& budget = {});

/// x × y computed against explicit entry orderings instead of the canonical one.
FormalSum multiset_product(std::span<const Element> xs, std::span<const Element> ys,
                           const ProductBudget& budget = {});

/// Bilinear extension of multiset_product. Throws BudgetExceeded when the
/// predicted number of intermediate multisets exceeds the budget.
FormalSum formal_product(const FormalSum& s, const FormalSum& t, const ProductBudget& budget = {});

/// Applies a semigroup homomorphism entrywise, merging colliding multisets.
FormalSum map_formal(const SemigroupHom& hom, const FormalSum& s);

}  // namespace pseudochar
