#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pseudochar/scalar.hpp"

namespace pseudochar {

/// Finite group given by its multiplication table. Element 0 is the identity.
class Group {
   public:
    using Table = std::vector<std::vector<std::uint32_t>>;

    /// Validates closure, identity at index 0, associativity and that every
    /// row and column is a permutation.
    static std::shared_ptr<const Group> from_table(Table table);
    /// Reads the `order n` text format.
    static std::shared_ptr<const Group> parse(std::istream& in);
    static std::shared_ptr<const Group> load(const std::string& path);

    static std::shared_ptr<const Group> cyclic(std::uint32_t n);
    /// Symmetric group on k points (k <= 4), elements indexed by lexicographic
    /// rank of their permutation; product is composition (g*h)(i) = g(h(i)).
    static std::shared_ptr<const Group> symmetric(std::uint32_t k);

    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
    std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
    const Table& table() const noexcept { return table_; }

    friend bool operator==(const Group& a, const Group& b) { return a.table_ == b.table_; }
    friend auto operator<=>(const Group& a, const Group& b) {
        if (a.order() != b.order()) return a.order() <=> b.order();
        return a.table_ <=> b.table_;
    }

   private:
    explicit Group(Table table) : table_(std::move(table)) {}

    Table table_;
};

/// Finite formal sum of group elements with scalar coefficients.
class GroupAlgebraElement {
   public:
    using Coefficients = std::map<std::uint32_t, Scalar>;

    GroupAlgebraElement(std::shared_ptr<const Group> group, ScalarRing ring, Coefficients coeffs);

    static GroupAlgebraElement basis(std::shared_ptr<const Group> group, const ScalarRing& ring, std::uint32_t g);
    static GroupAlgebraElement zero(std::shared_ptr<const Group> group, const ScalarRing& ring);

    const Group& group() const noexcept { return *group_; }
    const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }
    const ScalarRing& ring() const noexcept { return ring_; }
    const Coefficients& coefficients() const noexcept { return coeffs_; }
    Scalar coefficient(std::uint32_t g) const;

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    GroupAlgebraElement operator-() const;
    GroupAlgebraElement scaled(const Scalar& c) const;

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return (a <=> b) == 0; }
    friend std::strong_ordering operator<=>(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

    /// `2*g0 - g3`; the zero element renders as `0`.
    std::string to_string() const;

   private:
    std::shared_ptr<const Group> group_;
    ScalarRing ring_;
    Coefficients coeffs_;
};

}  // namespace pseudochar
