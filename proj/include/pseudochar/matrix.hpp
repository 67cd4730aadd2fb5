#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pseudochar/scalar.hpp"

namespace pseudochar {

/// Square n x n matrix over one scalar ring, stored row-major.
class Matrix {
   public:
    /// `entries` is row-major and must hold exactly n*n scalars of a single ring.
    Matrix(std::size_t n, std::vector<Scalar> entries);

    static Matrix zero(std::size_t n, const ScalarRing& ring);
    static Matrix identity(std::size_t n, const ScalarRing& ring);
    static Matrix from_ints(std::size_t n, const ScalarRing& ring, std::initializer_list<std::int64_t> entries);

    std::size_t size() const noexcept { return n_; }
    ScalarRing ring() const { return entries_.front().ring(); }
    const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    Scalar trace() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const Scalar& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) { return (a <=> b) == 0; }
    /// Size first, then row-major lexicographic on entries.
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

    /// `[[1,2],[3,4]]`
    std::string to_string() const;

   private:
    std::size_t n_;
    std::vector<Scalar> entries_;
};

}  // namespace pseudochar
