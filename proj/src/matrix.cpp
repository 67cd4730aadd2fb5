#include "pseudochar/matrix.hpp"

#include <algorithm>

#include "pseudochar/errors.hpp"

namespace pseudochar {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("matrix size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

}  // namespace

Matrix::Matrix(std::size_t n, std::vector<Scalar> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw DimensionMismatch("matrix size must be at least 1");
    if (entries_.size() != n_ * n_)
        throw DimensionMismatch("expected " + std::to_string(n_ * n_) + " entries, got " + std::to_string(entries_.size()));
    const ScalarRing r = entries_.front().ring();
    for (const auto& e : entries_)
        if (!(e.ring() == r)) throw BackendMismatch("matrix entries mix " + r.to_string() + " and " + e.ring().to_string());
}

Matrix Matrix::zero(std::size_t n, const ScalarRing& ring) { return Matrix(n, std::vector<Scalar>(n * n, ring.zero())); }

Matrix Matrix::identity(std::size_t n, const ScalarRing& ring) {
    std::vector<Scalar> e(n * n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = ring.one();
    return Matrix(n, std::move(e));
}

Matrix Matrix::from_ints(std::size_t n, const ScalarRing& ring, std::initializer_list<std::int64_t> entries) {
    std::vector<Scalar> e;
    e.reserve(entries.size());
    for (auto v : entries) e.push_back(ring.from_int(v));
    return Matrix(n, std::move(e));
}

Scalar Matrix::trace() const {
    Scalar t = entries_[0];
    for (std::size_t i = 1; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::operator-() const {
    std::vector<Scalar> e;
    e.reserve(entries_.size());
    for (const auto& s : entries_) e.push_back(-s);
    return Matrix(n_, std::move(e));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    std::vector<Scalar> e;
    e.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i) e.push_back(a.entries_[i] + b.entries_[i]);
    return Matrix(a.n_, std::move(e));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    const std::size_t n = a.n_;
    std::vector<Scalar> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < n; ++k) acc += a(i, k) * b(k, j);
            e.push_back(std::move(acc));
        }
    }
    return Matrix(n, std::move(e));
}

Matrix Matrix::scaled(const Scalar& c) const {
    std::vector<Scalar> e;
    e.reserve(entries_.size());
    for (const auto& s : entries_) e.push_back(c * s);
    return Matrix(n_, std::move(e));
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += '[';
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) s += ',';
            s += (*this)(i, j).to_string();
        }
        s += ']';
    }
    return s + ']';
}

}  // namespace pseudochar
