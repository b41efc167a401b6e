#pragma once

#include <cstddef>
#include <vector>

#include "rmt/rational.hpp"

namespace rmt {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact determinant. Each row is scaled to integers and the result is
/// eliminated with Bareiss' fraction-free scheme, so every intermediate
/// division is exact. The 0x0 determinant is 1.
Rational det_exact(const Matrix& m);

}  // namespace rmt
