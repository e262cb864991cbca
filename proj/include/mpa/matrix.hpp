#pragma once

#include "mpa/rational.hpp"

#include <cstddef>
#include <vector>

namespace mpa {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator*=(const Rational& s);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Row vector of all entries (row-major), used to test linear independence of matrices.
    const std::vector<Rational>& flat() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank over Q by Gaussian elimination on a copy.
std::size_t rank(Matrix m);

/// Rank of the span of the given vectors (all of equal length).
std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors);

}  // namespace mpa
