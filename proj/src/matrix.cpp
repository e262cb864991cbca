#include "mpa/matrix.hpp"

#include "mpa/errors.hpp"

#include <utility>

namespace mpa {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("matrix shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r) {
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        }
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational factor = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
            }
        }
        ++r;
    }
    return r;
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t len = vectors.front().size();
    Matrix m(vectors.size(), len);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != len) throw InvalidArgument("span_rank: vectors of unequal length");
        for (std::size_t j = 0; j < len; ++j) m(i, j) = vectors[i][j];
    }
    return rank(std::move(m));
}

}  // namespace mpa
