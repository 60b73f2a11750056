#ifndef CAG_MATRIX_HPP
#define CAG_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "cag/rat.hpp"

namespace cag {

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};
struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};
struct ShapeMismatch : Error {
    ShapeMismatch() : Error("matrix shape mismatch") {}
};

/// Dense row-major matrix over T (BigInt or Rat).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw ShapeMismatch();
    }

    static Matrix identity(std::size_t k) {
        Matrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const T &at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix operator+(const Matrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch();
        Matrix r = *this;
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto &e : r.entries_) e = -e;
        return r;
    }
    Matrix operator*(const Matrix &o) const {
        if (cols_ != o.rows_) throw ShapeMismatch();
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T &a = at(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    bool operator==(const Matrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Matrix &o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto &e : entries_) if (!(e == T(0))) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rat>;

/// Exact determinant by fraction-free Bareiss elimination.
BigInt int_matrix_det(const IntMatrix &m);

/// True iff det(M) is +1 or -1.
bool int_matrix_unimodular(const IntMatrix &m);

/// Exact inverse by Gauss-Jordan elimination; throws Singular.
RatMatrix rat_matrix_invert(const RatMatrix &m);

bool rat_matrix_invertible(const RatMatrix &m);

RatMatrix to_rat(const IntMatrix &m);

/// Exact inverse of a unimodular integer matrix (entries stay integral).
IntMatrix int_matrix_unimodular_inverse(const IntMatrix &m);

} // namespace cag

#endif
