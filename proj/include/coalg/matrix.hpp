#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coalg/scalar.hpp"

namespace coalg {

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    /// Every row must have length `cols`.
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    std::vector<Vector> row_list() const;
    void append_row(const Vector& v);

    Matrix transpose() const;
    /// this * v
    Vector apply(const Vector& v) const;
    /// Gauss-Jordan inverse; nullopt when singular.
    std::optional<Matrix> inverse() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                   // same shape as the input; zero rows last
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row

    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form with pivot bookkeeping.
Echelon row_reduce(Matrix m);

/// Reduced row-echelon form. Keeps the input shape: zero rows sit at the
/// bottom and are not removed.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

}  // namespace coalg
