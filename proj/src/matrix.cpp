#include "coalg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace coalg {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

std::vector<Vector> Matrix::row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

void Matrix::append_row(const Vector& v) {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::append_row: length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = field_.one();
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(Matrix m) {
    Echelon e;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
        const Scalar inv = m(lead, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(lead, j).is_zero()) m(lead, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            const Scalar factor = m(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(lead, j).is_zero()) m(r, j) -= factor * m(lead, j);
        }
        e.pivots.push_back(c);
        ++lead;
    }
    e.reduced = std::move(m);
    return e;
}

Matrix rref(const Matrix& m) { return row_reduce(m).reduced; }

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

}  // namespace coalg
