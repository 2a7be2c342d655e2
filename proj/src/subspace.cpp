#include "coalg/subspace.hpp"

#include <algorithm>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw InputError(std::string(op) + ": ambient mismatch (" + std::to_string(a.ambient()) + " vs " +
                         std::to_string(b.ambient()) + ")");
}

}  // namespace

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::full(Field f, std::size_t ambient) { return row_space(Matrix::identity(f, ambient)); }

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw InputError("Subspace::span: length mismatch");
    return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
    Echelon e = row_reduce(m);
    Subspace s(m.field(), m.cols());
    for (std::size_t r = 0; r < e.rank(); ++r) s.basis_.append_row(e.reduced.row(r));
    s.pivots_ = std::move(e.pivots);
    return s;
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw InputError("Subspace::reduce: length mismatch");
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (!c.is_zero()) axpy(r, -c, basis_.row(i));
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return coalg::is_zero(reduce(v)); }

Vector Subspace::coordinates(const Vector& v) const {
    Vector c;
    c.reserve(pivots_.size());
    for (std::size_t p : pivots_) c.push_back(v.at(p));
    return c;
}

Subspace Subspace::image(const Matrix& p) const {
    if (p.cols() != ambient_) throw InputError("Subspace::image: shape mismatch");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(p.apply(basis_.row(i)));
    return span(field_, p.rows(), rows);
}

Vector Subspace::min_basis_vector() const {
    if (dim() == 0) return zero_vector(field_, ambient_);
    Vector best = basis_.row(0);
    for (std::size_t i = 1; i < dim(); ++i) {
        Vector r = basis_.row(i);
        if (lex_compare(r, best) < 0) best = std::move(r);
    }
    return best;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.basis_ == b.basis_;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (auto c = lex_compare(a.basis_.row(i), b.basis_.row(i)); c != 0) return c;
    return std::strong_ordering::equal;
}

Subspace kernel(const Matrix& m) {
    const Field f = m.field();
    const std::size_t n = m.cols();
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, n);
        v[free] = f.one();
        for (std::size_t r = 0; r < e.rank(); ++r) {
            const Scalar& a = e.reduced(r, free);
            if (!a.is_zero()) v[e.pivots[r]] = -a;
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, n, basis);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    Matrix stacked = a.basis();
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis_vector(i));
    return Subspace::row_space(stacked);
}

Subspace sum(const std::vector<Subspace>& parts, Field f, std::size_t ambient) {
    Matrix stacked(f, 0, ambient);
    for (const auto& p : parts) {
        if (p.ambient() != ambient || !(p.field() == f)) throw InputError("sum: ambient mismatch");
        for (std::size_t i = 0; i < p.dim(); ++i) stacked.append_row(p.basis_vector(i));
    }
    return Subspace::row_space(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect");
    if (a.is_zero() || b.is_zero()) return Subspace(a.field(), a.ambient());
    // x = sum_i s_i a_i = sum_j t_j b_j  <=>  (s, t) in ker [A^T | -B^T]
    const std::size_t n = a.ambient();
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    Matrix system(a.field(), n, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t c = 0; c < n; ++c) system(c, i) = a.basis()(i, c);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t c = 0; c < n; ++c) system(c, da + j) = -b.basis()(j, c);
    Subspace relations = kernel(system);
    std::vector<Vector> vectors;
    for (std::size_t r = 0; r < relations.dim(); ++r) {
        Vector rel = relations.basis_vector(r);
        Vector x = zero_vector(a.field(), n);
        for (std::size_t i = 0; i < da; ++i) axpy(x, rel[i], a.basis_vector(i));
        vectors.push_back(std::move(x));
    }
    return Subspace::span(a.field(), n, vectors);
}

Subspace annihilator(const Subspace& x) {
    if (x.is_zero()) return Subspace::full(x.field(), x.ambient());
    return kernel(x.basis());
}

bool contains(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "contains");
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (!a.contains(b.basis_vector(i))) return false;
    return true;
}

}  // namespace coalg
