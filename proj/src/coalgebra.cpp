#include "coalg/coalgebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
using Tensor3 = std::map<Triple, Scalar>;

void accumulate(Tensor3& t, const Triple& key, const Scalar& v) {
    auto [it, inserted] = t.try_emplace(key, v);
    if (!inserted) it->second += v;
    if (it->second.is_zero()) t.erase(it);
}

std::string render(const Tensor3& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [key, v] : t) {
        if (!s.empty()) s += " + ";
        auto [a, b, c] = key;
        s += v.to_string() + "*e" + std::to_string(a) + "(x)e" + std::to_string(b) + "(x)e" + std::to_string(c);
    }
    return s;
}

std::string render(const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += v[i].to_string() + "*e" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

// Column i of the quotient map C -> C/X, in the coordinates of the non-pivot
// columns of X's canonical basis, stored sparsely as (coordinate, value).
std::vector<std::vector<std::pair<std::size_t, Scalar>>> quotient_columns(const Subspace& x,
                                                                         std::size_t& quotient_dim) {
    const std::size_t n = x.ambient();
    const Field f = x.field();
    std::vector<std::size_t> coord(n, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : x.pivots()) is_pivot[p] = true;
    quotient_dim = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) coord[i] = quotient_dim++;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = x.reduce(unit_vector(f, n, i));
        for (std::size_t j = 0; j < n; ++j)
            if (!r[j].is_zero()) cols[i].emplace_back(coord[j], r[j]);
    }
    return cols;
}

}  // namespace

Coalgebra::Coalgebra(Field f, std::size_t dim, const std::vector<Entry>& delta, Vector counit)
    : field_(f), dim_(dim), delta_(dim), counit_(std::move(counit)) {
    if (counit_.size() != dim_)
        throw InputError("counit has length " + std::to_string(counit_.size()) + ", expected " +
                         std::to_string(dim_));
    for (const auto& c : counit_)
        if (!(c.field() == f)) throw InputError("counit entry over the wrong field");
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> acc(dim_);
    for (const auto& e : delta) {
        if (e.source >= dim_ || e.left >= dim_ || e.right >= dim_)
            throw InputError("delta entry (" + std::to_string(e.source) + "; " + std::to_string(e.left) + ", " +
                             std::to_string(e.right) + ") out of range for dimension " + std::to_string(dim_));
        if (!(e.coef.field() == f)) throw InputError("delta entry over the wrong field");
        auto [it, inserted] = acc[e.source].try_emplace({e.left, e.right}, e.coef);
        if (!inserted) it->second += e.coef;
    }
    for (std::size_t k = 0; k < dim_; ++k)
        for (const auto& [ij, c] : acc[k])
            if (!c.is_zero()) delta_[k].push_back(DeltaTerm{ij.first, ij.second, c});
}

std::vector<Coalgebra::Entry> Coalgebra::entries() const {
    std::vector<Entry> out;
    for (std::size_t k = 0; k < dim_; ++k)
        for (const auto& t : delta_[k]) out.push_back(Entry{k, t.left, t.right, t.coef});
    return out;
}

Matrix Coalgebra::delta_matrix(std::size_t k) const {
    Matrix t(field_, dim_, dim_);
    for (const auto& term : delta_.at(k)) t(term.left, term.right) = term.coef;
    return t;
}

Matrix Coalgebra::delta_of(const Vector& v) const {
    if (v.size() != dim_) throw InputError("delta_of: length mismatch");
    Matrix t(field_, dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        if (v[k].is_zero()) continue;
        for (const auto& term : delta_[k]) t(term.left, term.right) += v[k] * term.coef;
    }
    return t;
}

std::string describe(const AxiomViolation& v) {
    const char* kind = v.kind == AxiomViolation::Kind::coassociativity ? "coassociativity"
                       : v.kind == AxiomViolation::Kind::left_counit   ? "left counit"
                                                                       : "right counit";
    return std::string(kind) + " fails at basis index " + std::to_string(v.index) + ": " + v.lhs +
           " != " + v.rhs;
}

std::vector<AxiomViolation> check_coalgebra(const Coalgebra& c) {
    std::vector<AxiomViolation> out;
    const Field f = c.field();
    const std::size_t n = c.dim();
    for (std::size_t k = 0; k < n; ++k) {
        Tensor3 left_side, right_side;
        for (const auto& t : c.terms(k)) {
            for (const auto& u : c.terms(t.left)) accumulate(left_side, {u.left, u.right, t.right}, t.coef * u.coef);
            for (const auto& u : c.terms(t.right)) accumulate(right_side, {t.left, u.left, u.right}, t.coef * u.coef);
        }
        if (left_side != right_side)
            out.push_back({AxiomViolation::Kind::coassociativity, k, render(left_side), render(right_side)});

        Vector via_left = zero_vector(f, n), via_right = zero_vector(f, n);
        for (const auto& t : c.terms(k)) {
            via_left[t.right] += c.counit()[t.left] * t.coef;
            via_right[t.left] += c.counit()[t.right] * t.coef;
        }
        const Vector expected = unit_vector(f, n, k);
        if (via_left != expected) out.push_back({AxiomViolation::Kind::left_counit, k, render(via_left), render(expected)});
        if (via_right != expected)
            out.push_back({AxiomViolation::Kind::right_counit, k, render(via_right), render(expected)});
    }
    return out;
}

Vector DualAlgebra::multiply(const Vector& f, const Vector& g) const {
    const Coalgebra& c = *parent_;
    if (f.size() != c.dim() || g.size() != c.dim()) throw InputError("convolution: length mismatch");
    Vector out = zero_vector(c.field(), c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k)
        for (const auto& t : c.terms(k))
            if (!f[t.left].is_zero() && !g[t.right].is_zero()) out[k] += t.coef * f[t.left] * g[t.right];
    return out;
}

Matrix DualAlgebra::left_multiplication(const Vector& f) const {
    const Coalgebra& c = *parent_;
    if (f.size() != c.dim()) throw InputError("left_multiplication: length mismatch");
    Matrix l(c.field(), c.dim(), c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k)
        for (const auto& t : c.terms(k))
            if (!f[t.left].is_zero()) l(k, t.right) += t.coef * f[t.left];
    return l;
}

Subspace DualAlgebra::ideal_product(const Subspace& p, const Subspace& q) const {
    const Coalgebra& c = *parent_;
    if (p.ambient() != c.dim() || q.ambient() != c.dim()) throw InputError("ideal_product: ambient mismatch");
    Matrix products(c.field(), 0, c.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const Vector a = p.basis_vector(i);
        for (std::size_t j = 0; j < q.dim(); ++j) products.append_row(multiply(a, q.basis_vector(j)));
    }
    return Subspace::row_space(products);
}

Vector dual_convolve(const DualAlgebra& a, const Vector& f, const Vector& g) { return a.multiply(f, g); }

bool is_subcoalgebra(const Coalgebra& c, const Subspace& x) {
    if (x.ambient() != c.dim()) throw InputError("is_subcoalgebra: ambient mismatch");
    for (std::size_t r = 0; r < x.dim(); ++r) {
        const Matrix t = c.delta_of(x.basis_vector(r));
        for (std::size_t i = 0; i < c.dim(); ++i) {
            if (!x.contains(t.row(i)) || !x.contains(t.col(i))) return false;
        }
    }
    return true;
}

Subspace subcoalgebra_generated(const Coalgebra& c, const Subspace& seed) {
    if (seed.ambient() != c.dim()) throw InputError("subcoalgebra_generated: ambient mismatch");
    Subspace current = seed;
    while (true) {
        Matrix rows = current.basis();
        for (std::size_t r = 0; r < current.dim(); ++r) {
            const Matrix t = c.delta_of(current.basis_vector(r));
            for (std::size_t i = 0; i < c.dim(); ++i) {
                rows.append_row(t.row(i));
                rows.append_row(t.col(i));
            }
        }
        Subspace next = Subspace::row_space(rows);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

Subspace wedge_by_kernel(const Coalgebra& c, const Subspace& x, const Subspace& y) {
    if (x.ambient() != c.dim() || y.ambient() != c.dim()) throw InputError("wedge: ambient mismatch");
    std::size_t qx = 0, qy = 0;
    const auto left = quotient_columns(x, qx);
    const auto right = quotient_columns(y, qy);
    // Row (a, b) of the composite is the (a, b) coordinate of the image of e_k.
    Matrix composite(c.field(), qx * qy, c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k)
        for (const auto& t : c.terms(k))
            for (const auto& [a, va] : left[t.left])
                for (const auto& [b, vb] : right[t.right]) composite(a * qy + b, k) += t.coef * va * vb;
    return kernel(composite);
}

Subspace wedge_by_ideal(const Coalgebra& c, const Subspace& x, const Subspace& y) {
    if (x.ambient() != c.dim() || y.ambient() != c.dim()) throw InputError("wedge: ambient mismatch");
    DualAlgebra dual(c);
    return annihilator(dual.ideal_product(annihilator(x), annihilator(y)));
}

Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y, WedgeMode mode) {
    Subspace via_ideal = wedge_by_ideal(c, x, y);
    if (mode == WedgeMode::verify) {
        Subspace via_kernel = wedge_by_kernel(c, x, y);
        if (!(via_kernel == via_ideal))
            throw ConsistencyError("wedge formulas disagree: kernel route has dim " +
                                   std::to_string(via_kernel.dim()) + ", dual-ideal route has dim " +
                                   std::to_string(via_ideal.dim()));
    }
    return via_ideal;
}

WedgeTower wedge_tower(const Coalgebra& c, const Subspace& e, WedgeMode mode) {
    WedgeTower tower;
    tower.chain.push_back(e);
    for (std::size_t step = 0; step <= c.dim(); ++step) {
        Subspace next = wedge(c, tower.chain.back(), e, mode);
        if (!contains(next, tower.chain.back()))
            throw InputError("wedge_tower: seed is not a subcoalgebra (tower not increasing)");
        if (next.dim() == tower.chain.back().dim()) return tower;
        tower.chain.push_back(std::move(next));
    }
    throw ConsistencyError("wedge_tower did not stabilize within dim C steps");
}

Coalgebra change_basis(const Coalgebra& c, const Matrix& p) {
    const std::size_t n = c.dim();
    if (p.rows() != n || p.cols() != n) throw InputError("change_basis: matrix has wrong shape");
    auto inv = p.inverse();
    if (!inv) throw InputError("change_basis: singular basis-change matrix");
    const Matrix pt = p.transpose();
    std::vector<Coalgebra::Entry> entries;
    Vector counit = zero_vector(c.field(), n);
    for (std::size_t k = 0; k < n; ++k) {
        // Delta'(e_k) = (p (x) p) Delta(p^-1 e_k)
        Vector pre = inv->col(k);
        Matrix t = p * c.delta_of(pre) * pt;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!t(i, j).is_zero()) entries.push_back({k, i, j, t(i, j)});
        counit[k] = dot(c.counit(), pre);
    }
    return Coalgebra(c.field(), n, entries, counit);
}

Coalgebra restrict_coalgebra(const Coalgebra& c, const Subspace& d) {
    if (!is_subcoalgebra(c, d)) throw InputError("restrict_coalgebra: subspace is not a subcoalgebra");
    const auto& piv = d.pivots();
    std::vector<Coalgebra::Entry> entries;
    Vector counit;
    for (std::size_t r = 0; r < d.dim(); ++r) {
        const Vector b = d.basis_vector(r);
        const Matrix t = c.delta_of(b);
        for (std::size_t s = 0; s < piv.size(); ++s)
            for (std::size_t u = 0; u < piv.size(); ++u)
                if (!t(piv[s], piv[u]).is_zero()) entries.push_back({r, s, u, t(piv[s], piv[u])});
        counit.push_back(dot(c.counit(), b));
    }
    return Coalgebra(c.field(), d.dim(), entries, counit);
}

Vector embed_coordinates(const Subspace& d, const Vector& coords) {
    if (coords.size() != d.dim()) throw InputError("embed_coordinates: length mismatch");
    Vector v = zero_vector(d.field(), d.ambient());
    for (std::size_t s = 0; s < coords.size(); ++s) axpy(v, coords[s], d.basis_vector(s));
    return v;
}

}  // namespace coalg
