#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "coalg/matrix.hpp"

namespace coalg {

/// A subspace of k^n held by its canonical basis: the nonzero rows of the
/// reduced row-echelon form of any spanning set.
///
/// Two Subspaces are equal iff their canonical bases are identical, so
/// equality is independent of how the subspace was produced.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of k^n.
    Subspace(Field f, std::size_t ambient);

    static Subspace zero(Field f, std::size_t ambient) { return Subspace(f, ambient); }
    static Subspace full(Field f, std::size_t ambient);
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors);
    /// Row space of m.
    static Subspace row_space(const Matrix& m);

    const Field& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the canonical basis; zero iff v lies in
    /// the subspace. The remainder vanishes on every pivot column.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    /// Coordinates of a contained vector in the canonical basis (read at the
    /// pivot columns). The caller guarantees containment.
    Vector coordinates(const Vector& v) const;
    /// span{ p v : v in this }
    Subspace image(const Matrix& p) const;

    /// Smallest basis row in lexicographic order; used as a sort key.
    Vector min_basis_vector() const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    /// Deterministic total order: ambient, dimension, then basis entries.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    Field field_;
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space { v : m v = 0 }, canonicalized; dim = cols - rank.
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace sum(const std::vector<Subspace>& parts, Field f, std::size_t ambient);
Subspace intersect(const Subspace& a, const Subspace& b);
/// { f in (k^n)* : f(x) = 0 for all x }, with the dual identified with k^n
/// through the dual basis.
Subspace annihilator(const Subspace& x);
bool contains(const Subspace& a, const Subspace& b);

}  // namespace coalg
