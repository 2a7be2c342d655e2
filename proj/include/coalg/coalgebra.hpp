#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coalg/subspace.hpp"

namespace coalg {

/// One structure constant: Delta(e_k) contains coef * e_left (x) e_right.
struct DeltaTerm {
    std::size_t left = 0;
    std::size_t right = 0;
    Scalar coef;

    friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

/// A finite-dimensional coalgebra given by structure constants on the basis
/// e_0 .. e_{n-1}.
///
/// Tensor-square coordinates are row-major: e_i (x) e_j sits at i * n + j.
/// Construction merges repeated (k, i, j) terms and drops zeros, so terms(k)
/// is sorted and duplicate-free. The axioms are not checked on construction;
/// see check_coalgebra.
class Coalgebra {
public:
    struct Entry {
        std::size_t source;
        std::size_t left;
        std::size_t right;
        Scalar coef;
    };

    Coalgebra() = default;
    Coalgebra(Field f, std::size_t dim, const std::vector<Entry>& delta, Vector counit);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<DeltaTerm>& terms(std::size_t k) const { return delta_.at(k); }
    const Vector& counit() const { return counit_; }
    std::vector<Entry> entries() const;

    /// Delta(e_k) as an n x n matrix T with T(i, j) = c_k^{ij}.
    Matrix delta_matrix(std::size_t k) const;
    /// Delta(v) as an n x n matrix.
    Matrix delta_of(const Vector& v) const;

    friend bool operator==(const Coalgebra&, const Coalgebra&) = default;

private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<std::vector<DeltaTerm>> delta_;
    Vector counit_;
};

struct AxiomViolation {
    enum class Kind { coassociativity, left_counit, right_counit };
    Kind kind;
    std::size_t index;  // basis vector where the two sides differ
    std::string lhs;
    std::string rhs;
};

std::string describe(const AxiomViolation& v);

/// Every violated coassociativity / counit instance; empty iff c is a coalgebra.
std::vector<AxiomViolation> check_coalgebra(const Coalgebra& c);

/// The convolution algebra C* in dual-basis coordinates:
/// (f * g)(e_k) = sum c_k^{ij} f(e_i) g(e_j), unit = counit.
///
/// A light view; the referenced Coalgebra must outlive it.
class DualAlgebra {
public:
    explicit DualAlgebra(const Coalgebra& c) : parent_(&c) {}

    const Coalgebra& parent() const { return *parent_; }
    std::size_t dim() const { return parent_->dim(); }
    const Vector& unit() const { return parent_->counit(); }

    Vector multiply(const Vector& f, const Vector& g) const;
    /// Left multiplication by f as an n x n matrix acting on dual coordinates.
    Matrix left_multiplication(const Vector& f) const;
    /// span{ p * q } over canonical basis vectors of both factors.
    Subspace ideal_product(const Subspace& p, const Subspace& q) const;

private:
    const Coalgebra* parent_;
};

Vector dual_convolve(const DualAlgebra& a, const Vector& f, const Vector& g);

bool is_subcoalgebra(const Coalgebra& c, const Subspace& x);

/// Smallest subcoalgebra containing seed: closes seed under the left and
/// right coefficient slices of Delta until the dimension stops growing.
Subspace subcoalgebra_generated(const Coalgebra& c, const Subspace& seed);

enum class WedgeMode {
    fast,    // dual-ideal formula only
    verify,  // both formulas, ConsistencyError on disagreement
};

/// ker(C -> C (x) C -> C/X (x) C/Y). Quotient coordinates are the non-pivot
/// coordinates of the canonical bases of X and Y.
Subspace wedge_by_kernel(const Coalgebra& c, const Subspace& x, const Subspace& y);
/// (X^perp * Y^perp)^perp computed in the convolution algebra.
Subspace wedge_by_ideal(const Coalgebra& c, const Subspace& x, const Subspace& y);
Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y, WedgeMode mode = WedgeMode::fast);

struct WedgeTower {
    std::vector<Subspace> chain;  // e, e^e, e^e^e, ... ending at the first repeat
    const Subspace& limit() const { return chain.back(); }
};

/// Iterated wedge powers of a subcoalgebra until the dimension stabilizes.
WedgeTower wedge_tower(const Coalgebra& c, const Subspace& e, WedgeMode mode = WedgeMode::fast);

/// Transport along v -> p v: Delta' = (p (x) p) Delta p^-1, counit' = counit p^-1.
/// Throws InputError if p is singular.
Coalgebra change_basis(const Coalgebra& c, const Matrix& p);

/// The subcoalgebra d as a coalgebra in its own right, in the coordinates of
/// d's canonical basis. Throws InputError if d is not a subcoalgebra.
Coalgebra restrict_coalgebra(const Coalgebra& c, const Subspace& d);

/// Maps coordinates relative to d's canonical basis back into C.
Vector embed_coordinates(const Subspace& d, const Vector& coords);

}  // namespace coalg
