#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coalg/coalgebra.hpp"

namespace coalg {

/// One coaction constant: rho(m_x) contains coef * m_target (x) e_coalgebra.
struct CoactionTerm {
    std::size_t target = 0;
    std::size_t coalgebra = 0;
    Scalar coef;

    friend bool operator==(const CoactionTerm&, const CoactionTerm&) = default;
};

/// A finite-dimensional right C-comodule rho : M -> M (x) C.
///
/// The coalgebra is shared read-only. Coordinates of M (x) C are row-major
/// (y, k) -> y * dim C + k. Axioms are checked by check_comodule, not here.
class Comodule {
public:
    struct Entry {
        std::size_t source;
        std::size_t target;
        std::size_t coalgebra;
        Scalar coef;
    };

    Comodule() = default;
    Comodule(std::shared_ptr<const Coalgebra> c, std::size_t dim, const std::vector<Entry>& rho);

    const Coalgebra& coalgebra() const { return *coalgebra_; }
    std::shared_ptr<const Coalgebra> coalgebra_ptr() const { return coalgebra_; }
    const Field& field() const { return coalgebra_->field(); }
    std::size_t dim() const { return dim_; }
    const std::vector<CoactionTerm>& terms(std::size_t x) const { return rho_.at(x); }
    std::vector<Entry> entries() const;

    /// rho(v) as a dim M x dim C matrix R with R(y, k) the coefficient of m_y (x) e_k.
    Matrix coaction_of(const Vector& v) const;

    friend bool operator==(const Comodule& a, const Comodule& b);

private:
    std::shared_ptr<const Coalgebra> coalgebra_;
    std::size_t dim_ = 0;
    std::vector<std::vector<CoactionTerm>> rho_;
};

struct ComoduleViolation {
    enum class Kind { coassociativity, counit };
    Kind kind;
    std::size_t index;
    std::string lhs;
    std::string rhs;
};

std::string describe(const ComoduleViolation& v);

/// Every violated instance of (rho (x) id) rho = (id (x) Delta) rho and
/// (id (x) eps) rho = id; empty iff M is a comodule.
std::vector<ComoduleViolation> check_comodule(const Comodule& m);

/// f . x = (id (x) f) rho(x): the left C*-module structure on M.
Vector dual_action(const Comodule& m, const Vector& f, const Vector& x);
/// The matrix of x -> f . x.
Matrix action_matrix(const Comodule& m, const Vector& f);

bool is_subcomodule(const Comodule& m, const Subspace& n);
/// C* . seed, the smallest subcomodule containing seed.
Subspace subcomodule_generated(const Comodule& m, const Subspace& seed);

/// C(N): span of the coefficient slices (phi (x) id) rho(v), v in N, phi in M*.
/// Throws InputError if n is not a subcomodule.
Subspace coefficient_coalgebra(const Comodule& m, const Subspace& n);

/// N^perp in C*: kernel of the stacked action maps restricted to N.
Subspace ann_dual(const Comodule& m, const Subspace& n);
/// P^perp in M: { x : p . x = 0 for all p in P }.
Subspace ann_module(const Comodule& m, const Subspace& p);
/// <N> = (N^perp)^perp.
Subspace closure(const Comodule& m, const Subspace& n);

struct WeakClosedVerdict {
    enum class Value { yes, no, unknown };
    Value value = Value::unknown;
    std::optional<Vector> witness;  // x in N with <C* x> not contained in N
    std::size_t samples = 0;        // random vectors tried
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSampleSeed = 0x5eed5eedULL;
inline constexpr std::size_t kDefaultWeakClosedSamples = 64;

/// Three-valued. yes: N is closed, or (over F_p with p^dim N <= 4096) every
/// element of N was checked. no: some x in N has <C* x> outside N; the first
/// such x found is returned. unknown: no witness among the basis vectors of N
/// and `samples` seeded pseudo-random combinations.
WeakClosedVerdict is_weak_closed(const Comodule& m, const Subspace& n, std::size_t samples = kDefaultWeakClosedSamples,
                                 std::uint64_t seed = kDefaultSampleSeed);

/// M_E, the largest subcomodule N with rho(N) in N (x) E, as the greatest
/// fixpoint of N -> { x in N : rho(x) in N (x) E } starting from M.
/// Throws InputError if e is not a subcoalgebra.
Subspace component(const Comodule& m, const Subspace& e);

/// (N^perp L^perp)^perp. In verify mode also computes
/// rho^-1(M (x) (C(N) ^ C(L))) through the coalgebra kernel-route wedge and
/// throws ConsistencyError if the two differ.
Subspace comodule_wedge(const Comodule& m, const Subspace& n, const Subspace& l, WedgeMode mode = WedgeMode::fast);

struct ComoduleTower {
    std::vector<Subspace> chain;
    const Subspace& limit() const { return chain.back(); }
};

ComoduleTower comodule_wedge_tower(const Comodule& m, const Subspace& n, WedgeMode mode = WedgeMode::fast);

/// Functionals on C whose restriction to C(M) lies in the radical of C(M)*.
Subspace coefficient_radical_lift(const Comodule& m);

struct SocleResult {
    Subspace via_component;  // M_{C_0}
    Subspace via_radical;    // (rad C(M)^*)^perp in M
    bool agree = false;
    const Subspace& socle() const { return via_component; }
};

/// M_0 computed both as the component over the coradical and as the
/// annihilator of the radical of C(M)*. Disagreement throws ConsistencyError.
SocleResult socle(const Comodule& m);

struct MinimalClosed {
    Subspace simple;     // D
    Subspace component;  // M_D, nonzero
};

/// Pairs (D, M_D) over the simple subcoalgebras D with M_D != 0, in the
/// order of `simples`.
std::vector<MinimalClosed> minimal_closed_subcomodules(const Comodule& m, const std::vector<Subspace>& simples);
std::vector<MinimalClosed> minimal_closed_subcomodules(const Comodule& m);

/// rho corestricted to a subcoalgebra d containing C(M), in d's canonical
/// coordinates. Throws InputError if rho(M) is not inside M (x) d.
Comodule corestrict_comodule(const Comodule& m, const Subspace& d);

/// The subcomodule n as a comodule in its own right (coordinates of n's
/// canonical basis). Throws InputError if n is not a subcomodule.
Comodule subcomodule_as_comodule(const Comodule& m, const Subspace& n);

/// Transport along x -> q x on M and the coalgebra change p on C.
Comodule change_basis(const Comodule& m, const Matrix& q, const Matrix& p);

}  // namespace coalg
