#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalg/comodule.hpp"

namespace coalg {

/// Link equivalence as graph connectivity.
///
/// Two vertices are linked when they lie in one connected component of the
/// graph whose edges are the pairs {u, v} with u ^ v != v ^ u. This is the
/// same relation as "every 2-partition of the vertex set separating D from E
/// is crossed by a noncommuting pair". If D and E are connected, any
/// separating partition cuts the connecting path, so some edge of the path
/// crosses it. If they are not connected, take the component of D as one side
/// and everything else as the other: no edge leaves a component, so this cut
/// is crossed by no noncommuting pair.
struct LinkGraph {
    enum class Side { coalgebra, comodule };
    Side side = Side::coalgebra;
    std::vector<Subspace> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v
    std::vector<std::vector<std::size_t>> classes;          // vertex indices, ascending

    bool has_edges() const { return !edges.empty(); }
    /// Index into `classes` of a vertex.
    std::size_t class_of(std::size_t vertex) const;
};

/// Graph on the simple subcoalgebras (sorted by canonical_less). Classes are
/// ordered by their sum E_alpha under canonical_less.
LinkGraph link_classes_coalgebra(const Coalgebra& c, WedgeMode mode = WedgeMode::fast);
LinkGraph link_classes_coalgebra(const Coalgebra& c, const std::vector<Subspace>& simples,
                                 WedgeMode mode = WedgeMode::fast);

/// Graph on the nonzero minimal closed subcomodules M_D, in the order of
/// the simples they come from. Classes are ordered by their sum.
LinkGraph link_classes_comodule(const Comodule& m, WedgeMode mode = WedgeMode::fast);
LinkGraph link_classes_comodule(const Comodule& m, const std::vector<Subspace>& minimal_closed,
                                WedgeMode mode = WedgeMode::fast);

/// Indecomposable subcoalgebras (E_alpha)^(infinity), one per link class.
/// Throws ConsistencyError if they do not form a direct sum equal to C.
std::vector<Subspace> decompose_coalgebra(const Coalgebra& c, WedgeMode mode = WedgeMode::fast);

struct Options {
    WedgeMode wedge_mode = WedgeMode::fast;
    std::uint64_t seed = kDefaultSampleSeed;
    std::size_t random_subcomodules = 8;  // extra generated subcomodules probed by verify_structure
};

struct CoalgebraClass {
    std::vector<std::size_t> simples;  // indices into DecompositionReport::simples
    Subspace sum;                      // E_alpha
    WedgeTower tower;                  // E_alpha, ^2 E_alpha, ... (E_alpha)^(infinity)
};

/// One refinement cell E(alpha, i): the simples of class alpha whose
/// components fall into comodule class i. Simples with M_D = 0 are gathered
/// into a single zero cell per class.
struct RefinementCell {
    std::optional<std::size_t> comodule_class;  // index into comodule_graph.classes; empty for the zero cell
    std::vector<std::size_t> simples;
    Subspace sum;          // E(alpha, i)
    Subspace component;    // M_{E(alpha, i)}
    ComoduleTower tower;   // ending at (M_{E(alpha, i)})^(infinity)
};

struct ClassReport {
    CoalgebraClass coalgebra;
    Subspace summand;             // M_{(E_alpha)^(infinity)}
    Subspace component_of_sum;    // M_{E_alpha}
    ComoduleTower component_tower;  // ending at (M_{E_alpha})^(infinity)
    std::vector<RefinementCell> cells;
    // summand == component tower limit == sum of cell limits; always true when
    // M is component faithful, can fail otherwise
    bool tower_chain_holds = true;
};

struct Flags {
    bool full = false;
    bool component_faithful = false;
    bool pi_commutative_C = false;
    bool pi_commutative_M = false;
    bool w_relational_hereditary = false;
    bool indecomposable_C = false;
    bool indecomposable_M = false;
    bool irreducible_C = false;
    bool relative_irreducible_M = false;
    bool cosemisimple = false;
};

struct TheoremCheck {
    enum class Status { pass, fail, not_applicable };
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

std::string to_string(TheoremCheck::Status s);

struct DecompositionReport {
    std::size_t coalgebra_dim = 0;
    std::size_t comodule_dim = 0;
    std::vector<Subspace> simples;     // of C, sorted by canonical_less
    std::vector<Subspace> components;  // M_D for each simple, possibly zero
    Subspace coefficients;             // C(M)
    Subspace socle;                    // M_0
    LinkGraph coalgebra_graph;
    LinkGraph comodule_graph;
    std::vector<std::size_t> comodule_vertex_simple;  // simple behind each comodule vertex
    std::vector<ClassReport> classes;
    std::vector<Subspace> coalgebra_summands;  // (E_alpha)^(infinity), per class
    std::vector<Subspace> summands;            // the nonzero M_{(E_alpha)^(infinity)}
    Flags flags;
    std::vector<TheoremCheck> checks;  // filled by verify_structure
};

/// Both decompositions, the refinement cells and the classification flags.
/// Every equality the construction relies on is checked; a failure throws
/// ConsistencyError.
DecompositionReport decompose_comodule(const Comodule& m, const Options& opt = {});

Flags classify(const Comodule& m, const Options& opt = {});

/// Structural identities evaluated on one instance. Implications whose
/// hypotheses fail are reported as not_applicable. A fail means a bug here.
std::vector<TheoremCheck> verify_structure(const Comodule& m, const Options& opt = {});
std::vector<TheoremCheck> verify_structure(const Comodule& m, const DecompositionReport& r, const Options& opt = {});

/// True if rho coincides with Delta (M is C as a right comodule over itself).
bool is_regular_comodule(const Comodule& m);

}  // namespace coalg
