#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coalg/comodule.hpp"

namespace coalg {

/// A finite quiver together with a bound on path length.
struct QuiverSpec {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
    std::size_t max_path_length = 0;
};

/// g_0 .. g_{n-1} with Delta(g) = g (x) g, eps(g) = 1.
Coalgebra grouplike(const Field& f, std::size_t n);

/// Basis e_ij at index i * n + j, Delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = delta_ij.
Coalgebra matrix_coalgebra(const Field& f, std::size_t n);

/// Paths of length <= max_path_length. Basis order: vertices, then paths by
/// length, then by arrow-index sequence. Delta splits a path at every vertex
/// it passes through; vertices are group-like.
Coalgebra path_coalgebra(const Field& f, const QuiverSpec& q);
/// Labels for the path basis: vertex names "v0", ... and arrow words "a0a2".
std::vector<std::string> path_labels(const QuiverSpec& q);

/// c1 on the first dim c1 coordinates, c2 on the rest.
Coalgebra direct_sum_coalgebras(const Coalgebra& c1, const Coalgebra& c2);
/// m1 (+) m2 over their common coalgebra. Throws InputError otherwise.
Comodule direct_sum_comodules(const Comodule& m1, const Comodule& m2);
/// m1 (+) m2 over direct_sum_coalgebras of their coalgebras.
Comodule block_sum_comodules(const Comodule& m1, const Comodule& m2);

/// C as a right comodule over itself (rho = Delta).
Comodule regular_comodule(std::shared_ptr<const Coalgebra> c);
Comodule regular_comodule(const Coalgebra& c);

/// v_0 .. v_{n-1} over matrix_coalgebra(n) with rho(v_i) = sum_j v_j (x) e_ji.
Comodule standard_matrix_comodule(const Field& f, std::size_t n);

/// permutation * unit lower triangular with entries in [-2, 2]; seed 0 gives
/// the identity.
Matrix random_invertible(const Field& f, std::size_t n, std::uint64_t seed);

/// change_basis along random_invertible(seed).
Coalgebra randomized_basis(const Coalgebra& c, std::uint64_t seed);
/// Comodule basis twisted by random_invertible(comodule_twist_seed(seed)),
/// coalgebra basis by random_invertible(seed).
Comodule randomized_basis(const Comodule& m, std::uint64_t seed);
std::uint64_t comodule_twist_seed(std::uint64_t seed);

}  // namespace coalg
