#pragma once

#include <vector>

#include "coalg/coalgebra.hpp"

namespace coalg {

/// Radical of C*, coradical C_0 = J^perp, and the simple subcoalgebras.
struct RadicalResult {
    Subspace radical;               // J, in dual coordinates
    Subspace coradical;             // C_0
    std::vector<Subspace> simples;  // sorted by their smallest canonical basis vector
};

/// Radical of the trace form (a, b) -> tr(L_{a*b}) of the left-regular
/// representation. Valid in characteristic 0 or p > dim; otherwise throws
/// RefusalError.
Subspace jacobson_radical(const DualAlgebra& a);

/// C_0 = J^perp. Throws ConsistencyError if the result is not a subcoalgebra.
Subspace coradical(const Coalgebra& c);

/// All simple subcoalgebras of C.
///
/// Works in the cosemisimple coalgebra C_0, whose dual is C*/J: splits the
/// centre of that semisimple algebra into primitive idempotents and recovers
/// each D_i as the annihilator in C_0 of the other blocks. Throws
/// RefusalError when a central minimal polynomial has an irreducible factor
/// of degree > 1 (non-split input).
std::vector<Subspace> simple_subcoalgebras(const Coalgebra& c);

RadicalResult analyze_radical(const Coalgebra& c);

/// p^k under the ideal product (k >= 1).
Subspace ideal_power(const DualAlgebra& a, const Subspace& p, std::size_t k);

/// Sort key shared by every set-valued output: ascending by the
/// lexicographically smallest canonical basis vector, ties by full basis.
bool canonical_less(const Subspace& a, const Subspace& b);

}  // namespace coalg
