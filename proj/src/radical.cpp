#include "coalg/radical.hpp"

#include <algorithm>
#include <optional>

#include "coalg/errors.hpp"
#include "coalg/polynomial.hpp"

namespace coalg {

namespace {

void require_supported_field(const Field& f, std::size_t dim) {
    if (!f.is_rational() && f.characteristic() <= dim)
        throw RefusalError("radical computation needs characteristic 0 or p > dim; got p = " +
                           std::to_string(f.characteristic()) + " with dual algebra of dimension " +
                           std::to_string(dim));
}

// Coefficients a with target = sum a_i vectors[i], if any.
std::optional<Vector> solve_in_span(const std::vector<Vector>& vectors, const Vector& target, const Field& f) {
    const std::size_t n = target.size();
    Matrix system(f, n, vectors.size() + 1);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t r = 0; r < n; ++r) system(r, i) = vectors[i][r];
    for (std::size_t r = 0; r < n; ++r) system(r, vectors.size()) = -target[r];
    Subspace rel = kernel(system);
    for (std::size_t k = 0; k < rel.dim(); ++k) {
        Vector v = rel.basis_vector(k);
        const Scalar last = v.back();
        if (last.is_zero()) continue;
        v.pop_back();
        return scaled(v, last.inverse());
    }
    return std::nullopt;
}

// Primitive idempotents of the commutative split semisimple algebra spanned
// by `centre` inside the algebra `s`.
std::vector<Vector> primitive_central_idempotents(const DualAlgebra& s, const Subspace& centre) {
    const Field f = s.parent().field();
    std::vector<Vector> primitives;
    std::vector<Vector> work{s.unit()};
    while (!work.empty()) {
        Vector e = std::move(work.back());
        work.pop_back();
        std::optional<Vector> splitter;
        const Subspace line = Subspace::span(f, s.dim(), {e});
        for (std::size_t i = 0; i < centre.dim() && !splitter; ++i) {
            Vector w = s.multiply(e, centre.basis_vector(i));
            if (!line.contains(w)) splitter = std::move(w);
        }
        if (!splitter) {
            primitives.push_back(std::move(e));
            continue;
        }
        const Vector& w = *splitter;
        // Minimal polynomial of w in the unital algebra e * Z.
        std::vector<Vector> powers{e, w};
        std::optional<Vector> relation;
        while (!(relation = solve_in_span({powers.begin(), powers.end() - 1}, powers.back(), f))) {
            if (powers.size() > s.dim() + 1) throw ConsistencyError("minimal polynomial degree exceeds dimension");
            powers.push_back(s.multiply(powers.back(), w));
        }
        Polynomial mu;
        for (const auto& a : *relation) mu.push_back(-a);
        mu.push_back(f.one());
        const LinearSplit split = split_linear_factors(mu);
        if (degree(split.residual) > 0) {
            for (const auto& r : split.roots)
                if (evaluate(split.residual, r).is_zero())
                    throw ConsistencyError("central minimal polynomial is not squarefree: " + format_polynomial(mu));
            throw RefusalError("non-split semisimple component: central minimal polynomial " + format_polynomial(mu) +
                               " has irreducible factor " + format_polynomial(split.residual) + " of degree " +
                               std::to_string(degree(split.residual)) + " over " + f.name());
        }
        // Lagrange idempotents prod_{mu != lambda} (w - mu e) / (lambda - mu).
        for (const auto& lambda : split.roots) {
            Vector idem = e;
            for (const auto& other : split.roots) {
                if (other == lambda) continue;
                Vector factor = w;
                axpy(factor, -other, e);
                idem = scaled(s.multiply(idem, factor), (lambda - other).inverse());
            }
            work.push_back(std::move(idem));
        }
    }
    return primitives;
}

}  // namespace

bool canonical_less(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.is_zero() || b.is_zero()) return a < b;
    auto c = lex_compare(a.min_basis_vector(), b.min_basis_vector());
    if (c != 0) return c < 0;
    return a < b;
}

Subspace jacobson_radical(const DualAlgebra& a) {
    const Coalgebra& c = a.parent();
    const Field f = c.field();
    const std::size_t n = c.dim();
    require_supported_field(f, n);
    // tr(L_{delta_l}) = sum_j c_j^{l j}
    Vector traces = zero_vector(f, n);
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : c.terms(k))
            if (t.right == k) traces[t.left] += t.coef;
    // Gram matrix G(i, j) = tr(L_{delta_i * delta_j}) = sum_l traces_l c_l^{ij}
    Matrix gram(f, n, n);
    for (std::size_t l = 0; l < n; ++l) {
        if (traces[l].is_zero()) continue;
        for (const auto& t : c.terms(l)) gram(t.left, t.right) += traces[l] * t.coef;
    }
    return kernel(gram.transpose());
}

Subspace coradical(const Coalgebra& c) {
    Subspace c0 = annihilator(jacobson_radical(DualAlgebra(c)));
    if (!is_subcoalgebra(c, c0)) throw ConsistencyError("coradical is not a subcoalgebra");
    return c0;
}

std::vector<Subspace> simple_subcoalgebras(const Coalgebra& c) {
    const Field f = c.field();
    const Subspace c0 = coradical(c);
    if (c0.is_zero()) return {};
    const Coalgebra s = restrict_coalgebra(c, c0);
    const DualAlgebra dual(s);
    const std::size_t d = s.dim();
    // Centre: z * delta_j - delta_j * z = 0 for every j.
    Matrix commutator(f, d * d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (const auto& t : s.terms(k)) {
            commutator(t.right * d + k, t.left) += t.coef;
            commutator(t.left * d + k, t.right) -= t.coef;
        }
    const Subspace centre = kernel(commutator);
    const std::vector<Vector> idempotents = primitive_central_idempotents(dual, centre);

    std::vector<Subspace> blocks;
    for (const auto& e : idempotents) {
        std::vector<Vector> gens;
        for (std::size_t j = 0; j < d; ++j) gens.push_back(dual.multiply(unit_vector(f, d, j), e));
        blocks.push_back(Subspace::span(f, d, gens));
    }
    std::vector<Subspace> simples;
    std::size_t total = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<Subspace> others;
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (j != i) others.push_back(blocks[j]);
        const Subspace local = annihilator(sum(others, f, d));
        std::vector<Vector> vectors;
        for (std::size_t r = 0; r < local.dim(); ++r) vectors.push_back(embed_coordinates(c0, local.basis_vector(r)));
        Subspace di = Subspace::span(f, c.dim(), vectors);
        if (di.is_zero() || !is_subcoalgebra(c, di)) throw ConsistencyError("simple block is not a subcoalgebra");
        total += di.dim();
        simples.push_back(std::move(di));
    }
    if (total != c0.dim() || !(sum(simples, f, c.dim()) == c0))
        throw ConsistencyError("simple subcoalgebras do not sum directly to the coradical");
    std::sort(simples.begin(), simples.end(), canonical_less);
    return simples;
}

RadicalResult analyze_radical(const Coalgebra& c) {
    RadicalResult r;
    r.radical = jacobson_radical(DualAlgebra(c));
    r.coradical = annihilator(r.radical);
    r.simples = simple_subcoalgebras(c);
    return r;
}

Subspace ideal_power(const DualAlgebra& a, const Subspace& p, std::size_t k) {
    if (k == 0) throw InputError("ideal_power: exponent must be >= 1");
    Subspace acc = p;
    for (std::size_t i = 1; i < k && !acc.is_zero(); ++i) acc = a.ideal_product(acc, p);
    return acc;
}

}  // namespace coalg
