#include "coalg/builders.hpp"

#include <algorithm>
#include <numeric>

#include "coalg/errors.hpp"
#include "coalg/sampling.hpp"

namespace coalg {

namespace {

struct Path {
    std::size_t source;
    std::size_t target;
    std::vector<std::size_t> arrows;
};

std::vector<Path> enumerate_paths(const QuiverSpec& q) {
    for (const auto& [s, t] : q.arrows)
        if (s >= q.vertices || t >= q.vertices) throw InputError("quiver arrow endpoint out of range");
    std::vector<Path> paths;
    for (std::size_t v = 0; v < q.vertices; ++v) paths.push_back({v, v, {}});
    std::vector<Path> layer;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({q.arrows[a].first, q.arrows[a].second, {a}});
    for (std::size_t len = 1; len <= q.max_path_length && !layer.empty(); ++len) {
        paths.insert(paths.end(), layer.begin(), layer.end());
        std::vector<Path> next;
        for (const auto& p : layer)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].first == p.target) {
                    Path longer = p;
                    longer.arrows.push_back(a);
                    longer.target = q.arrows[a].second;
                    next.push_back(std::move(longer));
                }
        layer = std::move(next);
    }
    return paths;
}

}  // namespace

Coalgebra grouplike(const Field& f, std::size_t n) {
    if (n == 0) throw InputError("grouplike: n must be at least 1");
    std::vector<Coalgebra::Entry> delta;
    for (std::size_t g = 0; g < n; ++g) delta.push_back({g, g, g, f.one()});
    return Coalgebra(f, n, delta, Vector(n, f.one()));
}

Coalgebra matrix_coalgebra(const Field& f, std::size_t n) {
    if (n == 0) throw InputError("matrix_coalgebra: n must be at least 1");
    std::vector<Coalgebra::Entry> delta;
    Vector counit = zero_vector(f, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        counit[i * n + i] = f.one();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) delta.push_back({i * n + j, i * n + k, k * n + j, f.one()});
    }
    return Coalgebra(f, n * n, delta, counit);
}

Coalgebra path_coalgebra(const Field& f, const QuiverSpec& q) {
    const std::vector<Path> paths = enumerate_paths(q);
    auto index_of = [&](std::size_t source, std::size_t target, const std::vector<std::size_t>& arrows) {
        for (std::size_t i = 0; i < paths.size(); ++i)
            if (paths[i].source == source && paths[i].target == target && paths[i].arrows == arrows) return i;
        throw ConsistencyError("path_coalgebra: subpath missing from basis");
    };
    std::vector<Coalgebra::Entry> delta;
    Vector counit = zero_vector(f, paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const Path& p = paths[k];
        if (p.arrows.empty()) counit[k] = f.one();
        for (std::size_t cut = 0; cut <= p.arrows.size(); ++cut) {
            const std::vector<std::size_t> head(p.arrows.begin(), p.arrows.begin() + cut);
            const std::vector<std::size_t> tail(p.arrows.begin() + cut, p.arrows.end());
            const std::size_t middle = cut == 0 ? p.source : q.arrows[p.arrows[cut - 1]].second;
            delta.push_back({k, index_of(p.source, middle, head), index_of(middle, p.target, tail), f.one()});
        }
    }
    return Coalgebra(f, paths.size(), delta, counit);
}

std::vector<std::string> path_labels(const QuiverSpec& q) {
    std::vector<std::string> labels;
    for (const auto& p : enumerate_paths(q)) {
        if (p.arrows.empty()) {
            labels.push_back("v" + std::to_string(p.source));
            continue;
        }
        std::string s;
        for (std::size_t a : p.arrows) s += "a" + std::to_string(a);
        labels.push_back(std::move(s));
    }
    return labels;
}

Coalgebra direct_sum_coalgebras(const Coalgebra& c1, const Coalgebra& c2) {
    if (!(c1.field() == c2.field())) throw InputError("direct_sum_coalgebras: fields differ");
    const std::size_t shift = c1.dim();
    std::vector<Coalgebra::Entry> delta = c1.entries();
    for (auto e : c2.entries()) delta.push_back({e.source + shift, e.left + shift, e.right + shift, e.coef});
    Vector counit = c1.counit();
    counit.insert(counit.end(), c2.counit().begin(), c2.counit().end());
    return Coalgebra(c1.field(), c1.dim() + c2.dim(), delta, counit);
}

Comodule direct_sum_comodules(const Comodule& m1, const Comodule& m2) {
    if (!(m1.coalgebra() == m2.coalgebra())) throw InputError("direct_sum_comodules: comodules over different coalgebras");
    const std::size_t shift = m1.dim();
    std::vector<Comodule::Entry> rho = m1.entries();
    for (auto e : m2.entries()) rho.push_back({e.source + shift, e.target + shift, e.coalgebra, e.coef});
    return Comodule(m1.coalgebra_ptr(), m1.dim() + m2.dim(), rho);
}

Comodule block_sum_comodules(const Comodule& m1, const Comodule& m2) {
    auto c = std::make_shared<const Coalgebra>(direct_sum_coalgebras(m1.coalgebra(), m2.coalgebra()));
    const std::size_t mshift = m1.dim();
    const std::size_t cshift = m1.coalgebra().dim();
    std::vector<Comodule::Entry> rho = m1.entries();
    for (auto e : m2.entries()) rho.push_back({e.source + mshift, e.target + mshift, e.coalgebra + cshift, e.coef});
    return Comodule(c, m1.dim() + m2.dim(), rho);
}

Comodule regular_comodule(std::shared_ptr<const Coalgebra> c) {
    std::vector<Comodule::Entry> rho;
    for (const auto& e : c->entries()) rho.push_back({e.source, e.left, e.right, e.coef});
    const std::size_t n = c->dim();
    return Comodule(std::move(c), n, rho);
}

Comodule regular_comodule(const Coalgebra& c) { return regular_comodule(std::make_shared<const Coalgebra>(c)); }

Comodule standard_matrix_comodule(const Field& f, std::size_t n) {
    auto c = std::make_shared<const Coalgebra>(matrix_coalgebra(f, n));
    std::vector<Comodule::Entry> rho;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rho.push_back({i, j, j * n + i, f.one()});
    return Comodule(c, n, rho);
}

Matrix random_invertible(const Field& f, std::size_t n, std::uint64_t seed) {
    if (seed == 0) return Matrix::identity(f, n);
    SampleRng rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Matrix lower = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) lower(i, j) = f.from_int(rng.between(-2, 2));
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(perm[i], j) = lower(i, j);
    return out;
}

std::uint64_t comodule_twist_seed(std::uint64_t seed) { return seed == 0 ? 0 : seed ^ 0x9e3779b97f4a7c15ULL; }

Coalgebra randomized_basis(const Coalgebra& c, std::uint64_t seed) {
    return change_basis(c, random_invertible(c.field(), c.dim(), seed));
}

Comodule randomized_basis(const Comodule& m, std::uint64_t seed) {
    return change_basis(m, random_invertible(m.field(), m.dim(), comodule_twist_seed(seed)),
                        random_invertible(m.field(), m.coalgebra().dim(), seed));
}

}  // namespace coalg
