#pragma once

// Shared instances for unit and acceptance tests. Each coalgebra carries the
// simple subcoalgebras known from how it was built, so tests can compare the
// radical machinery against something it did not compute.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "coalg/builders.hpp"
#include "coalg/errors.hpp"
#include "coalg/decomp.hpp"
#include "coalg/radical.hpp"

namespace corpus {

using namespace coalg;

struct KnownCoalgebra {
    std::string name;
    Coalgebra c;
    std::vector<Subspace> simples;  // from construction
};

struct KnownComodule {
    std::string name;
    Comodule m;
    std::vector<Subspace> simples;  // simples of m.coalgebra(), from construction
};

inline Vector vec(const Field& f, std::initializer_list<std::int64_t> xs) {
    Vector v;
    for (auto x : xs) v.push_back(f.from_int(x));
    return v;
}

inline Subspace span_of(const Field& f, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<Vector> v;
    for (const auto& r : rows) v.push_back(vec(f, r));
    return Subspace::span(f, n, v);
}

inline Subspace unit_span(const Field& f, std::size_t n, std::vector<std::size_t> idx) {
    std::vector<Vector> v;
    for (auto i : idx) v.push_back(unit_vector(f, n, i));
    return Subspace::span(f, n, v);
}

inline QuiverSpec quiver(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> arrows,
                         std::size_t length) {
    return QuiverSpec{vertices, std::move(arrows), length};
}

inline std::vector<Subspace> vertex_simples(const Field& f, std::size_t vertices, std::size_t dim) {
    std::vector<Subspace> out;
    for (std::size_t v = 0; v < vertices; ++v) out.push_back(unit_span(f, dim, {v}));
    return out;
}

inline KnownCoalgebra known_grouplike(const Field& f, std::size_t n) {
    return {"grouplike(" + std::to_string(n) + ")", grouplike(f, n), vertex_simples(f, n, n)};
}

inline KnownCoalgebra known_matrix(const Field& f, std::size_t n) {
    return {"matrix(" + std::to_string(n) + ")", matrix_coalgebra(f, n), {Subspace::full(f, n * n)}};
}

inline KnownCoalgebra known_path(const Field& f, const std::string& name, const QuiverSpec& q) {
    Coalgebra c = path_coalgebra(f, q);
    const std::size_t n = c.dim();
    return {name, std::move(c), vertex_simples(f, q.vertices, n)};
}

/// The running example: x -> y, basis (x, y, a), Delta a = x (x) a + a (x) y.
inline KnownCoalgebra known_running(const Field& f) { return known_path(f, "path(x->y)", quiver(2, {{0, 1}}, 1)); }

inline Subspace shift_into(const Subspace& s, std::size_t offset, std::size_t ambient) {
    std::vector<Vector> v;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vector w = zero_vector(s.field(), ambient);
        const Vector b = s.basis_vector(i);
        for (std::size_t k = 0; k < b.size(); ++k) w[offset + k] = b[k];
        v.push_back(std::move(w));
    }
    return Subspace::span(s.field(), ambient, v);
}

inline KnownCoalgebra known_sum(const KnownCoalgebra& a, const KnownCoalgebra& b) {
    KnownCoalgebra out{a.name + "+" + b.name, direct_sum_coalgebras(a.c, b.c), {}};
    const std::size_t n = out.c.dim();
    for (const auto& s : a.simples) out.simples.push_back(shift_into(s, 0, n));
    for (const auto& s : b.simples) out.simples.push_back(shift_into(s, a.c.dim(), n));
    return out;
}

inline KnownCoalgebra twisted(const KnownCoalgebra& k, std::uint64_t seed) {
    const Matrix p = random_invertible(k.c.field(), k.c.dim(), seed);
    KnownCoalgebra out{k.name + "@" + std::to_string(seed), change_basis(k.c, p), {}};
    for (const auto& s : k.simples) out.simples.push_back(s.image(p));
    return out;
}

inline std::vector<KnownCoalgebra> coalgebras() {
    const Field q = Field::rationals();
    const Field f101 = Field::prime(101);
    const Field big = Field::prime(1000003);
    std::vector<KnownCoalgebra> out{
        known_grouplike(q, 1),
        known_grouplike(q, 3),
        known_matrix(q, 2),
        known_matrix(q, 3),
        known_running(q),
        known_path(q, "path(2-cycle)", quiver(2, {{0, 1}, {1, 0}}, 1)),
        known_path(q, "path(A3+shortcut,2)", quiver(3, {{0, 1}, {1, 2}, {0, 2}}, 2)),
        known_path(q, "path(loop,3)", quiver(1, {{0, 0}}, 3)),
        known_path(q, "path(kronecker)", quiver(2, {{0, 1}, {0, 1}}, 1)),
        known_sum(known_matrix(q, 2), known_grouplike(q, 1)),
        known_sum(known_running(q), known_grouplike(q, 1)),
        known_sum(known_running(q), known_matrix(q, 2)),
        known_path(f101, "path(2-cycle,2)/F101", quiver(2, {{0, 1}, {1, 0}}, 2)),
        known_sum(known_matrix(f101, 2), known_grouplike(f101, 2)),
        known_sum(known_grouplike(big, 2), known_running(big)),
    };
    out.push_back(twisted(known_running(q), 11));
    out.push_back(twisted(known_sum(known_matrix(q, 2), known_grouplike(q, 1)), 12));
    out.push_back(twisted(known_sum(known_matrix(f101, 2), known_grouplike(f101, 2)), 13));
    return out;
}

inline KnownComodule regular_of(const KnownCoalgebra& k) {
    return {"regular " + k.name, regular_comodule(k.c), k.simples};
}

/// span{x} inside the regular comodule of the running example: M = kx.
inline KnownComodule running_kx(const Field& f) {
    const KnownCoalgebra k = known_running(f);
    const Comodule reg = regular_comodule(k.c);
    return {"kx over path", subcomodule_as_comodule(reg, unit_span(f, 3, {0})), k.simples};
}

/// span{x, a}: C(M) = C but the component over ky vanishes.
inline KnownComodule running_xa(const Field& f) {
    const KnownCoalgebra k = known_running(f);
    const Comodule reg = regular_comodule(k.c);
    return {"span{x,a} over path", subcomodule_as_comodule(reg, unit_span(f, 3, {0, 2})), k.simples};
}

inline KnownComodule standard(const Field& f, std::size_t n) {
    return {"standard(" + std::to_string(n) + ")", standard_matrix_comodule(f, n), known_matrix(f, n).simples};
}

inline KnownComodule twisted(const KnownComodule& k, std::uint64_t seed) {
    const Matrix p = random_invertible(k.m.field(), k.m.coalgebra().dim(), seed);
    KnownComodule out{k.name + "@" + std::to_string(seed), randomized_basis(k.m, seed), {}};
    for (const auto& s : k.simples) out.simples.push_back(s.image(p));
    return out;
}

inline std::vector<KnownComodule> comodules() {
    const Field q = Field::rationals();
    const Field f101 = Field::prime(101);
    std::vector<KnownComodule> out;
    for (const auto& k : coalgebras()) out.push_back(regular_of(k));
    out.push_back(standard(q, 2));
    out.push_back(standard(q, 3));
    out.push_back(standard(f101, 2));
    out.push_back(running_kx(q));
    out.push_back(running_xa(q));
    {
        // standard(2) (+) regular grouplike(2) over matrix(2) (+) grouplike(2)
        const KnownComodule s = standard(q, 2);
        const KnownCoalgebra g = known_grouplike(q, 2);
        KnownComodule b{"standard(2)|regular grouplike(2)", block_sum_comodules(s.m, regular_comodule(g.c)), {}};
        b.simples = known_sum(known_matrix(q, 2), g).simples;
        out.push_back(std::move(b));
    }
    {
        // C (+) kx over the running example
        const KnownCoalgebra k = known_running(q);
        auto c = std::make_shared<const Coalgebra>(k.c);
        const Comodule reg = regular_comodule(c);
        const Comodule kx = subcomodule_as_comodule(reg, unit_span(q, 3, {0}));
        out.push_back({"regular path + kx", direct_sum_comodules(reg, kx), k.simples});
    }
    {
        // kx (+) ky over path (+) grouplike(1): not full, misses the grouplike
        const KnownCoalgebra k = known_sum(known_running(q), known_grouplike(q, 1));
        auto c = std::make_shared<const Coalgebra>(k.c);
        const Comodule reg = regular_comodule(c);
        out.push_back({"kx+ky over path+g", subcomodule_as_comodule(reg, unit_span(q, 4, {0, 1})), k.simples});
    }
    {
        const KnownCoalgebra k = known_running(q);
        out.push_back({"zero over path", Comodule(std::make_shared<const Coalgebra>(k.c), 0, {}), k.simples});
    }
    out.push_back(twisted(regular_of(known_running(q)), 21));
    out.push_back(twisted(standard(q, 2), 22));
    out.push_back(twisted(running_xa(q), 23));
    return out;
}

}  // namespace corpus
