#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"

using namespace coalg;
using corpus::unit_span;
using corpus::vec;

namespace {

const Field Q = Field::rationals();

std::vector<DeltaTerm> terms(const Coalgebra& c, std::size_t k) { return c.terms(k); }

}  // namespace

TEST_SUITE("builders") {

TEST_CASE("grouplike coalgebras") {
    const Coalgebra g1 = grouplike(Q, 1);
    CHECK(g1.dim() == 1);
    CHECK(coradical(g1).is_full());
    CHECK(simple_subcoalgebras(grouplike(Q, 3)).size() == 3);
    CHECK_THROWS_AS(grouplike(Q, 0), InputError);

    const Matrix p = Matrix::from_rows(Q, 2, {vec(Q, {1, 1}), vec(Q, {0, 1})});
    const Coalgebra t = change_basis(grouplike(Q, 2), p);
    CHECK(check_coalgebra(t).empty());
    CHECK(simple_subcoalgebras(t).size() == 2);
    CHECK(decompose_coalgebra(t).size() == 2);
}

TEST_CASE("matrix coalgebras") {
    CHECK(matrix_coalgebra(Q, 1) == grouplike(Q, 1));
    const Coalgebra m = matrix_coalgebra(Q, 2);
    CHECK(m.dim() == 4);
    CHECK(check_coalgebra(m).empty());
    CHECK(simple_subcoalgebras(m).size() == 1);
    CHECK(jacobson_radical(DualAlgebra(m)).is_zero());
    // Delta e_01 = e_00 (x) e_01 + e_01 (x) e_11
    const std::vector<DeltaTerm> expected{{0, 1, Q.one()}, {1, 3, Q.one()}};
    CHECK(terms(m, 1) == expected);
    CHECK_THROWS_AS(matrix_coalgebra(Q, 0), InputError);
}

TEST_CASE("path coalgebras") {
    const QuiverSpec xy = corpus::quiver(2, {{0, 1}}, 1);
    const Coalgebra c = path_coalgebra(Q, xy);
    REQUIRE(c.dim() == 3);
    const std::vector<DeltaTerm> da{{0, 2, Q.one()}, {2, 1, Q.one()}};
    CHECK(terms(c, 2) == da);
    CHECK(c.counit() == vec(Q, {1, 1, 0}));
    CHECK(path_labels(xy) == std::vector<std::string>{"v0", "v1", "a0"});

    CHECK(path_coalgebra(Q, corpus::quiver(1, {}, 1)) == grouplike(Q, 1));
    CHECK(path_coalgebra(Q, corpus::quiver(2, {{0, 1}, {1, 0}}, 1)).dim() == 4);
    // loop of length 3: e, a, aa, aaa
    CHECK(path_coalgebra(Q, corpus::quiver(1, {{0, 0}}, 3)).dim() == 4);
    CHECK_THROWS_AS(path_coalgebra(Q, corpus::quiver(2, {{0, 2}}, 1)), InputError);

    for (const auto& spec : {corpus::quiver(3, {{0, 1}, {1, 2}, {0, 2}}, 2), corpus::quiver(2, {{0, 1}, {0, 1}}, 1)}) {
        const Coalgebra p = path_coalgebra(Q, spec);
        CHECK(check_coalgebra(p).empty());
        CHECK(coradical(p) == unit_span(Q, p.dim(), [&] {
                  std::vector<std::size_t> v;
                  for (std::size_t i = 0; i < spec.vertices; ++i) v.push_back(i);
                  return v;
              }()));
    }
}

TEST_CASE("direct sums") {
    CHECK(direct_sum_coalgebras(grouplike(Q, 1), grouplike(Q, 1)) == grouplike(Q, 2));
    const Coalgebra ms = direct_sum_coalgebras(matrix_coalgebra(Q, 2), grouplike(Q, 1));
    CHECK(link_classes_coalgebra(ms).classes.size() == 2);

    const Coalgebra a = corpus::known_running(Q).c, b = matrix_coalgebra(Q, 2);
    CHECK(block_sum_comodules(regular_comodule(a), regular_comodule(b)) ==
          regular_comodule(direct_sum_coalgebras(a, b)));

    CHECK_THROWS_AS(direct_sum_comodules(regular_comodule(a), regular_comodule(b)), InputError);
    const Comodule ra = regular_comodule(a);
    const Comodule twice = direct_sum_comodules(ra, ra);
    CHECK(twice.dim() == 6);
    CHECK(check_comodule(twice).empty());
    CHECK(socle(twice).socle().dim() == 4);
}

TEST_CASE("decomposition of a direct sum is blockwise") {
    const auto a = corpus::known_running(Q), b = corpus::known_matrix(Q, 2);
    const auto s = corpus::known_sum(a, b);
    std::vector<Subspace> expected;
    for (const auto& d : decompose_coalgebra(a.c)) expected.push_back(corpus::shift_into(d, 0, s.c.dim()));
    for (const auto& d : decompose_coalgebra(b.c)) expected.push_back(corpus::shift_into(d, a.c.dim(), s.c.dim()));
    auto got = decompose_coalgebra(s.c);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
}

TEST_CASE("regular and standard comodules") {
    const Comodule g = regular_comodule(grouplike(Q, 2));
    CHECK(socle(g).socle().is_full());

    const Comodule s = standard_matrix_comodule(Q, 2);
    CHECK(s.dim() == 2);
    CHECK(check_comodule(s).empty());
    CHECK(coefficient_coalgebra(s, Subspace::full(Q, 2)).is_full());
    const auto mc = minimal_closed_subcomodules(s);
    REQUIRE(mc.size() == 1);
    CHECK(mc[0].component.is_full());
    CHECK(check_comodule(standard_matrix_comodule(Field::prime(101), 3)).empty());
}

TEST_CASE("random invertible matrices") {
    CHECK(random_invertible(Q, 5, 0) == Matrix::identity(Q, 5));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Matrix p = random_invertible(Q, 6, seed);
        CHECK(rank(p) == 6);
        CHECK(p == random_invertible(Q, 6, seed));
    }
    CHECK_FALSE(random_invertible(Q, 6, 1) == random_invertible(Q, 6, 2));
    CHECK(rank(random_invertible(Field::prime(2), 8, 3)) == 8);
}

TEST_CASE("randomized bases keep the invariants") {
    CHECK(randomized_basis(grouplike(Q, 3), 0) == grouplike(Q, 3));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Coalgebra g = randomized_basis(grouplike(Q, 3), seed);
        CHECK(link_classes_coalgebra(g).classes.size() == 3);
        const Comodule r = randomized_basis(regular_comodule(corpus::known_running(Q).c), seed);
        CHECK(check_comodule(r).empty());
        CHECK(socle(r).socle().dim() == 2);
    }
}

}  // TEST_SUITE
