#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"

using namespace coalg;
using corpus::span_of;
using corpus::vec;

TEST_SUITE("exactla") {

TEST_CASE("rational scalars stay in lowest terms") {
    const Field q = Field::rationals();
    CHECK(q.from_int(3) / q.from_int(6) == q.parse("1/2"));
    CHECK((q.from_int(1) / q.from_int(3) + q.from_int(1) / q.from_int(6)).to_string() == "1/2");
    CHECK(q.from_int(-4).to_string() == "-4");
    CHECK_THROWS_AS(q.from_int(1) / q.zero(), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
    const Field f = Field::prime(7);
    CHECK((f.from_int(3) * f.from_int(5)).residue() == 1);
    CHECK(f.from_int(-1).residue() == 6);
    CHECK(f.from_int(3).inverse() == f.from_int(5));
    CHECK(f.parse("6") == f.from_int(-1));
    CHECK_THROWS_AS(f.parse("7"), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
    CHECK_THROWS_AS(Field::rationals().one() + f.one(), std::logic_error);
}

TEST_CASE("large prime products do not overflow") {
    const Field f = Field::prime(4611686018427387847ULL);  // below 2^62
    const Scalar a = f.from_int(-2);
    CHECK((a * a).residue() == 4);
    CHECK((a * a.inverse()).is_one());
}

TEST_CASE("rref examples") {
    const Field q = Field::rationals();
    CHECK(rref(Matrix::identity(q, 2)) == Matrix::identity(q, 2));

    const Matrix m = Matrix::from_rows(q, 2, {vec(q, {2, 4}), vec(q, {1, 2})});
    const Matrix r = rref(m);
    CHECK(r.row(0) == vec(q, {1, 2}));
    CHECK(r.row(1) == vec(q, {0, 0}));
    CHECK(rank(m) == 1);

    const Matrix z(q, 3, 3);
    CHECK(rref(z) == z);
    CHECK(rank(z) == 0);
}

TEST_CASE("kernel examples") {
    const Field q = Field::rationals();
    CHECK(kernel(Matrix::identity(q, 4)).is_zero());
    CHECK(kernel(Matrix(q, 2, 3)).is_full());

    const Subspace k = kernel(Matrix::from_rows(q, 3, {vec(q, {1, 1, 0})}));
    REQUIRE(k.dim() == 2);
    CHECK(k.basis_vector(0) == vec(q, {1, -1, 0}));
    CHECK(k.basis_vector(1) == vec(q, {0, 0, 1}));
}

TEST_CASE("sum, intersection and containment") {
    const Field q = Field::rationals();
    const Subspace e1 = span_of(q, 2, {{1, 0}});
    const Subspace e2 = span_of(q, 2, {{0, 1}});
    const Subspace d = span_of(q, 2, {{1, 1}});
    CHECK(sum(e1, Subspace::zero(q, 2)) == e1);
    CHECK(sum(e1, e2).is_full());
    CHECK(sum(d, span_of(q, 2, {{1, -1}})).is_full());
    CHECK(intersect(e1, e1) == e1);
    CHECK(intersect(e1, e2).is_zero());
    CHECK(intersect(sum(e1, e2), d) == d);
    CHECK(contains(e1, Subspace::zero(q, 2)));
    CHECK_FALSE(contains(e1, e2));
    CHECK(contains(Subspace::full(q, 2), d));

    // 2 (1,1) + (1,-1) = (3,1): intersection of two planes in k^3 spanned by it
    const Subspace p1 = span_of(q, 3, {{1, 1, 0}, {1, -1, 0}});
    const Subspace p2 = span_of(q, 3, {{3, 1, 1}, {0, 0, 1}});
    CHECK(intersect(p1, p2) == span_of(q, 3, {{3, 1, 0}}));
}

TEST_CASE("sums and intersections over a prime field") {
    const Field f = Field::prime(3);
    // (1,1) and (1,-1) = (1,2) are independent mod 3
    CHECK(sum(span_of(f, 2, {{1, 1}}), span_of(f, 2, {{1, 2}})).is_full());
    // (1,2) and (2,1) are dependent mod 3
    CHECK(sum(span_of(f, 2, {{1, 2}}), span_of(f, 2, {{2, 1}})).dim() == 1);
}

TEST_CASE("annihilator examples") {
    const Field q = Field::rationals();
    CHECK(annihilator(Subspace::zero(q, 3)).is_full());
    CHECK(annihilator(Subspace::full(q, 3)).is_zero());
    const Subspace a = annihilator(span_of(q, 3, {{1, 1, 0}}));
    CHECK(a == span_of(q, 3, {{1, -1, 0}, {0, 0, 1}}));
    CHECK(annihilator(a) == span_of(q, 3, {{1, 1, 0}}));
}

TEST_CASE("canonical bases make equality structural") {
    const Field q = Field::rationals();
    const Subspace a = span_of(q, 3, {{2, 4, 6}, {0, 1, 1}});
    const Subspace b = span_of(q, 3, {{1, 3, 4}, {1, 1, 2}});
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
    CHECK(a.contains(vec(q, {1, 0, 1})));
    CHECK_FALSE(a.contains(vec(q, {0, 0, 1})));
    // basis (1,0,1), (0,1,1)
    CHECK(a.coordinates(vec(q, {1, 3, 4})) == vec(q, {1, 3}));
}

TEST_CASE("image under an invertible matrix") {
    const Field q = Field::rationals();
    const Matrix p = Matrix::from_rows(q, 2, {vec(q, {1, 1}), vec(q, {0, 1})});
    CHECK(span_of(q, 2, {{0, 1}}).image(p) == span_of(q, 2, {{1, 1}}));
    const auto inv = p.inverse();
    REQUIRE(inv.has_value());
    CHECK(p * *inv == Matrix::identity(q, 2));
    CHECK_FALSE(Matrix(q, 2, 2).inverse().has_value());
    CHECK(Matrix(q, 0, 0).inverse().has_value());
}

TEST_CASE("shape mismatches are input errors") {
    const Field q = Field::rationals();
    CHECK_THROWS_AS(sum(Subspace::zero(q, 2), Subspace::zero(q, 3)), InputError);
    CHECK_THROWS_AS(Subspace::span(q, 2, {vec(q, {1, 2, 3})}), InputError);
}

}  // TEST_SUITE
