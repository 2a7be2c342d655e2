#include <doctest.h>

#include "corpus.hpp"

using namespace coalg;
using corpus::span_of;
using corpus::unit_span;
using corpus::vec;

namespace {

const Field Q = Field::rationals();

// Regular comodule of the running example: m_x, m_y, m_a with rho = Delta.
Comodule running_regular() { return regular_comodule(corpus::known_running(Q).c); }

Subspace kx() { return unit_span(Q, 3, {0}); }
Subspace ky() { return unit_span(Q, 3, {1}); }
Subspace kxa() { return unit_span(Q, 3, {0, 2}); }

}  // namespace

TEST_SUITE("comodule") {

TEST_CASE("builders satisfy the comodule axioms") {
    for (const auto& k : corpus::comodules()) {
        INFO(k.name);
        CHECK(check_comodule(k.m).empty());
    }
}

TEST_CASE("scaled counit row is a counit violation") {
    const auto c = std::make_shared<const Coalgebra>(grouplike(Q, 1));
    const Comodule bad(c, 1, {{0, 0, 0, Q.from_int(2)}});
    const auto v = check_comodule(bad);
    REQUIRE_FALSE(v.empty());
    bool counit = false;
    for (const auto& x : v) counit |= x.kind == ComoduleViolation::Kind::counit;
    CHECK(counit);
}

TEST_CASE("dual action examples") {
    const Comodule m = running_regular();
    const Vector a = vec(Q, {0, 0, 1});
    CHECK(dual_action(m, m.coalgebra().counit(), vec(Q, {4, 5, 6})) == vec(Q, {4, 5, 6}));
    CHECK(dual_action(m, vec(Q, {0, 1, 0}), a) == a);
    CHECK(dual_action(m, vec(Q, {0, 0, 1}), a) == vec(Q, {1, 0, 0}));
    CHECK(is_zero(dual_action(m, vec(Q, {1, 0, 0}), a)));
}

TEST_CASE("action is a module structure") {
    // (f * g) . x = f . (g . x) for a left module under (id (x) f) rho
    for (const auto& k : corpus::comodules()) {
        if (k.m.dim() == 0) continue;
        INFO(k.name);
        const Field f = k.m.field();
        const std::size_t n = k.m.coalgebra().dim();
        const DualAlgebra alg(k.m.coalgebra());
        Vector u = zero_vector(f, n), w = zero_vector(f, n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = f.from_int(static_cast<std::int64_t>(i % 3) - 1);
            w[i] = f.from_int(static_cast<std::int64_t>((2 * i + 1) % 5) - 2);
        }
        const Matrix au = action_matrix(k.m, u), aw = action_matrix(k.m, w);
        CHECK(action_matrix(k.m, alg.multiply(u, w)) == au * aw);
    }
}

TEST_CASE("coefficient coalgebra examples") {
    const Comodule m = running_regular();
    CHECK(coefficient_coalgebra(m, Subspace::full(Q, 3)).is_full());
    CHECK(coefficient_coalgebra(m, kx()) == kx());
    CHECK(coefficient_coalgebra(m, kxa()).is_full());
    CHECK(coefficient_coalgebra(m, Subspace::zero(Q, 3)).is_zero());
    for (const auto& k : corpus::coalgebras()) {
        INFO(k.name);
        const Comodule r = regular_comodule(k.c);
        CHECK(coefficient_coalgebra(r, Subspace::full(k.c.field(), k.c.dim())).is_full());
    }
    CHECK_THROWS_AS(coefficient_coalgebra(m, unit_span(Q, 3, {2})), InputError);
}

TEST_CASE("annihilator examples") {
    const Comodule m = running_regular();
    CHECK(ann_dual(m, Subspace::zero(Q, 3)).is_full());
    CHECK(ann_dual(m, Subspace::full(Q, 3)).is_zero());
    CHECK(ann_dual(m, kxa()).is_zero());
    CHECK(ann_module(m, Subspace::zero(Q, 3)).is_full());
    CHECK(ann_module(m, Subspace::full(Q, 3)).is_zero());
    CHECK(ann_module(m, unit_span(Q, 3, {2})) == unit_span(Q, 3, {0, 1}));
}

TEST_CASE("closure examples") {
    const Comodule m = running_regular();
    CHECK(closure(m, kx()) == kx());
    CHECK(closure(m, kxa()).is_full());
    CHECK(closure(m, Subspace::zero(Q, 3)).is_zero());
}

TEST_CASE("closure is a closure operator on every corpus comodule") {
    for (const auto& k : corpus::comodules()) {
        INFO(k.name);
        const Field f = k.m.field();
        const std::size_t d = k.m.dim();
        for (std::size_t i = 0; i < d; ++i) {
            const Subspace n = subcomodule_generated(k.m, unit_span(f, d, {i}));
            const Subspace cl = closure(k.m, n);
            CHECK(contains(cl, n));
            CHECK(closure(k.m, cl) == cl);
            CHECK(cl == component(k.m, coefficient_coalgebra(k.m, n)));
            for (std::size_t j = 0; j < d; ++j) {
                const Subspace bigger = sum(n, subcomodule_generated(k.m, unit_span(f, d, {j})));
                CHECK(contains(closure(k.m, bigger), cl));
            }
        }
    }
}

TEST_CASE("weak closedness") {
    const Comodule m = running_regular();
    CHECK(is_weak_closed(m, kx()).value == WeakClosedVerdict::Value::yes);
    CHECK(is_weak_closed(m, Subspace::zero(Q, 3)).value == WeakClosedVerdict::Value::yes);
    const WeakClosedVerdict v = is_weak_closed(m, kxa());
    CHECK(v.value == WeakClosedVerdict::Value::no);
    REQUIRE(v.witness.has_value());
    CHECK(closure(m, subcomodule_generated(m, Subspace::span(Q, 3, {*v.witness}))).is_full());

    // over a small prime the whole subspace is enumerated
    const Comodule r = regular_comodule(corpus::known_running(Field::prime(5)).c);
    const Field f5 = Field::prime(5);
    CHECK(is_weak_closed(r, unit_span(f5, 3, {0, 1})).value == WeakClosedVerdict::Value::yes);
    CHECK(is_weak_closed(r, unit_span(f5, 3, {0, 2})).value == WeakClosedVerdict::Value::no);
}

TEST_CASE("weak closedness of a sum of closed subcomodules") {
    // kx + ky is closed; every element of it generates a closed subcomodule
    const Comodule m = running_regular();
    const WeakClosedVerdict v = is_weak_closed(m, unit_span(Q, 3, {0, 1}));
    CHECK(v.value == WeakClosedVerdict::Value::yes);
}

TEST_CASE("component examples") {
    const Comodule m = running_regular();
    CHECK(component(m, Subspace::full(Q, 3)).is_full());
    CHECK(component(m, kx()) == kx());
    CHECK(component(m, unit_span(Q, 3, {0, 1})) == unit_span(Q, 3, {0, 1}));
    CHECK(component(m, ky()) == ky());
    CHECK_THROWS_AS(component(m, unit_span(Q, 3, {2})), InputError);

    const corpus::KnownComodule only_x = corpus::running_kx(Q);
    CHECK(component(only_x.m, ky()).is_zero());
    CHECK(component(only_x.m, kx()).is_full());
}

TEST_CASE("component is the preimage of M (x) E") {
    for (const auto& k : corpus::comodules()) {
        INFO(k.name);
        const Field f = k.m.field();
        for (const auto& e : k.simples) {
            const Subspace got = component(k.m, e);
            CHECK(got == ann_module(k.m, annihilator(e)));
            CHECK(is_subcomodule(k.m, got));
        }
        const Subspace all = Subspace::full(f, k.m.coalgebra().dim());
        CHECK(component(k.m, all).is_full());
    }
}

TEST_CASE("comodule wedge examples") {
    const Comodule m = running_regular();
    CHECK(comodule_wedge(m, Subspace::full(Q, 3), Subspace::full(Q, 3), WedgeMode::verify).is_full());
    CHECK(comodule_wedge(m, kx(), ky(), WedgeMode::verify).is_full());
    CHECK(comodule_wedge(m, ky(), kx(), WedgeMode::verify) == unit_span(Q, 3, {0, 1}));

    const Comodule g = regular_comodule(grouplike(Q, 2));
    const Subspace kg = unit_span(Q, 2, {0}), kh = unit_span(Q, 2, {1});
    CHECK(comodule_wedge(g, kg, kh, WedgeMode::verify).is_full());
    CHECK(comodule_wedge(g, kh, kg, WedgeMode::verify).is_full());
}

TEST_CASE("comodule wedge towers") {
    const Comodule m = running_regular();
    const ComoduleTower t = comodule_wedge_tower(m, socle(m).socle(), WedgeMode::verify);
    REQUIRE(t.chain.size() == 2);
    CHECK(t.chain[0].dim() == 2);
    CHECK(t.chain[1].is_full());
    CHECK(comodule_wedge_tower(m, Subspace::full(Q, 3)).chain.size() == 1);

    const Comodule s = standard_matrix_comodule(Q, 2);
    const ComoduleTower st = comodule_wedge_tower(s, socle(s).socle());
    CHECK(st.chain.size() == 1);
    CHECK(st.limit().is_full());
}

TEST_CASE("socle examples") {
    const Comodule m = running_regular();
    const SocleResult r = socle(m);
    CHECK(r.agree);
    CHECK(r.socle() == unit_span(Q, 3, {0, 1}));
    CHECK(socle(standard_matrix_comodule(Q, 2)).socle().is_full());

    const Comodule sum = block_sum_comodules(m, standard_matrix_comodule(Q, 2));
    CHECK(socle(sum).socle().dim() == 4);
    CHECK(socle(regular_comodule(grouplike(Q, 2))).socle().is_full());
}

TEST_CASE("minimal closed subcomodule examples") {
    const Comodule m = running_regular();
    const auto mc = minimal_closed_subcomodules(m);
    REQUIRE(mc.size() == 2);
    CHECK(mc[0].simple == ky());
    CHECK(mc[0].component == ky());
    CHECK(mc[1].simple == kx());
    CHECK(mc[1].component == kx());

    const auto sm = minimal_closed_subcomodules(standard_matrix_comodule(Q, 2));
    REQUIRE(sm.size() == 1);
    CHECK(sm[0].simple.is_full());
    CHECK(sm[0].component.is_full());

    const auto kxm = minimal_closed_subcomodules(corpus::running_kx(Q).m);
    REQUIRE(kxm.size() == 1);
    CHECK(kxm[0].simple == kx());
    CHECK(kxm[0].component.dim() == 1);
}

TEST_CASE("annihilator of a subcomodule is the annihilator of its coefficients") {
    for (const auto& k : corpus::comodules()) {
        INFO(k.name);
        const std::size_t d = k.m.dim();
        for (std::size_t i = 0; i < d; ++i) {
            const Subspace n = subcomodule_generated(k.m, unit_span(k.m.field(), d, {i}));
            CHECK(ann_dual(k.m, n) == annihilator(coefficient_coalgebra(k.m, n)));
        }
    }
}

TEST_CASE("components over disjoint simples are disjoint") {
    for (const auto& k : corpus::comodules()) {
        INFO(k.name);
        for (std::size_t i = 0; i < k.simples.size(); ++i)
            for (std::size_t j = i + 1; j < k.simples.size(); ++j) {
                REQUIRE(intersect(k.simples[i], k.simples[j]).is_zero());
                CHECK(intersect(component(k.m, k.simples[i]), component(k.m, k.simples[j])).is_zero());
            }
    }
}

TEST_CASE("subcomodules as comodules and corestriction") {
    const Comodule m = running_regular();
    const Comodule n = subcomodule_as_comodule(m, unit_span(Q, 3, {0, 1}));
    CHECK(n.dim() == 2);
    CHECK(check_comodule(n).empty());
    CHECK_THROWS_AS(subcomodule_as_comodule(m, unit_span(Q, 3, {2})), InputError);

    const Comodule r = corestrict_comodule(n, unit_span(Q, 3, {0, 1}));
    CHECK(r.coalgebra() == grouplike(Q, 2));
    CHECK(check_comodule(r).empty());
    CHECK_THROWS_AS(corestrict_comodule(m, unit_span(Q, 3, {0, 1})), InputError);
}

TEST_CASE("comodule basis change keeps the axioms") {
    const Comodule m = running_regular();
    CHECK(change_basis(m, Matrix::identity(Q, 3), Matrix::identity(Q, 3)) == m);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Comodule t = randomized_basis(m, seed);
        CHECK(check_comodule(t).empty());
        CHECK(socle(t).socle().dim() == 2);
    }
}

}  // TEST_SUITE
