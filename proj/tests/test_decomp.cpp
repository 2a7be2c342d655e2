#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"

using namespace coalg;
using corpus::unit_span;

namespace {

const Field Q = Field::rationals();

bool all_pass(const std::vector<TheoremCheck>& checks) {
    bool ok = true;
    for (const auto& c : checks)
        if (c.status == TheoremCheck::Status::fail) {
            MESSAGE(c.name << ": " << c.detail);
            ok = false;
        }
    return ok;
}

TheoremCheck::Status status_of(const std::vector<TheoremCheck>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c.status;
    FAIL("no check named " << name);
    return TheoremCheck::Status::fail;
}

std::vector<Subspace> sorted(std::vector<Subspace> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("coalgebra link classes") {
    CHECK(link_classes_coalgebra(grouplike(Q, 3)).classes.size() == 3);
    CHECK_FALSE(link_classes_coalgebra(grouplike(Q, 3)).has_edges());

    const LinkGraph p = link_classes_coalgebra(corpus::known_running(Q).c, WedgeMode::verify);
    CHECK(p.classes.size() == 1);
    CHECK(p.vertices.size() == 2);
    CHECK(p.edges.size() == 1);

    const Coalgebra ms = direct_sum_coalgebras(matrix_coalgebra(Q, 2), grouplike(Q, 1));
    CHECK(link_classes_coalgebra(ms).classes.size() == 2);

    const Coalgebra cyc = path_coalgebra(Q, corpus::quiver(2, {{0, 1}, {1, 0}}, 1));
    CHECK(cyc.dim() == 4);
    CHECK(link_classes_coalgebra(cyc).classes.size() == 1);
}

TEST_CASE("link classes are connected components, not direct edges") {
    // x -> y -> z with l = 1: x and z never fail to commute directly but are linked through y
    const Coalgebra c = path_coalgebra(Q, corpus::quiver(3, {{0, 1}, {1, 2}}, 1));
    const LinkGraph g = link_classes_coalgebra(c);
    CHECK(g.edges.size() == 2);
    CHECK(g.classes.size() == 1);
    const Subspace kx = unit_span(Q, c.dim(), {0}), kz = unit_span(Q, c.dim(), {2});
    CHECK(wedge(c, kx, kz) == wedge(c, kz, kx));
}

TEST_CASE("comodule link classes") {
    const Comodule reg = regular_comodule(corpus::known_running(Q).c);
    CHECK(link_classes_comodule(reg, WedgeMode::verify).classes.size() == 1);
    CHECK(link_classes_comodule(regular_comodule(grouplike(Q, 3))).classes.size() == 3);
    const LinkGraph kx = link_classes_comodule(corpus::running_kx(Q).m);
    CHECK(kx.vertices.size() == 1);
    CHECK(kx.classes.size() == 1);
}

TEST_CASE("coalgebra decomposition examples") {
    const auto g = decompose_coalgebra(grouplike(Q, 3));
    REQUIRE(g.size() == 3);
    for (const auto& s : g) CHECK(s.dim() == 1);

    const auto p = decompose_coalgebra(corpus::known_running(Q).c, WedgeMode::verify);
    REQUIRE(p.size() == 1);
    CHECK(p[0].is_full());

    const auto s = decompose_coalgebra(corpus::known_sum(corpus::known_running(Q), corpus::known_grouplike(Q, 1)).c);
    REQUIRE(s.size() == 2);
    CHECK(s[0].dim() + s[1].dim() == 4);
    CHECK(std::max(s[0].dim(), s[1].dim()) == 3);
}

TEST_CASE("coalgebra decomposition is basis independent") {
    for (const auto& k : corpus::coalgebras()) {
        INFO(k.name);
        const auto base = sorted(decompose_coalgebra(k.c));
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const Matrix p = random_invertible(k.c.field(), k.c.dim(), seed);
            const Matrix back = *p.inverse();
            std::vector<Subspace> pulled;
            for (const auto& s : decompose_coalgebra(change_basis(k.c, p))) pulled.push_back(s.image(back));
            CHECK(sorted(pulled) == base);
        }
    }
}

TEST_CASE("comodule decomposition examples") {
    const Comodule reg = regular_comodule(corpus::known_running(Q).c);
    const DecompositionReport r = decompose_comodule(reg, {WedgeMode::verify});
    CHECK(r.classes.size() == 1);
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].is_full());

    const DecompositionReport kx = decompose_comodule(corpus::running_kx(Q).m);
    REQUIRE(kx.summands.size() == 1);
    CHECK(kx.summands[0].is_full());
    CHECK(kx.classes.size() == 1);

    const Comodule mixed = block_sum_comodules(standard_matrix_comodule(Q, 2), regular_comodule(grouplike(Q, 2)));
    const DecompositionReport b = decompose_comodule(mixed);
    std::vector<Subspace> expected{unit_span(Q, 4, {0, 1}), unit_span(Q, 4, {2}), unit_span(Q, 4, {3})};
    CHECK(sorted(b.summands) == sorted(expected));

    const DecompositionReport zero = decompose_comodule(Comodule(std::make_shared<const Coalgebra>(grouplike(Q, 2)), 0, {}));
    CHECK(zero.summands.empty());
}

TEST_CASE("regular comodule decomposes like its coalgebra") {
    for (const auto& k : corpus::coalgebras()) {
        INFO(k.name);
        const DecompositionReport r = decompose_comodule(regular_comodule(k.c));
        CHECK(sorted(r.summands) == sorted(decompose_coalgebra(k.c)));
    }
}

TEST_CASE("classification examples") {
    const Flags p = classify(regular_comodule(corpus::known_running(Q).c));
    CHECK(p.full);
    CHECK(p.component_faithful);
    CHECK_FALSE(p.pi_commutative_M);
    CHECK_FALSE(p.pi_commutative_C);
    CHECK(p.w_relational_hereditary);
    CHECK(p.indecomposable_M);
    CHECK_FALSE(p.relative_irreducible_M);
    CHECK_FALSE(p.cosemisimple);

    const Flags s = classify(standard_matrix_comodule(Q, 2));
    CHECK(s.full);
    CHECK(s.relative_irreducible_M);
    CHECK(s.cosemisimple);

    const Flags g = classify(regular_comodule(grouplike(Q, 3)));
    CHECK(g.pi_commutative_M);
    CHECK(g.pi_commutative_C);
    CHECK_FALSE(g.indecomposable_M);
    CHECK_FALSE(g.indecomposable_C);
}

TEST_CASE("span{x, a} is full but not W-relational hereditary") {
    const Flags f = classify(corpus::running_xa(Q).m);
    CHECK(f.full);
    CHECK_FALSE(f.component_faithful);
    CHECK_FALSE(f.w_relational_hereditary);
    CHECK(f.indecomposable_M);
}

TEST_CASE("component towers stop short when a middle simple has zero component") {
    // M = span{x, a}: M_{kx+ky} = kx, and kx ^ kx = kx inside M, while the
    // component over (kx+ky)^inf = C is all of M.
    const Comodule xa = corpus::running_xa(Q).m;
    const DecompositionReport r = decompose_comodule(xa, {WedgeMode::verify});
    REQUIRE(r.classes.size() == 1);
    const ClassReport& cr = r.classes[0];
    CHECK(cr.summand.is_full());
    CHECK(cr.component_of_sum == unit_span(Q, 2, {0}));
    CHECK(cr.component_tower.limit() == unit_span(Q, 2, {0}));
    CHECK_FALSE(cr.tower_chain_holds);
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].is_full());

    const auto checks = verify_structure(xa, r);
    CHECK(status_of(checks, "component_towers_reach_the_summand") == TheoremCheck::Status::not_applicable);
    CHECK(status_of(checks, "direct_sum_of_class_components") == TheoremCheck::Status::pass);

    CHECK(decompose_comodule(corpus::running_kx(Q).m).classes[0].tower_chain_holds);
    CHECK(decompose_comodule(regular_comodule(corpus::known_running(Q).c)).classes[0].tower_chain_holds);
}

TEST_CASE("verification examples") {
    const auto path = verify_structure(regular_comodule(corpus::known_running(Q).c));
    CHECK(all_pass(path));
    CHECK(status_of(path, "indecomposable_comodule_iff_indecomposable_coalgebra") == TheoremCheck::Status::pass);

    const auto g = verify_structure(regular_comodule(grouplike(Q, 3)));
    CHECK(all_pass(g));
    CHECK(status_of(g, "relative_irreducible_splitting_iff_irreducible_splitting") == TheoremCheck::Status::pass);

    const auto kx = verify_structure(corpus::running_kx(Q).m);
    CHECK(all_pass(kx));
    CHECK(status_of(kx, "indecomposable_comodule_iff_indecomposable_coalgebra") ==
          TheoremCheck::Status::not_applicable);
    CHECK(status_of(kx, "regular_decompositions_coincide") == TheoremCheck::Status::not_applicable);
}

TEST_CASE("every corpus comodule passes the verification suite") {
    for (const auto& k : corpus::comodules()) {
        INFO(k.name);
        CHECK(all_pass(verify_structure(k.m, {WedgeMode::verify})));
    }
}

TEST_CASE("regular comodules are recognized") {
    CHECK(is_regular_comodule(regular_comodule(grouplike(Q, 2))));
    CHECK_FALSE(is_regular_comodule(standard_matrix_comodule(Q, 2)));
    CHECK_FALSE(is_regular_comodule(corpus::running_kx(Q).m));
}

}  // TEST_SUITE
