#include "coalg/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "coalg/errors.hpp"
#include "coalg/radical.hpp"
#include "coalg/sampling.hpp"

namespace coalg {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

LinkGraph build_graph(LinkGraph::Side side, std::vector<Subspace> vertices, const Field& f, std::size_t ambient,
                      const std::function<bool(std::size_t, std::size_t)>& noncommuting) {
    LinkGraph g;
    g.side = side;
    g.vertices = std::move(vertices);
    const std::size_t n = g.vertices.size();
    UnionFind uf(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (noncommuting(u, v)) {
                g.edges.emplace_back(u, v);
                uf.unite(u, v);
            }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::pair<Subspace, std::vector<std::size_t>>> keyed;
    for (auto& [root, members] : groups) {
        std::vector<Subspace> parts;
        for (std::size_t v : members) parts.push_back(g.vertices[v]);
        keyed.emplace_back(sum(parts, f, ambient), std::move(members));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    for (auto& k : keyed) g.classes.push_back(std::move(k.second));
    return g;
}

Subspace sum_of(const std::vector<Subspace>& all, const std::vector<std::size_t>& idx, const Field& f,
                std::size_t ambient) {
    std::vector<Subspace> parts;
    for (std::size_t i : idx) parts.push_back(all[i]);
    return sum(parts, f, ambient);
}

bool pairwise_direct(const std::vector<Subspace>& parts, const Field& f, std::size_t ambient) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim();
    return total == sum(parts, f, ambient).dim();
}

Flags compute_flags(const DecompositionReport& r, const Field& f) {
    Flags fl;
    fl.full = r.coefficients.is_full();
    fl.component_faithful = std::none_of(r.components.begin(), r.components.end(),
                                         [](const Subspace& s) { return s.is_zero(); });
    fl.pi_commutative_C = !r.coalgebra_graph.has_edges();
    fl.pi_commutative_M = !r.comodule_graph.has_edges();
    fl.indecomposable_C = r.coalgebra_graph.classes.size() == 1;
    fl.indecomposable_M = r.comodule_graph.classes.size() == 1;
    fl.irreducible_C = r.simples.size() == 1;
    fl.relative_irreducible_M = r.comodule_graph.vertices.size() == 1;
    fl.cosemisimple = r.socle == Subspace::full(f, r.comodule_dim);

    // Linked simples inside C(M) must have components in one comodule class;
    // a zero component belongs to the zero class only.
    std::vector<std::optional<std::size_t>> mclass(r.simples.size());
    for (std::size_t v = 0; v < r.comodule_vertex_simple.size(); ++v)
        mclass[r.comodule_vertex_simple[v]] = r.comodule_graph.class_of(v);
    fl.w_relational_hereditary = true;
    for (std::size_t i = 0; i < r.simples.size(); ++i) {
        if (!contains(r.coefficients, r.simples[i])) continue;
        for (std::size_t j = i + 1; j < r.simples.size(); ++j) {
            if (!contains(r.coefficients, r.simples[j])) continue;
            if (r.coalgebra_graph.class_of(i) != r.coalgebra_graph.class_of(j)) continue;
            if (mclass[i] != mclass[j]) fl.w_relational_hereditary = false;
        }
    }
    return fl;
}

}  // namespace

std::size_t LinkGraph::class_of(std::size_t vertex) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (std::find(classes[k].begin(), classes[k].end(), vertex) != classes[k].end()) return k;
    throw InputError("LinkGraph::class_of: vertex " + std::to_string(vertex) + " not in graph");
}

std::string to_string(TheoremCheck::Status s) {
    switch (s) {
        case TheoremCheck::Status::pass:
            return "pass";
        case TheoremCheck::Status::fail:
            return "fail";
        case TheoremCheck::Status::not_applicable:
            return "not_applicable";
    }
    return "?";
}

LinkGraph link_classes_coalgebra(const Coalgebra& c, const std::vector<Subspace>& simples, WedgeMode mode) {
    return build_graph(LinkGraph::Side::coalgebra, simples, c.field(), c.dim(), [&](std::size_t u, std::size_t v) {
        return !(wedge(c, simples[u], simples[v], mode) == wedge(c, simples[v], simples[u], mode));
    });
}

LinkGraph link_classes_coalgebra(const Coalgebra& c, WedgeMode mode) {
    return link_classes_coalgebra(c, simple_subcoalgebras(c), mode);
}

LinkGraph link_classes_comodule(const Comodule& m, const std::vector<Subspace>& minimal_closed, WedgeMode mode) {
    return build_graph(LinkGraph::Side::comodule, minimal_closed, m.field(), m.dim(), [&](std::size_t u, std::size_t v) {
        const auto& a = minimal_closed[u];
        const auto& b = minimal_closed[v];
        return !(comodule_wedge(m, a, b, mode) == comodule_wedge(m, b, a, mode));
    });
}

LinkGraph link_classes_comodule(const Comodule& m, WedgeMode mode) {
    std::vector<Subspace> vertices;
    for (auto& mc : minimal_closed_subcomodules(m)) vertices.push_back(std::move(mc.component));
    return link_classes_comodule(m, vertices, mode);
}

std::vector<Subspace> decompose_coalgebra(const Coalgebra& c, WedgeMode mode) {
    const std::vector<Subspace> simples = simple_subcoalgebras(c);
    const LinkGraph g = link_classes_coalgebra(c, simples, mode);
    std::vector<Subspace> out;
    for (const auto& cls : g.classes) out.push_back(wedge_tower(c, sum_of(simples, cls, c.field(), c.dim()), mode).limit());
    if (!pairwise_direct(out, c.field(), c.dim()) || !sum(out, c.field(), c.dim()).is_full())
        throw ConsistencyError("indecomposable subcoalgebras do not form a direct sum equal to C");
    return out;
}

DecompositionReport decompose_comodule(const Comodule& m, const Options& opt) {
    const Coalgebra& c = m.coalgebra();
    const Field f = m.field();
    const WedgeMode mode = opt.wedge_mode;
    DecompositionReport r;
    r.coalgebra_dim = c.dim();
    r.comodule_dim = m.dim();
    r.simples = simple_subcoalgebras(c);
    r.coalgebra_graph = link_classes_coalgebra(c, r.simples, mode);
    r.coefficients = coefficient_coalgebra(m, Subspace::full(f, m.dim()));
    r.socle = socle(m).socle();

    std::vector<Subspace> vertices;
    std::vector<std::optional<std::size_t>> vertex_of(r.simples.size());
    for (std::size_t i = 0; i < r.simples.size(); ++i) {
        r.components.push_back(component(m, r.simples[i]));
        if (r.components.back().is_zero()) continue;
        for (const auto& v : vertices)
            if (v == r.components.back())
                throw ConsistencyError("two simple subcoalgebras share the minimal closed subcomodule " +
                                       to_string(v.basis_vector(0)));
        vertex_of[i] = vertices.size();
        vertices.push_back(r.components.back());
        r.comodule_vertex_simple.push_back(i);
    }
    r.comodule_graph = link_classes_comodule(m, vertices, mode);

    const bool faithful = std::none_of(r.components.begin(), r.components.end(),
                                       [](const Subspace& s) { return s.is_zero(); });
    std::vector<std::optional<std::size_t>> owner(r.comodule_graph.classes.size());
    for (std::size_t a = 0; a < r.coalgebra_graph.classes.size(); ++a) {
        ClassReport cr;
        cr.coalgebra.simples = r.coalgebra_graph.classes[a];
        cr.coalgebra.sum = sum_of(r.simples, cr.coalgebra.simples, f, c.dim());
        cr.coalgebra.tower = wedge_tower(c, cr.coalgebra.sum, mode);
        cr.summand = component(m, cr.coalgebra.tower.limit());
        cr.component_of_sum = component(m, cr.coalgebra.sum);
        cr.component_tower = comodule_wedge_tower(m, cr.component_of_sum, mode);

        std::map<std::size_t, std::vector<std::size_t>> by_class;
        std::vector<std::size_t> zero_cell;
        for (std::size_t d : cr.coalgebra.simples) {
            if (!vertex_of[d]) {
                zero_cell.push_back(d);
                continue;
            }
            const std::size_t k = r.comodule_graph.class_of(*vertex_of[d]);
            if (owner[k] && *owner[k] != a)
                throw ConsistencyError("a comodule link class meets two coalgebra link classes");
            owner[k] = a;
            by_class[k].push_back(d);
        }
        auto make_cell = [&](std::optional<std::size_t> k, std::vector<std::size_t> simples) {
            RefinementCell cell;
            cell.comodule_class = k;
            cell.simples = std::move(simples);
            cell.sum = sum_of(r.simples, cell.simples, f, c.dim());
            cell.component = component(m, cell.sum);
            cell.tower = comodule_wedge_tower(m, cell.component, mode);
            return cell;
        };
        for (auto& [k, simples] : by_class) cr.cells.push_back(make_cell(k, std::move(simples)));
        if (!zero_cell.empty()) cr.cells.push_back(make_cell(std::nullopt, std::move(zero_cell)));

        std::vector<Subspace> limits;
        for (const auto& cell : cr.cells) limits.push_back(cell.tower.limit());
        const Subspace refined = sum(limits, f, m.dim());
        cr.tower_chain_holds = cr.summand == cr.component_tower.limit() && cr.summand == refined;
        // Outside component faithfulness a simple with zero component can sit
        // between faithful ones (span{x, a} over x -> y); the towers then stop short.
        if (!cr.tower_chain_holds && faithful)
            throw ConsistencyError("class " + std::to_string(a) + ": component of the wedge closure (dim " +
                                   std::to_string(cr.summand.dim()) + "), wedge closure of the component (dim " +
                                   std::to_string(cr.component_tower.limit().dim()) +
                                   ") and sum over refinement cells (dim " + std::to_string(refined.dim()) +
                                   ") differ");
        r.coalgebra_summands.push_back(cr.coalgebra.tower.limit());
        if (!cr.summand.is_zero()) r.summands.push_back(cr.summand);
        r.classes.push_back(std::move(cr));
    }
    for (std::size_t k = 0; k < owner.size(); ++k)
        if (!owner[k]) throw ConsistencyError("comodule link class " + std::to_string(k) + " has no coalgebra class");

    if (!pairwise_direct(r.coalgebra_summands, f, c.dim()) || !sum(r.coalgebra_summands, f, c.dim()).is_full())
        throw ConsistencyError("indecomposable subcoalgebras do not form a direct sum equal to C");
    if (!pairwise_direct(r.summands, f, m.dim()) || !(sum(r.summands, f, m.dim()) == Subspace::full(f, m.dim())))
        throw ConsistencyError("comodule summands do not form a direct sum equal to M");

    r.flags = compute_flags(r, f);
    return r;
}

Flags classify(const Comodule& m, const Options& opt) { return decompose_comodule(m, opt).flags; }

bool is_regular_comodule(const Comodule& m) {
    const Coalgebra& c = m.coalgebra();
    if (m.dim() != c.dim()) return false;
    for (std::size_t k = 0; k < c.dim(); ++k) {
        const auto& rho = m.terms(k);
        const auto& delta = c.terms(k);
        if (rho.size() != delta.size()) return false;
        for (std::size_t t = 0; t < rho.size(); ++t)
            if (rho[t].target != delta[t].left || rho[t].coalgebra != delta[t].right || !(rho[t].coef == delta[t].coef))
                return false;
    }
    return true;
}

std::vector<TheoremCheck> verify_structure(const Comodule& m, const Options& opt) {
    return verify_structure(m, decompose_comodule(m, opt), opt);
}

std::vector<TheoremCheck> verify_structure(const Comodule& m, const DecompositionReport& r, const Options& opt) {
    const Coalgebra& c = m.coalgebra();
    const Field f = m.field();
    const WedgeMode mode = opt.wedge_mode;
    const std::size_t dm = m.dim();
    const std::size_t dc = c.dim();
    const std::size_t ns = r.simples.size();
    const Subspace zero_m(f, dm);
    const Subspace zero_c(f, dc);
    std::vector<TheoremCheck> out;

    auto record = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok ? TheoremCheck::Status::pass : TheoremCheck::Status::fail,
                       ok ? std::string() : "implementation bug: " + detail});
    };
    auto skip = [&](std::string name, std::string why) {
        out.push_back({std::move(name), TheoremCheck::Status::not_applicable, std::move(why)});
    };
    auto dims = [](const Subspace& a, const Subspace& b) {
        return "dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim());
    };

    // Subcomodules to probe: structural pieces plus a few generated ones.
    std::vector<Subspace> probes{Subspace::full(f, dm), r.socle};
    for (const auto& s : r.summands) probes.push_back(s);
    for (const auto& d : r.components) probes.push_back(d);
    for (const auto& cr : r.classes)
        for (const auto& cell : cr.cells) probes.push_back(cell.tower.limit());
    for (std::size_t x = 0; x < dm; ++x)
        probes.push_back(subcomodule_generated(m, Subspace::span(f, dm, {unit_vector(f, dm, x)})));
    SampleRng rng(opt.seed);
    for (std::size_t s = 0; s < opt.random_subcomodules && dm > 0; ++s) {
        std::vector<Vector> gens;
        for (int g = 0; g < 2; ++g) {
            Vector v = zero_vector(f, dm);
            for (auto& e : v) e = f.from_int(rng.between(-3, 3));
            gens.push_back(std::move(v));
        }
        probes.push_back(subcomodule_generated(m, Subspace::span(f, dm, gens)));
    }
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

    // Subcoalgebras to probe.
    std::vector<Subspace> family(r.simples.begin(), r.simples.end());
    for (const auto& cr : r.classes) {
        family.push_back(cr.coalgebra.sum);
        family.push_back(cr.coalgebra.tower.limit());
        for (const auto& cell : cr.cells) family.push_back(cell.sum);
    }
    family.push_back(coradical(c));
    family.push_back(r.coefficients);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    std::vector<Subspace> coeff_of_probe;
    for (const auto& n : probes) coeff_of_probe.push_back(coefficient_coalgebra(m, n));

    {
        std::string bad;
        for (std::size_t i = 0; i < probes.size() && bad.empty(); ++i)
            if (!(ann_dual(m, probes[i]) == annihilator(coeff_of_probe[i])))
                bad = "subcomodule of dim " + std::to_string(probes[i].dim()) + ": " +
                      dims(ann_dual(m, probes[i]), annihilator(coeff_of_probe[i]));
        record("annihilator_matches_coefficient_annihilator", bad.empty(), bad);
    }
    {
        std::string bad;
        for (const auto& e : family) {
            const Subspace me = component(m, e);
            const Subspace again = component(m, coefficient_coalgebra(m, me));
            if (!(me == again)) bad = "subcoalgebra of dim " + std::to_string(e.dim()) + ": " + dims(me, again);
        }
        record("component_determined_by_own_coefficients", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const bool closed = closure(m, probes[i]) == probes[i];
            const bool is_component = component(m, coeff_of_probe[i]) == probes[i];
            if (closed != is_component) bad = "subcomodule of dim " + std::to_string(probes[i].dim());
        }
        record("closed_iff_component", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            if (r.components[i].is_zero() != ann_module(m, annihilator(r.simples[i])).is_zero())
                bad = "simple " + std::to_string(i);
        record("component_nonzero_iff_double_annihilator_nonzero", bad.empty(), bad);
    }
    {
        bool any = false;
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            if (intersect(r.simples[i], r.coefficients).is_zero()) {
                any = true;
                if (!r.components[i].is_zero()) bad = "simple " + std::to_string(i);
            }
        if (any)
            record("outside_coefficients_gives_zero_component", bad.empty(), bad);
        else
            skip("outside_coefficients_gives_zero_component", "every simple meets C(M)");
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i) {
            const Subspace cm = coefficient_coalgebra(m, r.components[i]);
            const Subspace& expected = r.components[i].is_zero() ? zero_c : r.simples[i];
            if (!(cm == expected)) bad = "simple " + std::to_string(i) + ": " + dims(cm, expected);
        }
        record("simple_component_has_simple_coefficients", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = i + 1; j < ns; ++j)
                if (!intersect(r.components[i], r.components[j]).is_zero())
                    bad = "simples " + std::to_string(i) + ", " + std::to_string(j);
        for (std::size_t a = 0; a < r.classes.size(); ++a)
            for (std::size_t b = a + 1; b < r.classes.size(); ++b)
                if (!intersect(r.classes[a].summand, r.classes[b].summand).is_zero())
                    bad = "classes " + std::to_string(a) + ", " + std::to_string(b);
        record("disjoint_subcoalgebras_give_disjoint_components", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = i; j < ns; ++j) {
                const bool hyp = intersect(r.components[i], r.components[j]).is_zero() &&
                                 (!r.components[i].is_zero() || !r.components[j].is_zero());
                if (hyp && !intersect(r.simples[i], r.simples[j]).is_zero())
                    bad = "simples " + std::to_string(i) + ", " + std::to_string(j);
            }
        record("disjoint_components_force_disjoint_simples", bad.empty(), bad);
    }
    {
        std::string bad;
        const std::vector<Subspace>& vertices = r.comodule_graph.vertices;
        for (const auto& e : family) {
            const Subspace me = component(m, e);
            const bool minimal = std::find(vertices.begin(), vertices.end(), me) != vertices.end();
            const Subspace ce = coefficient_coalgebra(m, me);
            const bool simple = std::find(r.simples.begin(), r.simples.end(), ce) != r.simples.end();
            if (minimal != simple) bad = "subcoalgebra of dim " + std::to_string(e.dim());
        }
        record("minimal_closed_iff_simple_coefficients", bad.empty(), bad);
    }
    {
        std::size_t faithful = 0;
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i) {
            if (r.components[i].is_zero()) continue;
            ++faithful;
            if (!(coefficient_coalgebra(m, r.components[i]) == r.simples[i])) bad = "simple " + std::to_string(i);
        }
        std::vector<Subspace> distinct = r.comodule_graph.vertices;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (faithful != distinct.size())
            bad = std::to_string(faithful) + " faithful simples, " + std::to_string(distinct.size()) +
                  " minimal closed subcomodules";
        record("faithful_simples_biject_minimal_closed", bad.empty(), bad);
    }
    {
        const SocleResult s = socle(m);
        const Subspace minimal_sum = sum(r.comodule_graph.vertices, f, dm);
        const bool ok = s.via_component == s.via_radical && s.via_component == minimal_sum;
        record("socle_three_ways", ok,
               "component " + std::to_string(s.via_component.dim()) + ", radical " +
                   std::to_string(s.via_radical.dim()) + ", minimal sum " + std::to_string(minimal_sum.dim()));
        const Subspace lift = coefficient_radical_lift(m);
        const Subspace ann = ann_dual(m, s.via_component);
        // equality needs every simple inside C(M) faithful; containment always holds
        record("coefficient_radical_kills_socle", contains(ann, lift), dims(lift, ann));
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < ns; ++j) {
                const Subspace lhs = comodule_wedge(m, r.components[i], r.components[j], mode);
                const Subspace mid = component(m, wedge(c, coefficient_coalgebra(m, r.components[i]),
                                                        coefficient_coalgebra(m, r.components[j]), mode));
                const Subspace rhs = component(m, wedge(c, r.simples[i], r.simples[j], mode));
                if (!(lhs == mid) || !contains(rhs, mid))
                    bad = "simples " + std::to_string(i) + ", " + std::to_string(j);
            }
        record("component_wedge_bounded_by_wedge_component", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < ns; ++j) {
                if (r.components[i].is_zero() || r.components[j].is_zero()) continue;
                const Subspace lhs = comodule_wedge(m, r.components[i], r.components[j], mode);
                const Subspace rhs = component(m, wedge(c, r.simples[i], r.simples[j], mode));
                if (!(lhs == rhs)) bad = "simples " + std::to_string(i) + ", " + std::to_string(j) + ": " + dims(lhs, rhs);
            }
        record("faithful_wedge_is_component_of_wedge", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = i + 1; j < ns; ++j) {
                const Subspace big = component(m, sum(r.simples[i], r.simples[j]));
                if (!contains(big, sum(r.components[i], r.components[j])))
                    bad = "simples " + std::to_string(i) + ", " + std::to_string(j);
            }
        record("component_of_sum_contains_sum_of_components", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t a = 0; a < r.classes.size(); ++a) {
            const Subspace parts = sum_of(r.components, r.classes[a].coalgebra.simples, f, dm);
            if (!(parts == r.classes[a].component_of_sum)) bad = "class " + std::to_string(a);
        }
        if (!(component(m, coradical(c)) == sum(r.components, f, dm))) bad = "coradical";
        record("component_of_simple_sum_is_sum_of_components", bad.empty(), bad);
    }
    {
        std::string bad;
        const auto& vs = r.comodule_vertex_simple;
        for (std::size_t u = 0; u < vs.size(); ++u)
            for (std::size_t v = u + 1; v < vs.size(); ++v)
                if (r.comodule_graph.class_of(u) == r.comodule_graph.class_of(v) &&
                    r.coalgebra_graph.class_of(vs[u]) != r.coalgebra_graph.class_of(vs[v]))
                    bad = "comodule vertices " + std::to_string(u) + ", " + std::to_string(v);
        record("comodule_classes_refine_coalgebra_classes", bad.empty(), bad);
    }
    {
        std::string bad;
        if (!pairwise_direct(r.summands, f, dm)) bad = "summands overlap";
        if (!(sum(r.summands, f, dm) == Subspace::full(f, dm))) bad = "summands do not span M";
        for (std::size_t a = 0; a < r.classes.size(); ++a) {
            const auto& cr = r.classes[a];
            if (!(cr.summand == component(m, cr.coalgebra.tower.limit()))) bad = "class " + std::to_string(a) + " summand";
        }
        record("direct_sum_of_class_components", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t a = 0; a < r.classes.size(); ++a) {
            const auto& cr = r.classes[a];
            std::vector<Subspace> limits;
            for (const auto& cell : cr.cells) limits.push_back(cell.tower.limit());
            const Subspace refined = sum(limits, f, dm);
            if (cr.summand == cr.component_tower.limit() && cr.summand == refined) continue;
            bad = "class " + std::to_string(a) + ": summand dim " + std::to_string(cr.summand.dim()) +
                  ", tower of the component dim " + std::to_string(cr.component_tower.limit().dim()) +
                  ", cells dim " + std::to_string(refined.dim());
        }
        if (bad.empty() || r.flags.component_faithful)
            record("component_towers_reach_the_summand", bad.empty(), bad);
        else
            skip("component_towers_reach_the_summand", "M is not component faithful; " + bad);
    }

    const Flags& fl = r.flags;
    auto implication = [&](std::string name, bool hyp, bool concl, std::string hyp_text) {
        if (!hyp)
            skip(std::move(name), "hypothesis fails: " + hyp_text);
        else
            record(std::move(name), concl, "hypothesis holds, conclusion fails");
    };

    // One simple per coalgebra summand / one minimal closed per nonzero refinement cell.
    bool c_split_irreducible = true;
    for (const auto& cr : r.classes) {
        std::size_t count = 0;
        for (const auto& d : r.simples) count += contains(cr.coalgebra.tower.limit(), d) ? 1 : 0;
        if (count != 1) c_split_irreducible = false;
    }
    bool m_split_relative_irreducible = true;
    for (const auto& cr : r.classes)
        for (const auto& cell : cr.cells) {
            if (cell.tower.limit().is_zero()) continue;
            std::size_t count = 0;
            for (const auto& v : r.comodule_graph.vertices) count += contains(cell.tower.limit(), v) ? 1 : 0;
            if (count != 1) m_split_relative_irreducible = false;
        }

    implication("pi_commutative_coalgebra_gives_pi_commutative_comodule", fl.pi_commutative_C, fl.pi_commutative_M,
                "C is not pi-commutative");
    implication("irreducible_splitting_passes_to_comodule", c_split_irreducible, m_split_relative_irreducible,
                "C is not a direct sum of irreducible subcoalgebras");
    implication("decomposable_coalgebra_gives_decomposable_faithful_comodule",
                r.coalgebra_graph.classes.size() >= 2 && fl.component_faithful,
                r.comodule_graph.classes.size() >= 2, "C indecomposable or M not component faithful");
    implication("irreducible_coalgebra_gives_relative_irreducible_comodule", fl.irreducible_C && dm > 0,
                fl.relative_irreducible_M, "C not irreducible or M = 0");
    if (fl.component_faithful && dm > 0)
        record("faithful_comodule_relative_irreducible_iff_coalgebra_irreducible",
               fl.relative_irreducible_M == fl.irreducible_C, "flags differ");
    else
        skip("faithful_comodule_relative_irreducible_iff_coalgebra_irreducible", "M is not component faithful");

    // Working over C(M) instead of C.
    const Comodule local = corestrict_comodule(m, r.coefficients);
    const Coalgebra& lc = local.coalgebra();
    const std::vector<Subspace> local_simples = simple_subcoalgebras(lc);
    const LinkGraph local_c_graph = link_classes_coalgebra(lc, local_simples, mode);
    std::vector<Subspace> local_minimal;
    for (auto& mc : minimal_closed_subcomodules(local, local_simples)) local_minimal.push_back(std::move(mc.component));
    {
        std::string bad;
        for (const auto& n : probes) {
            if (!(closure(m, n) == closure(local, n))) bad = "closure of a subcomodule of dim " + std::to_string(n.dim());
            if (!(subcomodule_generated(m, n) == subcomodule_generated(local, n))) bad = "generated subcomodule";
            const auto wa = is_weak_closed(m, n, 8, opt.seed).value;
            const auto wb = is_weak_closed(local, n, 8, opt.seed).value;
            if (wa != wb) bad = "weak-closed verdicts";
        }
        std::vector<Subspace> a = r.comodule_graph.vertices;
        std::vector<Subspace> b = local_minimal;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) bad = "minimal closed subcomodules";
        record("coefficient_coalgebra_suffices", bad.empty(), bad);
    }
    {
        bool faithful_on_coefficients = true;
        for (std::size_t i = 0; i < ns; ++i)
            if (contains(r.coefficients, r.simples[i]) && r.components[i].is_zero()) faithful_on_coefficients = false;
        if (faithful_on_coefficients) {
            record("indecomposable_comodule_has_indecomposable_coefficients",
                   !fl.indecomposable_M || local_c_graph.classes.size() == 1, "C(M) decomposes");
            record("relative_irreducible_iff_coefficients_irreducible",
                   fl.relative_irreducible_M == (local_simples.size() == 1), "flags differ");
        } else {
            skip("indecomposable_comodule_has_indecomposable_coefficients", "a simple inside C(M) has zero component");
            skip("relative_irreducible_iff_coefficients_irreducible", "a simple inside C(M) has zero component");
        }

        // Equivalent forms of W-relational heredity.
        std::vector<std::optional<std::size_t>> mclass(ns);
        for (std::size_t v = 0; v < r.comodule_vertex_simple.size(); ++v)
            mclass[r.comodule_vertex_simple[v]] = r.comodule_graph.class_of(v);
        bool at_most_one_cell = true;
        for (const auto& cr : r.classes) {
            std::size_t nonzero = 0;
            for (const auto& cell : cr.cells) nonzero += cell.comodule_class ? 1 : 0;
            if (nonzero > 1) at_most_one_cell = false;
        }
        const bool form2 = at_most_one_cell && faithful_on_coefficients;
        bool form4 = true;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < ns; ++j) {
                if (!contains(r.coefficients, r.simples[i]) || !contains(r.coefficients, r.simples[j])) continue;
                const bool linked = r.coalgebra_graph.class_of(i) == r.coalgebra_graph.class_of(j);
                if (linked != (mclass[i] == mclass[j])) form4 = false;
            }
        bool summands_indecomposable = true;
        for (const auto& cr : r.classes) {
            if (cr.summand.is_zero()) continue;
            const Comodule piece = subcomodule_as_comodule(m, cr.summand);
            if (link_classes_comodule(piece, mode).classes.size() > 1) summands_indecomposable = false;
        }
        const bool form5 = summands_indecomposable && faithful_on_coefficients;
        const bool ok = fl.w_relational_hereditary == form2 && form2 == form4 && form4 == form5;
        record("w_relational_hereditary_equivalent_forms", ok,
               "flag " + std::to_string(fl.w_relational_hereditary) + ", cells " + std::to_string(form2) +
                   ", classes " + std::to_string(form4) + ", summands " + std::to_string(form5));
    }
    {
        const bool hyp = fl.full && fl.w_relational_hereditary;
        const std::string why = "M is not full and W-relational hereditary";
        if (hyp) {
            record("indecomposable_comodule_iff_indecomposable_coalgebra", fl.indecomposable_M == fl.indecomposable_C,
                   "flags differ");
            record("relative_irreducible_comodule_iff_irreducible_coalgebra",
                   fl.relative_irreducible_M == fl.irreducible_C, "flags differ");
            record("relative_irreducible_splitting_iff_irreducible_splitting",
                   m_split_relative_irreducible == c_split_irreducible, "flags differ");
            record("pi_commutative_comodule_iff_pi_commutative_coalgebra", fl.pi_commutative_M == fl.pi_commutative_C,
                   "flags differ");
        } else {
            skip("indecomposable_comodule_iff_indecomposable_coalgebra", why);
            skip("relative_irreducible_comodule_iff_irreducible_coalgebra", why);
            skip("relative_irreducible_splitting_iff_irreducible_splitting", why);
            skip("pi_commutative_comodule_iff_pi_commutative_coalgebra", why);
        }
    }
    {
        // Simples inside C(M): commuting components force commuting simples?
        bool hyp = true;
        bool commuting_lifts = true;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = i + 1; j < ns; ++j) {
                if (!contains(r.coefficients, r.simples[i]) || !contains(r.coefficients, r.simples[j])) continue;
                const bool c_comm =
                    wedge(c, r.simples[i], r.simples[j], mode) == wedge(c, r.simples[j], r.simples[i], mode);
                const bool m_comm = comodule_wedge(m, r.components[i], r.components[j], mode) ==
                                    comodule_wedge(m, r.components[j], r.components[i], mode);
                if (m_comm && !c_comm) hyp = false;
                if (c_comm && !m_comm) commuting_lifts = false;
            }
        implication("commutation_reflected_gives_w_relational_hereditary", hyp, fl.w_relational_hereditary,
                    "some simples in C(M) do not commute while their components do");
        record("commuting_simples_give_commuting_components", commuting_lifts,
               "commuting simples with noncommuting components");
    }

    const std::vector<std::string> regular_names{
        "regular_component_coefficients", "regular_closed_iff_subcoalgebra", "regular_closed_iff_weak_closed",
        "regular_minimal_closed_are_simples", "regular_wedges_agree", "regular_full_hereditary_faithful",
        "regular_decompositions_coincide"};
    if (!is_regular_comodule(m)) {
        for (const auto& n : regular_names) skip(n, "M is not the regular comodule");
        return out;
    }
    {
        std::string bad;
        for (const auto& e : family)
            if (!(coefficient_coalgebra(m, component(m, e)) == e)) bad = "subcoalgebra of dim " + std::to_string(e.dim());
        for (std::size_t i = 0; i < probes.size(); ++i)
            if (!(closure(m, probes[i]) == coeff_of_probe[i])) bad = "closure vs coefficients";
        record(regular_names[0], bad.empty(), bad);
    }
    {
        std::string bad;
        std::string bad_weak;
        for (const auto& n : probes) {
            const bool closed = closure(m, n) == n;
            if (closed != is_subcoalgebra(c, n)) bad = "subcomodule of dim " + std::to_string(n.dim());
            const auto verdict = is_weak_closed(m, n, 16, opt.seed).value;
            if ((verdict == WeakClosedVerdict::Value::yes) != closed ||
                (!closed && verdict != WeakClosedVerdict::Value::no))
                bad_weak = "subcomodule of dim " + std::to_string(n.dim());
        }
        record(regular_names[1], bad.empty(), bad);
        record(regular_names[2], bad_weak.empty(), bad_weak);
    }
    {
        std::vector<Subspace> a = r.comodule_graph.vertices;
        std::vector<Subspace> b = r.simples;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        record(regular_names[3], a == b, "sets differ");
    }
    {
        std::string bad;
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < ns; ++j)
                if (!(comodule_wedge(m, r.simples[i], r.simples[j], mode) == wedge(c, r.simples[i], r.simples[j], mode)))
                    bad = "simples " + std::to_string(i) + ", " + std::to_string(j);
        record(regular_names[4], bad.empty(), bad);
    }
    record(regular_names[5], fl.full && fl.w_relational_hereditary && fl.component_faithful, "flags fail");
    {
        std::vector<Subspace> a = r.summands;
        std::vector<Subspace> b = r.coalgebra_summands;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        record(regular_names[6], a == b, "summand sets differ");
    }
    return out;
}

}  // namespace coalg
