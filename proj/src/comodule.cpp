#include "coalg/comodule.hpp"

#include <map>
#include <tuple>

#include "coalg/errors.hpp"
#include "coalg/radical.hpp"
#include "coalg/sampling.hpp"

namespace coalg {

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
using Tensor3 = std::map<Triple, Scalar>;

void accumulate(Tensor3& t, const Triple& key, const Scalar& v) {
    auto [it, inserted] = t.try_emplace(key, v);
    if (!inserted) it->second += v;
    if (it->second.is_zero()) t.erase(it);
}

std::string render(const Tensor3& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [key, v] : t) {
        if (!s.empty()) s += " + ";
        auto [a, b, c] = key;
        s += v.to_string() + "*m" + std::to_string(a) + "(x)e" + std::to_string(b) + "(x)e" + std::to_string(c);
    }
    return s;
}

void require_ambient(const Comodule& m, const Subspace& n, const char* op) {
    if (n.ambient() != m.dim() || !(n.field() == m.field()))
        throw InputError(std::string(op) + ": subspace does not live in M");
}

void require_dual_ambient(const Comodule& m, const Subspace& p, const char* op) {
    if (p.ambient() != m.coalgebra().dim() || !(p.field() == m.field()))
        throw InputError(std::string(op) + ": subspace does not live in C*");
}

Vector random_vector(const Field& f, std::size_t n, SampleRng& rng) {
    Vector v = zero_vector(f, n);
    for (auto& x : v) x = f.from_int(rng.between(-3, 3));
    return v;
}

// <C* x> contained in n?
bool generated_closure_inside(const Comodule& m, const Subspace& n, const Vector& x) {
    const Subspace generated = subcomodule_generated(m, Subspace::span(m.field(), m.dim(), {x}));
    return contains(n, closure(m, generated));
}

}  // namespace

Comodule::Comodule(std::shared_ptr<const Coalgebra> c, std::size_t dim, const std::vector<Entry>& rho)
    : coalgebra_(std::move(c)), dim_(dim), rho_(dim) {
    if (!coalgebra_) throw InputError("comodule without a coalgebra");
    const std::size_t n = coalgebra_->dim();
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> acc(dim_);
    for (const auto& e : rho) {
        if (e.source >= dim_ || e.target >= dim_ || e.coalgebra >= n)
            throw InputError("rho entry (" + std::to_string(e.source) + "; " + std::to_string(e.target) + ", " +
                             std::to_string(e.coalgebra) + ") out of range");
        if (!(e.coef.field() == coalgebra_->field())) throw InputError("rho entry over the wrong field");
        auto [it, inserted] = acc[e.source].try_emplace({e.target, e.coalgebra}, e.coef);
        if (!inserted) it->second += e.coef;
    }
    for (std::size_t x = 0; x < dim_; ++x)
        for (const auto& [yk, c] : acc[x])
            if (!c.is_zero()) rho_[x].push_back(CoactionTerm{yk.first, yk.second, c});
}

std::vector<Comodule::Entry> Comodule::entries() const {
    std::vector<Entry> out;
    for (std::size_t x = 0; x < dim_; ++x)
        for (const auto& t : rho_[x]) out.push_back(Entry{x, t.target, t.coalgebra, t.coef});
    return out;
}

Matrix Comodule::coaction_of(const Vector& v) const {
    if (v.size() != dim_) throw InputError("coaction_of: length mismatch");
    Matrix r(field(), dim_, coalgebra_->dim());
    for (std::size_t x = 0; x < dim_; ++x) {
        if (v[x].is_zero()) continue;
        for (const auto& t : rho_[x]) r(t.target, t.coalgebra) += v[x] * t.coef;
    }
    return r;
}

bool operator==(const Comodule& a, const Comodule& b) {
    return a.dim_ == b.dim_ && *a.coalgebra_ == *b.coalgebra_ && a.rho_ == b.rho_;
}

std::string describe(const ComoduleViolation& v) {
    return std::string(v.kind == ComoduleViolation::Kind::coassociativity ? "coaction associativity"
                                                                           : "coaction counit") +
           " fails at basis index " + std::to_string(v.index) + ": " + v.lhs + " != " + v.rhs;
}

std::vector<ComoduleViolation> check_comodule(const Comodule& m) {
    std::vector<ComoduleViolation> out;
    const Coalgebra& c = m.coalgebra();
    const Field f = m.field();
    for (std::size_t x = 0; x < m.dim(); ++x) {
        Tensor3 lhs, rhs;
        for (const auto& t : m.terms(x)) {
            for (const auto& u : m.terms(t.target))
                accumulate(lhs, {u.target, u.coalgebra, t.coalgebra}, t.coef * u.coef);
            for (const auto& d : c.terms(t.coalgebra)) accumulate(rhs, {t.target, d.left, d.right}, t.coef * d.coef);
        }
        if (lhs != rhs) out.push_back({ComoduleViolation::Kind::coassociativity, x, render(lhs), render(rhs)});
        Vector counit = zero_vector(f, m.dim());
        for (const auto& t : m.terms(x)) counit[t.target] += t.coef * c.counit()[t.coalgebra];
        const Vector expected = unit_vector(f, m.dim(), x);
        if (counit != expected)
            out.push_back({ComoduleViolation::Kind::counit, x, to_string(counit), to_string(expected)});
    }
    return out;
}

Matrix action_matrix(const Comodule& m, const Vector& f) {
    if (f.size() != m.coalgebra().dim()) throw InputError("action_matrix: functional has wrong length");
    Matrix a(m.field(), m.dim(), m.dim());
    for (std::size_t x = 0; x < m.dim(); ++x)
        for (const auto& t : m.terms(x))
            if (!f[t.coalgebra].is_zero()) a(t.target, x) += t.coef * f[t.coalgebra];
    return a;
}

Vector dual_action(const Comodule& m, const Vector& f, const Vector& x) {
    if (f.size() != m.coalgebra().dim() || x.size() != m.dim()) throw InputError("dual_action: length mismatch");
    Vector out = zero_vector(m.field(), m.dim());
    for (std::size_t s = 0; s < m.dim(); ++s) {
        if (x[s].is_zero()) continue;
        for (const auto& t : m.terms(s))
            if (!f[t.coalgebra].is_zero()) out[t.target] += x[s] * t.coef * f[t.coalgebra];
    }
    return out;
}

bool is_subcomodule(const Comodule& m, const Subspace& n) {
    require_ambient(m, n, "is_subcomodule");
    for (std::size_t r = 0; r < n.dim(); ++r) {
        const Matrix rho = m.coaction_of(n.basis_vector(r));
        for (std::size_t k = 0; k < rho.cols(); ++k)
            if (!n.contains(rho.col(k))) return false;
    }
    return true;
}

Subspace subcomodule_generated(const Comodule& m, const Subspace& seed) {
    require_ambient(m, seed, "subcomodule_generated");
    Matrix rows(m.field(), 0, m.dim());
    for (std::size_t r = 0; r < seed.dim(); ++r) {
        const Matrix rho = m.coaction_of(seed.basis_vector(r));
        for (std::size_t k = 0; k < rho.cols(); ++k) rows.append_row(rho.col(k));
    }
    return Subspace::row_space(rows);
}

Subspace coefficient_coalgebra(const Comodule& m, const Subspace& n) {
    if (!is_subcomodule(m, n)) throw InputError("coefficient_coalgebra: subspace is not a subcomodule");
    Matrix slices(m.field(), 0, m.coalgebra().dim());
    for (std::size_t r = 0; r < n.dim(); ++r) {
        const Matrix rho = m.coaction_of(n.basis_vector(r));
        for (std::size_t y = 0; y < rho.rows(); ++y) slices.append_row(rho.row(y));
    }
    return Subspace::row_space(slices);
}

Subspace ann_dual(const Comodule& m, const Subspace& n) {
    require_ambient(m, n, "ann_dual");
    const std::size_t cdim = m.coalgebra().dim();
    // Row (v, y): the y-coordinate of f . v as a linear form in f.
    Matrix system(m.field(), n.dim() * m.dim(), cdim);
    for (std::size_t r = 0; r < n.dim(); ++r) {
        const Vector v = n.basis_vector(r);
        for (std::size_t x = 0; x < m.dim(); ++x) {
            if (v[x].is_zero()) continue;
            for (const auto& t : m.terms(x)) system(r * m.dim() + t.target, t.coalgebra) += v[x] * t.coef;
        }
    }
    return kernel(system);
}

Subspace ann_module(const Comodule& m, const Subspace& p) {
    require_dual_ambient(m, p, "ann_module");
    Matrix system(m.field(), 0, m.dim());
    for (std::size_t r = 0; r < p.dim(); ++r) {
        const Matrix a = action_matrix(m, p.basis_vector(r));
        for (std::size_t y = 0; y < a.rows(); ++y) system.append_row(a.row(y));
    }
    return kernel(system);
}

Subspace closure(const Comodule& m, const Subspace& n) { return ann_module(m, ann_dual(m, n)); }

WeakClosedVerdict is_weak_closed(const Comodule& m, const Subspace& n, std::size_t samples, std::uint64_t seed) {
    WeakClosedVerdict verdict;
    verdict.seed = seed;
    if (closure(m, n) == n) {
        verdict.value = WeakClosedVerdict::Value::yes;
        return verdict;
    }
    for (std::size_t r = 0; r < n.dim(); ++r) {
        Vector x = n.basis_vector(r);
        if (!generated_closure_inside(m, n, x)) {
            verdict.value = WeakClosedVerdict::Value::no;
            verdict.witness = std::move(x);
            return verdict;
        }
    }
    const Field f = m.field();
    // Small prime fields: every element of N can be enumerated, which decides the question.
    const std::uint64_t p = f.characteristic();
    if (p != 0) {
        std::uint64_t count = 1;
        bool small = true;
        for (std::size_t i = 0; i < n.dim() && small; ++i) {
            count *= p;
            small = count <= 4096;
        }
        if (small) {
            for (std::uint64_t code = 0; code < count; ++code) {
                Vector x = zero_vector(f, m.dim());
                std::uint64_t rest = code;
                for (std::size_t i = 0; i < n.dim(); ++i) {
                    axpy(x, f.from_int(static_cast<std::int64_t>(rest % p)), n.basis_vector(i));
                    rest /= p;
                }
                ++verdict.samples;
                if (!generated_closure_inside(m, n, x)) {
                    verdict.value = WeakClosedVerdict::Value::no;
                    verdict.witness = std::move(x);
                    return verdict;
                }
            }
            verdict.value = WeakClosedVerdict::Value::yes;
            return verdict;
        }
    }
    SampleRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const Vector coeffs = random_vector(f, n.dim(), rng);
        Vector x = zero_vector(f, m.dim());
        for (std::size_t i = 0; i < n.dim(); ++i) axpy(x, coeffs[i], n.basis_vector(i));
        ++verdict.samples;
        if (!generated_closure_inside(m, n, x)) {
            verdict.value = WeakClosedVerdict::Value::no;
            verdict.witness = std::move(x);
            return verdict;
        }
    }
    verdict.value = WeakClosedVerdict::Value::unknown;
    return verdict;
}

Subspace component(const Comodule& m, const Subspace& e) {
    const Coalgebra& c = m.coalgebra();
    if (e.ambient() != c.dim() || !is_subcoalgebra(c, e))
        throw InputError("component: subspace is not a subcoalgebra");
    const Field f = m.field();
    const std::size_t dm = m.dim();
    // (id (x) psi) rho(x) = 0 for psi in E^perp: independent of the iteration.
    const Subspace e_perp = annihilator(e);
    Matrix fixed(f, 0, dm);
    for (std::size_t r = 0; r < e_perp.dim(); ++r) {
        const Matrix a = action_matrix(m, e_perp.basis_vector(r));
        for (std::size_t y = 0; y < dm; ++y) fixed.append_row(a.row(y));
    }
    Subspace current = Subspace::full(f, dm);
    for (std::size_t step = 0; step <= dm + 1; ++step) {
        Matrix system = fixed;
        const Subspace n_perp = annihilator(current);
        for (std::size_t r = 0; r < n_perp.dim(); ++r) {
            const Vector phi = n_perp.basis_vector(r);
            system.append_row(phi);
            // (phi (x) id) rho(x) = 0, one row per coalgebra coordinate k.
            Matrix slice(f, c.dim(), dm);
            for (std::size_t x = 0; x < dm; ++x)
                for (const auto& t : m.terms(x))
                    if (!phi[t.target].is_zero()) slice(t.coalgebra, x) += phi[t.target] * t.coef;
            for (std::size_t k = 0; k < c.dim(); ++k) system.append_row(slice.row(k));
        }
        Subspace next = kernel(system);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
    throw ConsistencyError("component fixpoint did not stabilize");
}

Subspace comodule_wedge(const Comodule& m, const Subspace& n, const Subspace& l, WedgeMode mode) {
    const DualAlgebra dual(m.coalgebra());
    Subspace result = ann_module(m, dual.ideal_product(ann_dual(m, n), ann_dual(m, l)));
    if (mode == WedgeMode::verify) {
        const Subspace w = wedge_by_kernel(m.coalgebra(), coefficient_coalgebra(m, n), coefficient_coalgebra(m, l));
        const Subspace cross = ann_module(m, annihilator(w));
        if (!(cross == result))
            throw ConsistencyError("comodule wedge formulas disagree: dims " + std::to_string(result.dim()) + " vs " +
                                   std::to_string(cross.dim()));
    }
    return result;
}

ComoduleTower comodule_wedge_tower(const Comodule& m, const Subspace& n, WedgeMode mode) {
    ComoduleTower tower;
    tower.chain.push_back(n);
    for (std::size_t step = 0; step <= m.dim(); ++step) {
        Subspace next = comodule_wedge(m, tower.chain.back(), n, mode);
        if (!contains(next, tower.chain.back()))
            throw InputError("comodule_wedge_tower: seed is not contained in its wedge square");
        if (next.dim() == tower.chain.back().dim()) return tower;
        tower.chain.push_back(std::move(next));
    }
    throw ConsistencyError("comodule wedge tower did not stabilize");
}

Subspace coefficient_radical_lift(const Comodule& m) {
    const Coalgebra& c = m.coalgebra();
    const Field f = m.field();
    const Subspace coeff = coefficient_coalgebra(m, Subspace::full(f, m.dim()));
    if (coeff.is_zero()) return Subspace::full(f, c.dim());
    const Coalgebra local = restrict_coalgebra(c, coeff);
    const Subspace local_perp = annihilator(jacobson_radical(DualAlgebra(local)));
    std::vector<Vector> constraints;
    for (std::size_t i = 0; i < local_perp.dim(); ++i)
        constraints.push_back(embed_coordinates(coeff, local_perp.basis_vector(i)));
    return annihilator(Subspace::span(f, c.dim(), constraints));
}

SocleResult socle(const Comodule& m) {
    SocleResult r;
    r.via_component = component(m, coradical(m.coalgebra()));
    r.via_radical = ann_module(m, coefficient_radical_lift(m));
    r.agree = r.via_component == r.via_radical;
    if (!r.agree)
        throw ConsistencyError("socle formulas disagree: component over coradical has dim " +
                               std::to_string(r.via_component.dim()) + ", radical annihilator has dim " +
                               std::to_string(r.via_radical.dim()));
    return r;
}

std::vector<MinimalClosed> minimal_closed_subcomodules(const Comodule& m, const std::vector<Subspace>& simples) {
    std::vector<MinimalClosed> out;
    for (const auto& d : simples) {
        Subspace md = component(m, d);
        if (!md.is_zero()) out.push_back({d, std::move(md)});
    }
    return out;
}

std::vector<MinimalClosed> minimal_closed_subcomodules(const Comodule& m) {
    return minimal_closed_subcomodules(m, simple_subcoalgebras(m.coalgebra()));
}

Comodule corestrict_comodule(const Comodule& m, const Subspace& d) {
    auto local = std::make_shared<const Coalgebra>(restrict_coalgebra(m.coalgebra(), d));
    std::vector<Comodule::Entry> entries;
    for (std::size_t x = 0; x < m.dim(); ++x) {
        const Matrix rho = m.coaction_of(unit_vector(m.field(), m.dim(), x));
        for (std::size_t y = 0; y < m.dim(); ++y) {
            const Vector row = rho.row(y);
            if (!d.contains(row)) throw InputError("corestrict_comodule: coefficients leave the subcoalgebra");
            const Vector coords = d.coordinates(row);
            for (std::size_t s = 0; s < coords.size(); ++s)
                if (!coords[s].is_zero()) entries.push_back({x, y, s, coords[s]});
        }
    }
    return Comodule(local, m.dim(), entries);
}

Comodule subcomodule_as_comodule(const Comodule& m, const Subspace& n) {
    if (!is_subcomodule(m, n)) throw InputError("subcomodule_as_comodule: subspace is not a subcomodule");
    const auto& piv = n.pivots();
    std::vector<Comodule::Entry> entries;
    for (std::size_t r = 0; r < n.dim(); ++r) {
        const Matrix rho = m.coaction_of(n.basis_vector(r));
        for (std::size_t s = 0; s < piv.size(); ++s)
            for (std::size_t k = 0; k < rho.cols(); ++k)
                if (!rho(piv[s], k).is_zero()) entries.push_back({r, s, k, rho(piv[s], k)});
    }
    return Comodule(m.coalgebra_ptr(), n.dim(), entries);
}

Comodule change_basis(const Comodule& m, const Matrix& q, const Matrix& p) {
    const std::size_t dm = m.dim();
    if (q.rows() != dm || q.cols() != dm) throw InputError("change_basis: comodule matrix has wrong shape");
    auto qinv = q.inverse();
    if (!qinv) throw InputError("change_basis: singular comodule basis-change matrix");
    auto c = std::make_shared<const Coalgebra>(change_basis(m.coalgebra(), p));
    const Matrix pt = p.transpose();
    std::vector<Comodule::Entry> entries;
    for (std::size_t x = 0; x < dm; ++x) {
        const Matrix rho = q * m.coaction_of(qinv->col(x)) * pt;
        for (std::size_t y = 0; y < dm; ++y)
            for (std::size_t k = 0; k < rho.cols(); ++k)
                if (!rho(y, k).is_zero()) entries.push_back({x, y, k, rho(y, k)});
    }
    return Comodule(c, dm, entries);
}

}  // namespace coalg
