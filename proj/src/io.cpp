#include "coalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "coalg/builders.hpp"
#include "coalg/errors.hpp"

namespace coalg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError((where.empty() ? "/" : where) + ": " + what);
}

void require_object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail(where + "/" + key, "unknown key");
    }
}

const json& member(const json& j, const std::string& where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

std::size_t index_value(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t bounded_index(const json& j, const std::string& where, std::size_t bound, const char* what) {
    const std::size_t v = index_value(j, where);
    if (v >= bound)
        fail(where, std::string(what) + " index " + std::to_string(v) + " out of range (dimension " +
                        std::to_string(bound) + ")");
    return v;
}

Scalar scalar_value(const Field& f, const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "scalars must be strings");
    try {
        return f.parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

Vector vector_value(const Field& f, const json& j, const std::string& where, std::size_t length) {
    if (!j.is_array()) fail(where, "expected an array of scalars");
    if (j.size() != length)
        fail(where, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_value(f, j[i], where + "/" + std::to_string(i)));
    return v;
}

Field parse_field(const json& j) {
    const std::string where = "/field";
    require_object(j, where, {"kind", "p"});
    const json& kind = member(j, where, "kind");
    if (kind == "rational") {
        if (j.contains("p")) fail(where + "/p", "rational field takes no characteristic");
        return Field::rationals();
    }
    if (kind == "prime") {
        const std::size_t p = index_value(member(j, where, "p"), where + "/p");
        try {
            return Field::prime(p);
        } catch (const std::invalid_argument& e) {
            fail(where + "/p", e.what());
        }
    }
    fail(where + "/kind", "unknown field type (expected \"rational\" or \"prime\")");
}

using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> parse_entries(
    const Field& f, const json& j, const std::string& where, std::size_t b0, std::size_t b1, std::size_t b2,
    const char* what) {
    if (!j.is_array()) fail(where, "expected an array of entries");
    std::set<Key> seen;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> out;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string at = where + "/" + std::to_string(e);
        const json& entry = j[e];
        if (!entry.is_array() || entry.size() != 4) fail(at, "expected [index, index, index, \"scalar\"]");
        const std::size_t a = bounded_index(entry[0], at + "/0", b0, "first");
        const std::size_t b = bounded_index(entry[1], at + "/1", b1, "second");
        const std::size_t c = bounded_index(entry[2], at + "/2", b2, "third");
        if (!seen.insert({a, b, c}).second)
            fail(at, std::string("duplicate ") + what + " entry (" + std::to_string(a) + "; " + std::to_string(b) +
                         ", " + std::to_string(c) + ")");
        out.emplace_back(a, b, c, scalar_value(f, entry[3], at + "/3"));
    }
    return out;
}

std::optional<SpaceKind> space_kind_from(const std::string& s) {
    if (s == "coalgebra") return SpaceKind::coalgebra;
    if (s == "comodule") return SpaceKind::comodule;
    if (s == "dual") return SpaceKind::dual;
    return std::nullopt;
}

json vector_to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json graph_to_json(const LinkGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    return {{"edges", edges}, {"classes", g.classes}};
}

json tower_dims(const std::vector<Subspace>& chain) {
    json a = json::array();
    for (const auto& s : chain) a.push_back(s.dim());
    return a;
}

// Pretty printer that keeps arrays of plain values on one line.
void emit(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) os << ",\n";
            first = false;
            os << inner << json(key).dump() << ": ";
            emit(os, value, indent + 1);
        }
        os << "\n" << pad << "}";
        return;
    }
    if (j.is_array()) {
        bool flat = true;
        for (const auto& x : j) flat = flat && !x.is_structured();
        if (flat) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << inner;
            emit(os, j[i], indent + 1);
        }
        os << "\n" << pad << "]";
        return;
    }
    os << j.dump();
}

std::string pretty(const json& j) {
    std::ostringstream os;
    emit(os, j, 0);
    os << "\n";
    return os.str();
}

}  // namespace

std::string space_kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::coalgebra:
            return "coalgebra";
        case SpaceKind::comodule:
            return "comodule";
        case SpaceKind::dual:
            return "dual";
    }
    return "?";
}

Comodule InputDocument::comodule_or_regular() const {
    if (comodule) return *comodule;
    return regular_comodule(coalgebra);
}

std::size_t InputDocument::ambient(SpaceKind k) const {
    if (k == SpaceKind::comodule) return comodule ? comodule->dim() : coalgebra->dim();
    return coalgebra->dim();
}

Subspace InputDocument::subspace(const std::string& name) const {
    auto it = subspaces.find(name);
    if (it == subspaces.end()) throw InputError("no subspace named '" + name + "' in the document");
    return Subspace::span(field, ambient(it->second.in), it->second.vectors);
}

bool operator==(const InputDocument& a, const InputDocument& b) {
    if (!(a.field == b.field) || a.basis_labels != b.basis_labels || a.subspaces != b.subspaces) return false;
    if (!a.coalgebra || !b.coalgebra || !(*a.coalgebra == *b.coalgebra)) return false;
    if (a.comodule.has_value() != b.comodule.has_value()) return false;
    return !a.comodule || *a.comodule == *b.comodule;
}

InputDocument parse_input(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("", std::string("malformed JSON: ") + e.what());
    }
    require_object(root, "", {"field", "coalgebra", "comodule", "subspaces"});
    InputDocument doc;
    doc.field = parse_field(member(root, "", "field"));
    const Field f = doc.field;

    const json& cj = member(root, "", "coalgebra");
    require_object(cj, "/coalgebra", {"dim", "basis", "delta", "counit"});
    const std::size_t n = index_value(member(cj, "/coalgebra", "dim"), "/coalgebra/dim");
    if (cj.contains("basis")) {
        const json& labels = cj["basis"];
        if (!labels.is_array() || labels.size() != n)
            fail("/coalgebra/basis", "expected " + std::to_string(n) + " labels");
        for (std::size_t i = 0; i < n; ++i) {
            if (!labels[i].is_string()) fail("/coalgebra/basis/" + std::to_string(i), "labels must be strings");
            doc.basis_labels.push_back(labels[i].get<std::string>());
        }
    }
    std::vector<Coalgebra::Entry> delta;
    for (auto& [k, i, j, c] : parse_entries(f, member(cj, "/coalgebra", "delta"), "/coalgebra/delta", n, n, n, "delta"))
        delta.push_back({k, i, j, c});
    Vector counit = vector_value(f, member(cj, "/coalgebra", "counit"), "/coalgebra/counit", n);
    doc.coalgebra = std::make_shared<const Coalgebra>(f, n, delta, counit);

    if (root.contains("comodule")) {
        const json& mj = root["comodule"];
        require_object(mj, "/comodule", {"dim", "rho"});
        const std::size_t dm = index_value(member(mj, "/comodule", "dim"), "/comodule/dim");
        std::vector<Comodule::Entry> rho;
        for (auto& [x, y, k, r] : parse_entries(f, member(mj, "/comodule", "rho"), "/comodule/rho", dm, dm, n, "rho"))
            rho.push_back({x, y, k, r});
        doc.comodule.emplace(doc.coalgebra, dm, rho);
    }

    if (root.contains("subspaces")) {
        const json& sj = root["subspaces"];
        if (!sj.is_object()) fail("/subspaces", "expected an object");
        for (const auto& [name, body] : sj.items()) {
            const std::string where = "/subspaces/" + name;
            require_object(body, where, {"in", "vectors"});
            const json& in = member(body, where, "in");
            const auto kind = in.is_string() ? space_kind_from(in.get<std::string>()) : std::nullopt;
            if (!kind) fail(where + "/in", "expected \"coalgebra\", \"comodule\" or \"dual\"");
            NamedSubspace ns;
            ns.in = *kind;
            const json& vs = member(body, where, "vectors");
            if (!vs.is_array()) fail(where + "/vectors", "expected an array of vectors");
            for (std::size_t i = 0; i < vs.size(); ++i)
                ns.vectors.push_back(
                    vector_value(f, vs[i], where + "/vectors/" + std::to_string(i), doc.ambient(*kind)));
            doc.subspaces.emplace(name, std::move(ns));
        }
    }
    return doc;
}

InputDocument read_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str());
}

json field_to_json(const Field& f) {
    if (f.is_rational()) return {{"kind", "rational"}};
    return {{"kind", "prime"}, {"p", f.characteristic()}};
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(vector_to_json(s.basis_vector(i)));
    return {{"dim", s.dim()}, {"basis", basis}};
}

std::string serialize_input(const InputDocument& doc) {
    json root;
    root["field"] = field_to_json(doc.field);
    json delta = json::array();
    for (const auto& e : doc.coalgebra->entries()) delta.push_back({e.source, e.left, e.right, e.coef.to_string()});
    json cj = {{"dim", doc.coalgebra->dim()}, {"delta", delta}, {"counit", vector_to_json(doc.coalgebra->counit())}};
    if (!doc.basis_labels.empty()) cj["basis"] = doc.basis_labels;
    root["coalgebra"] = cj;
    if (doc.comodule) {
        json rho = json::array();
        for (const auto& e : doc.comodule->entries()) rho.push_back({e.source, e.target, e.coalgebra, e.coef.to_string()});
        root["comodule"] = {{"dim", doc.comodule->dim()}, {"rho", rho}};
    }
    if (!doc.subspaces.empty()) {
        json sj = json::object();
        for (const auto& [name, ns] : doc.subspaces) {
            json vs = json::array();
            for (const auto& v : ns.vectors) vs.push_back(vector_to_json(v));
            sj[name] = {{"in", space_kind_name(ns.in)}, {"vectors", vs}};
        }
        root["subspaces"] = sj;
    }
    return pretty(root);
}

json flags_to_json(const Flags& f) {
    return {{"full", f.full},
            {"component_faithful", f.component_faithful},
            {"pi_commutative_C", f.pi_commutative_C},
            {"pi_commutative_M", f.pi_commutative_M},
            {"w_relational_hereditary", f.w_relational_hereditary},
            {"indecomposable_C", f.indecomposable_C},
            {"indecomposable_M", f.indecomposable_M},
            {"irreducible_C", f.irreducible_C},
            {"relative_irreducible_M", f.relative_irreducible_M},
            {"cosemisimple", f.cosemisimple}};
}

json checks_to_json(const std::vector<TheoremCheck>& checks) {
    json a = json::array();
    for (const auto& c : checks) {
        json o = {{"name", c.name}, {"status", to_string(c.status)}};
        if (!c.detail.empty()) o["detail"] = c.detail;
        a.push_back(o);
    }
    return a;
}

json report_to_json(const DecompositionReport& r) {
    json simples = json::array();
    for (const auto& s : r.simples) simples.push_back(subspace_to_json(s));
    json components = json::array();
    for (const auto& s : r.components) components.push_back(subspace_to_json(s));
    json classes = json::array();
    for (const auto& cr : r.classes) {
        json cells = json::array();
        for (const auto& cell : cr.cells) {
            json cj = {{"simples", cell.simples},
                       {"sum", subspace_to_json(cell.sum)},
                       {"component", subspace_to_json(cell.component)},
                       {"tower_dims", tower_dims(cell.tower.chain)},
                       {"limit", subspace_to_json(cell.tower.limit())}};
            cj["comodule_class"] = cell.comodule_class ? json(*cell.comodule_class) : json("zero");
            cells.push_back(cj);
        }
        classes.push_back({{"simples", cr.coalgebra.simples},
                           {"sum", subspace_to_json(cr.coalgebra.sum)},
                           {"tower_dims", tower_dims(cr.coalgebra.tower.chain)},
                           {"indecomposable_subcoalgebra", subspace_to_json(cr.coalgebra.tower.limit())},
                           {"summand", subspace_to_json(cr.summand)},
                           {"component_of_sum", subspace_to_json(cr.component_of_sum)},
                           {"component_tower_dims", tower_dims(cr.component_tower.chain)},
                           {"tower_chain_holds", cr.tower_chain_holds},
                           {"cells", cells}});
    }
    json coalgebra_summands = json::array();
    for (const auto& s : r.coalgebra_summands) coalgebra_summands.push_back(subspace_to_json(s));
    json summands = json::array();
    for (const auto& s : r.summands) summands.push_back(subspace_to_json(s));
    json comodule_graph = graph_to_json(r.comodule_graph);
    comodule_graph["vertex_simples"] = r.comodule_vertex_simple;
    json out = {{"dims", {{"coalgebra", r.coalgebra_dim}, {"comodule", r.comodule_dim}}},
                {"simples", simples},
                {"components", components},
                {"coefficient_coalgebra", subspace_to_json(r.coefficients)},
                {"socle", subspace_to_json(r.socle)},
                {"coalgebra_graph", graph_to_json(r.coalgebra_graph)},
                {"comodule_graph", comodule_graph},
                {"classes", classes},
                {"coalgebra_summands", coalgebra_summands},
                {"summands", summands},
                {"flags", flags_to_json(r.flags)}};
    if (!r.checks.empty()) out["checks"] = checks_to_json(r.checks);
    return out;
}

std::string serialize_report(const DecompositionReport& r) { return pretty(report_to_json(r)); }

std::string to_pretty_json(const json& j) { return pretty(j); }

}  // namespace coalg
