// coalg: command-line front end for the coalgebra/comodule engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coalg/builders.hpp"
#include "coalg/errors.hpp"
#include "coalg/io.hpp"
#include "coalg/radical.hpp"

namespace {

using coalg::InputDocument;
using nlohmann::json;

constexpr const char* kSamplesEnv = "COALG_WEAK_CLOSED_SAMPLES";

struct Common {
    std::string file;
    std::string output;
    bool verify_wedge = false;
    std::uint64_t seed = coalg::kDefaultSampleSeed;

    coalg::WedgeMode mode() const { return verify_wedge ? coalg::WedgeMode::verify : coalg::WedgeMode::fast; }
    coalg::Options options() const {
        coalg::Options o;
        o.wedge_mode = mode();
        o.seed = seed;
        return o;
    }
};

void add_common(CLI::App* sub, Common& c, bool needs_file = true) {
    if (needs_file) sub->add_option("file", c.file, "input document (JSON)")->required();
    sub->add_option("--output,-o", c.output, "write the result here instead of stdout");
    sub->add_flag("--verify-wedge", c.verify_wedge, "compute every wedge by both formulas and compare");
    sub->add_option("--seed", c.seed, "seed for sampled checks");
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw coalg::InputError(c.output + ": cannot open for writing");
    out << text;
}

void emit(const Common& c, const json& j) { emit(c, coalg::to_pretty_json(j)); }

std::size_t weak_closed_samples() {
    const char* env = std::getenv(kSamplesEnv);
    if (!env || !*env) return coalg::kDefaultWeakClosedSamples;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw coalg::InputError(std::string(kSamplesEnv) + ": not a non-negative integer");
    return static_cast<std::size_t>(v);
}

coalg::Subspace named(const InputDocument& doc, const std::string& name, coalg::SpaceKind expected) {
    auto it = doc.subspaces.find(name);
    if (it == doc.subspaces.end()) throw coalg::InputError("no subspace named '" + name + "' in the document");
    if (it->second.in != expected)
        throw coalg::InputError("subspace '" + name + "' lives in the " + coalg::space_kind_name(it->second.in) +
                                ", expected the " + coalg::space_kind_name(expected));
    return doc.subspace(name);
}

int run_check(const Common& c) {
    const InputDocument doc = coalg::read_input_file(c.file);
    json out;
    std::optional<std::string> first;
    json cv = json::array();
    for (const auto& v : coalg::check_coalgebra(*doc.coalgebra)) {
        cv.push_back(coalg::describe(v));
        if (!first) first = "coalgebra: " + coalg::describe(v);
    }
    out["coalgebra"] = cv;
    if (doc.comodule) {
        json mv = json::array();
        for (const auto& v : coalg::check_comodule(*doc.comodule)) {
            mv.push_back(coalg::describe(v));
            if (!first) first = "comodule: " + coalg::describe(v);
        }
        out["comodule"] = mv;
    }
    out["ok"] = !first.has_value();
    emit(c, out);
    if (first) throw coalg::InputError(*first);
    return 0;
}

// Analyses below assume the axioms; a document that fails them is an input error.
InputDocument load_valid(const Common& c) {
    InputDocument doc = coalg::read_input_file(c.file);
    const auto cv = coalg::check_coalgebra(*doc.coalgebra);
    if (!cv.empty()) throw coalg::InputError("not a coalgebra: " + coalg::describe(cv.front()));
    if (doc.comodule) {
        const auto mv = coalg::check_comodule(*doc.comodule);
        if (!mv.empty()) throw coalg::InputError("not a comodule: " + coalg::describe(mv.front()));
    }
    return doc;
}

int run_coradical(const Common& c) {
    const InputDocument doc = load_valid(c);
    const coalg::Subspace j = coalg::jacobson_radical(coalg::DualAlgebra(*doc.coalgebra));
    emit(c, json{{"radical", coalg::subspace_to_json(j)}, {"coradical", coalg::subspace_to_json(coalg::coradical(*doc.coalgebra))}});
    return 0;
}

int run_simples(const Common& c) {
    const InputDocument doc = load_valid(c);
    json a = json::array();
    for (const auto& s : coalg::simple_subcoalgebras(*doc.coalgebra)) a.push_back(coalg::subspace_to_json(s));
    emit(c, json{{"simples", a}});
    return 0;
}

int run_wedge(const Common& c, const std::string& x, const std::string& y) {
    const InputDocument doc = load_valid(c);
    auto it = doc.subspaces.find(x);
    if (it == doc.subspaces.end()) throw coalg::InputError("no subspace named '" + x + "' in the document");
    const coalg::SpaceKind kind = it->second.in;
    if (kind == coalg::SpaceKind::dual) throw coalg::InputError("wedge takes coalgebra or comodule subspaces");
    const coalg::Subspace a = named(doc, x, kind);
    const coalg::Subspace b = named(doc, y, kind);
    coalg::Subspace w;
    if (kind == coalg::SpaceKind::coalgebra) {
        w = coalg::wedge(*doc.coalgebra, a, b, c.mode());
    } else {
        w = coalg::comodule_wedge(doc.comodule_or_regular(), a, b, c.mode());
    }
    emit(c, json{{"in", coalg::space_kind_name(kind)}, {"wedge", coalg::subspace_to_json(w)}});
    return 0;
}

int run_closure(const Common& c, const std::string& n) {
    const InputDocument doc = load_valid(c);
    const coalg::Comodule m = doc.comodule_or_regular();
    const coalg::Subspace s = named(doc, n, coalg::SpaceKind::comodule);
    const coalg::Subspace cl = coalg::closure(m, s);
    const auto verdict = coalg::is_weak_closed(m, s, weak_closed_samples(), c.seed);
    static const char* names[] = {"yes", "no", "unknown"};
    json out = {{"closure", coalg::subspace_to_json(cl)},
                {"closed", cl == s},
                {"weak_closed", names[static_cast<int>(verdict.value)]},
                {"samples", verdict.samples},
                {"seed", verdict.seed}};
    if (verdict.witness) {
        json w = json::array();
        for (const auto& v : *verdict.witness) w.push_back(v.to_string());
        out["witness"] = w;
    }
    emit(c, out);
    return 0;
}

int run_component(const Common& c, const std::string& e) {
    const InputDocument doc = load_valid(c);
    const coalg::Subspace sub = named(doc, e, coalg::SpaceKind::coalgebra);
    emit(c, json{{"component", coalg::subspace_to_json(coalg::component(doc.comodule_or_regular(), sub))}});
    return 0;
}

int run_socle(const Common& c) {
    const InputDocument doc = load_valid(c);
    const coalg::SocleResult s = coalg::socle(doc.comodule_or_regular());
    emit(c, json{{"socle", coalg::subspace_to_json(s.socle())}});
    return 0;
}

int run_decompose(const Common& c) {
    const InputDocument doc = load_valid(c);
    emit(c, coalg::serialize_report(coalg::decompose_comodule(doc.comodule_or_regular(), c.options())));
    return 0;
}

int run_classify(const Common& c) {
    const InputDocument doc = load_valid(c);
    emit(c, coalg::flags_to_json(coalg::classify(doc.comodule_or_regular(), c.options())));
    return 0;
}

int run_verify(const Common& c) {
    const InputDocument doc = load_valid(c);
    const auto checks = coalg::verify_structure(doc.comodule_or_regular(), c.options());
    emit(c, json{{"checks", coalg::checks_to_json(checks)}});
    for (const auto& k : checks)
        if (k.status == coalg::TheoremCheck::Status::fail)
            throw coalg::ConsistencyError("check " + k.name + " failed: " + k.detail);
    return 0;
}

struct GenSpec {
    std::string kind;
    std::size_t n = 1;
    std::uint64_t p = 0;
    std::size_t vertices = 2;
    std::vector<std::string> arrows{"0-1"};
    std::size_t length = 1;
    std::string comodule = "none";
    std::uint64_t twist = 0;
};

coalg::QuiverSpec quiver_from(const GenSpec& g) {
    coalg::QuiverSpec q;
    q.vertices = g.vertices;
    q.max_path_length = g.length;
    for (const auto& a : g.arrows) {
        const auto dash = a.find('-');
        if (dash == std::string::npos) throw coalg::InputError("arrow '" + a + "' is not of the form s-t");
        try {
            q.arrows.emplace_back(std::stoul(a.substr(0, dash)), std::stoul(a.substr(dash + 1)));
        } catch (const std::exception&) {
            throw coalg::InputError("arrow '" + a + "' is not of the form s-t");
        }
    }
    return q;
}

int run_gen(const Common& c, const GenSpec& g) {
    coalg::Field f = coalg::Field::rationals();
    if (g.p != 0) {
        try {
            f = coalg::Field::prime(g.p);
        } catch (const std::invalid_argument& e) {
            throw coalg::InputError(std::string("--p: ") + e.what());
        }
    }
    InputDocument doc;
    doc.field = f;
    coalg::Coalgebra coalgebra;
    std::optional<coalg::Comodule> standard;
    if (g.kind == "grouplike") {
        coalgebra = coalg::grouplike(f, g.n);
    } else if (g.kind == "matrix") {
        coalgebra = coalg::matrix_coalgebra(f, g.n);
    } else if (g.kind == "path") {
        const coalg::QuiverSpec q = quiver_from(g);
        coalgebra = coalg::path_coalgebra(f, q);
        if (g.twist == 0) doc.basis_labels = coalg::path_labels(q);
    } else if (g.kind == "standard") {
        standard = coalg::standard_matrix_comodule(f, g.n);
        coalgebra = standard->coalgebra();
    } else {
        throw coalg::InputError("unknown builder '" + g.kind + "'");
    }
    if (standard) {
        const coalg::Comodule m = coalg::randomized_basis(*standard, g.twist);
        doc.coalgebra = m.coalgebra_ptr();
        doc.comodule = m;
    } else {
        doc.coalgebra = std::make_shared<const coalg::Coalgebra>(coalg::randomized_basis(coalgebra, g.twist));
        if (g.comodule == "regular") doc.comodule = coalg::regular_comodule(doc.coalgebra);
        else if (g.comodule != "none") throw coalg::InputError("--comodule must be 'regular' or 'none'");
    }
    emit(c, coalg::serialize_input(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coalgebra and comodule decomposition over Q and F_p."};
    app.require_subcommand(1);
    app.footer(std::string("Exit codes: 0 success, 1 analysis refused (non-split input, characteristic too small), "
                           "2 input error, 3 internal consistency failure.\n"
                           "Documents without a comodule block are analysed as the regular comodule.\n"
                           "Environment: ") +
               kSamplesEnv + " overrides the number of random vectors tried by the weak-closedness test (default " +
               std::to_string(coalg::kDefaultWeakClosedSamples) + ").");

    Common common;
    std::string x, y;
    GenSpec gen;
    std::function<int()> action;

    auto* check = app.add_subcommand("check", "verify the coalgebra and comodule axioms");
    add_common(check, common);
    check->callback([&] { action = [&] { return run_check(common); }; });

    auto* cor = app.add_subcommand("coradical", "radical of the dual algebra and the coradical");
    add_common(cor, common);
    cor->callback([&] { action = [&] { return run_coradical(common); }; });

    auto* simples = app.add_subcommand("simples", "simple subcoalgebras");
    add_common(simples, common);
    simples->callback([&] { action = [&] { return run_simples(common); }; });

    auto* wedge = app.add_subcommand("wedge", "wedge of two named subspaces (coalgebra or comodule)");
    add_common(wedge, common);
    wedge->add_option("x", x, "first subspace name")->required();
    wedge->add_option("y", y, "second subspace name")->required();
    wedge->callback([&] { action = [&] { return run_wedge(common, x, y); }; });

    auto* clos = app.add_subcommand("closure", "closure and weak-closedness of a named comodule subspace");
    add_common(clos, common);
    clos->add_option("n", x, "subspace name")->required();
    clos->callback([&] { action = [&] { return run_closure(common, x); }; });

    auto* comp = app.add_subcommand("component", "component M_E of a named subcoalgebra E");
    add_common(comp, common);
    comp->add_option("e", x, "subcoalgebra name")->required();
    comp->callback([&] { action = [&] { return run_component(common, x); }; });

    auto* soc = app.add_subcommand("socle", "sum of the minimal closed subcomodules");
    add_common(soc, common);
    soc->callback([&] { action = [&] { return run_socle(common); }; });

    auto* dec = app.add_subcommand("decompose", "full decomposition report");
    add_common(dec, common);
    dec->callback([&] { action = [&] { return run_decompose(common); }; });

    auto* cls = app.add_subcommand("classify", "classification flags");
    add_common(cls, common);
    cls->callback([&] { action = [&] { return run_classify(common); }; });

    auto* ver = app.add_subcommand("verify", "structural identity checks (exit 3 on any failure)");
    add_common(ver, common);
    ver->callback([&] { action = [&] { return run_verify(common); }; });

    auto* g = app.add_subcommand("gen", "emit a builder instance as an input document");
    add_common(g, common, false);
    g->add_option("kind", gen.kind, "grouplike | matrix | path | standard")->required();
    g->add_option("--n", gen.n, "size parameter for grouplike, matrix and standard");
    g->add_option("--p", gen.p, "prime characteristic (default: rationals)");
    g->add_option("--vertices", gen.vertices, "path: number of vertices");
    g->add_option("--arrows", gen.arrows, "path: arrows as s-t")->delimiter(',');
    g->add_option("--length", gen.length, "path: maximal path length");
    g->add_option("--comodule", gen.comodule, "none | regular");
    g->add_option("--twist", gen.twist, "seed of a random change of basis (0: none)");
    g->callback([&] { action = [&] { return run_gen(common, gen); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const coalg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const coalg::RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const coalg::ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
