#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coalg/decomp.hpp"

namespace coalg {

/// Where a named subspace lives.
enum class SpaceKind { coalgebra, comodule, dual };

struct NamedSubspace {
    SpaceKind in = SpaceKind::coalgebra;
    std::vector<Vector> vectors;

    friend bool operator==(const NamedSubspace&, const NamedSubspace&) = default;
};

/// A parsed input file.
///
/// Layout (all scalars are JSON strings):
///
///     {"field": {"kind": "rational"} | {"kind": "prime", "p": 101},
///      "coalgebra": {"dim": n, "basis": [labels]?, "delta": [[k, i, j, "c"], ...],
///                    "counit": ["e_0", ...]},
///      "comodule": {"dim": m, "rho": [[x, y, k, "r"], ...]}?,
///      "subspaces": {"name": {"in": "coalgebra" | "comodule" | "dual",
///                             "vectors": [["v_0", ...], ...]}}?}
///
/// A delta entry [k, i, j, c] adds c e_i (x) e_j to Delta(e_k); a rho entry
/// [x, y, k, r] adds r m_y (x) e_k to rho(m_x).
struct InputDocument {
    Field field;
    std::shared_ptr<const Coalgebra> coalgebra;
    std::vector<std::string> basis_labels;  // empty when absent
    std::optional<Comodule> comodule;
    std::map<std::string, NamedSubspace> subspaces;

    /// The comodule block, or the regular comodule when there is none.
    Comodule comodule_or_regular() const;
    /// The named subspace as a Subspace of its ambient space.
    Subspace subspace(const std::string& name) const;
    /// Ambient dimension of a space kind.
    std::size_t ambient(SpaceKind k) const;

    friend bool operator==(const InputDocument& a, const InputDocument& b);
};

/// Exact parse. Errors are InputError with a JSON-pointer location prefix.
InputDocument parse_input(const std::string& text);
InputDocument read_input_file(const std::string& path);

/// Canonical text: entries sorted, zero entries dropped, scalars normalized.
std::string serialize_input(const InputDocument& doc);

nlohmann::json field_to_json(const Field& f);
nlohmann::json subspace_to_json(const Subspace& s);
nlohmann::json report_to_json(const DecompositionReport& r);
nlohmann::json checks_to_json(const std::vector<TheoremCheck>& checks);
nlohmann::json flags_to_json(const Flags& f);

/// Deterministic: keys sorted, subspaces as canonical bases.
std::string serialize_report(const DecompositionReport& r);

std::string space_kind_name(SpaceKind k);

/// Objects indented, arrays of plain values kept on one line.
std::string to_pretty_json(const nlohmann::json& j);

}  // namespace coalg
