#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "qha/bounds.hpp"
#include "qha/pathmod.hpp"

namespace qha {

using Json = nlohmann::ordered_json;

/// Machine-readable report fragments. All numeric fields are exact integers;
/// "infinite" is a distinguished string token (never a sentinel number) and a
/// singularity bound that does not apply renders as "n/a". Key order is fixed,
/// so serialized reports are deterministic bytes.

Json algebra_json(const Algebra& a);
Json simples_json(const PathHom& h);
Json classes_json(const PathHom& h);
Json layer_json(const Algebra& a, const SimpleSet& v);
Json bounds_json(const PathHom& h, const SimpleSet& v);
Json optimize_json(const PathHom& h, int max_simples = 20);

/// The full document produced by `qha bounds`.
Json full_report(const PathHom& h, const std::optional<SimpleSet>& v, bool optimize,
                 int max_simples = 20);

/// Human-readable rendering of any report document (prints the sections that
/// are present).
std::string render_text(const Json& report);

}  // namespace qha
