#pragma once

#include <json.hpp>

#include "weakmaps/bar/weak.hpp"

namespace wm::bar {

/// {"kind": "rationals" | "dual_numbers" | "exterior", "gen_degree": 1},
/// the same wrapped in {"builtin": ...}, or explicit
/// {"complex": ..., "unit": [[..]], "mult": [[..]], "augmentation": [[..]]}
/// with mult indexed by the A⊗A basis (total degree, then left, then right).
AlgebraPtr algebra_from_json(const nlohmann::json& j);

/// {"algebra": ..., "complex": ..., "action": [[..]]} or
/// {"algebra": ..., "kind": "regular" | "trivial" | "free", "complex": ...}.
ModulePtr module_from_json(const nlohmann::json& j);
/// The same over a given algebra; an "algebra" field is ignored.
ModulePtr module_from_json(const nlohmann::json& j, const AlgebraPtr& alg);

/// {"algebra": ..., "B": module, "A": module, "g": map, "f": map, "eps": map}
/// where the modules omit their algebra and each map is
/// {"components": {"k": block from degree k}}; missing blocks are zero.
ULali ulali_from_json(const nlohmann::json& j);
/// Explicit form; the algebra is included when it is a builtin.
nlohmann::json module_to_json(const DgModule& M);

}  // namespace wm::bar
