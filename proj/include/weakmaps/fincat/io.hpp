#pragma once

#include <string>

#include <json.hpp>

#include "weakmaps/fincat/comonad.hpp"
#include "weakmaps/fincat/finset.hpp"
#include "weakmaps/fincat/table.hpp"

namespace wm::fincat {

/// Reads a JSON file; throws ParseError carrying the byte position on
/// malformed input.
nlohmann::json read_json_file(const std::string& path);

/// {objects, arrows: [{id, dom, cod}], compose: [[g, f, gf], ...],
///  identities: {obj: id}, limits: {initial, coproducts, pullbacks}}
TableCategory category_from_json(const nlohmann::json& j);

/// {functor: {obj_map, arr_map}, counit: {...}, comult: {...}} over a table.
ComonadData<TableCategory> table_comonad_from_json(const nlohmann::json& j, const TableCategory& c);
/// {functor: {obj_map, arr_map}, unit: {...}, mult: {...}} over a table.
MonadData<TableCategory> table_monad_from_json(const nlohmann::json& j, const TableCategory& c);

/// {"builtin": {"kind": "identity"}} or {"kind": "coreader", "S": [...]}.
ComonadData<FinSetCategory> finset_comonad_from_json(const nlohmann::json& j, const FinSetCategory& c);
/// {"builtin": {"kind": "identity"}} or {"kind": "exception", "E": [...]}.
MonadData<FinSetCategory> finset_monad_from_json(const nlohmann::json& j, const FinSetCategory& c);

/// True when the document describes a builtin rather than table data.
bool is_builtin(const nlohmann::json& j);

}  // namespace wm::fincat
