#include "weakmaps/fincat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace wm::fincat {

namespace {

using json = nlohmann::json;

template <class T>
T field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(where) + "." + key + ": " + e.what());
  }
}

std::map<std::string, std::string> string_map(const json& j, const char* key, const char* where) {
  return field<std::map<std::string, std::string>>(j, key, where);
}

const json& builtin_body(const json& j) { return j.contains("builtin") ? j.at("builtin") : j; }

Set label_set(const json& j, const char* key) {
  try {
    return Set(field<std::vector<std::string>>(j, key, "builtin"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("builtin.") + key + ": " + e.what());
  }
}

FunctorData<TableCategory> table_functor(const json& j, const TableCategory& c, std::string name) {
  if (!j.is_object() || !j.contains("functor")) throw ParseError("missing field 'functor'");
  const auto& f = j.at("functor");
  auto obj = string_map(f, "obj_map", "functor");
  auto arr = string_map(f, "arr_map", "functor");
  for (const auto& [k, v] : obj)
    if (!c.has_object(k) || !c.has_object(v)) throw ParseError("functor.obj_map: unknown object " + k + " / " + v);
  for (const auto& [k, v] : arr)
    if (!c.has_arrow(k) || !c.has_arrow(v)) throw ParseError("functor.arr_map: unknown arrow " + k + " / " + v);
  FunctorData<TableCategory> F;
  F.name = std::move(name);
  F.on_object = [obj](const std::string& o) {
    auto it = obj.find(o);
    if (it == obj.end()) throw Error("functor data missing on object '" + o + "'");
    return it->second;
  };
  F.on_arrow = [arr](const std::string& a) {
    auto it = arr.find(a);
    if (it == arr.end()) throw Error("functor data missing on arrow '" + a + "'");
    return it->second;
  };
  return F;
}

std::function<std::string(const std::string&)> component(const json& j, const char* key, const TableCategory& c) {
  auto m = string_map(j, key, "transformation");
  for (const auto& [k, v] : m)
    if (!c.has_object(k) || !c.has_arrow(v)) throw ParseError(std::string(key) + ": unknown entry " + k);
  std::string name = key;
  return [m, name](const std::string& o) {
    auto it = m.find(o);
    if (it == m.end()) throw Error(name + " component missing on object '" + o + "'");
    return it->second;
  };
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

TableCategory category_from_json(const json& j) {
  auto objects = field<std::vector<std::string>>(j, "objects", "category");
  std::map<std::string, TableCategory::ArrowInfo> arrows;
  for (const auto& a : field<json>(j, "arrows", "category")) {
    auto id = field<std::string>(a, "id", "arrow");
    if (arrows.count(id)) throw ParseError("duplicate arrow id '" + id + "'");
    arrows[id] = {field<std::string>(a, "dom", "arrow"), field<std::string>(a, "cod", "arrow")};
  }
  std::map<std::pair<std::string, std::string>, std::string> composites;
  for (const auto& row : field<std::vector<std::vector<std::string>>>(j, "compose", "category")) {
    if (row.size() != 3) throw ParseError("compose entries must be [g, f, gf]");
    if (!composites.emplace(std::pair{row[0], row[1]}, row[2]).second)
      throw ParseError("duplicate composite " + row[0] + " . " + row[1]);
  }
  auto identities = string_map(j, "identities", "category");
  std::optional<TableCategory> cat;
  try {
    cat.emplace(std::move(objects), std::move(arrows), std::move(composites), std::move(identities));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("category: ") + e.what());
  }
  if (j.contains("limits")) {
    const auto& lim = j.at("limits");
    if (lim.contains("initial")) {
      const auto& i = lim.at("initial");
      cat->declare_initial({field<std::string>(i, "object", "initial"), string_map(i, "maps", "initial")});
    }
    if (lim.contains("coproducts"))
      for (const auto& c : lim.at("coproducts"))
        cat->declare_coproduct({field<std::string>(c, "left", "coproduct"), field<std::string>(c, "right", "coproduct"),
                                field<std::string>(c, "object", "coproduct"), field<std::string>(c, "inl", "coproduct"),
                                field<std::string>(c, "inr", "coproduct")});
    if (lim.contains("pullbacks"))
      for (const auto& p : lim.at("pullbacks"))
        cat->declare_pullback({field<std::string>(p, "f", "pullback"), field<std::string>(p, "g", "pullback"),
                               field<std::string>(p, "object", "pullback"), field<std::string>(p, "p1", "pullback"),
                               field<std::string>(p, "p2", "pullback")});
  }
  return std::move(*cat);
}

ComonadData<TableCategory> table_comonad_from_json(const json& j, const TableCategory& c) {
  ComonadData<TableCategory> P;
  P.functor = table_functor(j, c, "P");
  P.counit = component(j, "counit", c);
  P.comult = component(j, "comult", c);
  return P;
}

MonadData<TableCategory> table_monad_from_json(const json& j, const TableCategory& c) {
  MonadData<TableCategory> T;
  T.functor = table_functor(j, c, "T");
  T.unit = component(j, "unit", c);
  T.mult = component(j, "mult", c);
  return T;
}

bool is_builtin(const json& j) {
  return j.is_object() && (j.contains("builtin") || j.contains("kind"));
}

ComonadData<FinSetCategory> finset_comonad_from_json(const json& j, const FinSetCategory& c) {
  const auto& b = builtin_body(j);
  const auto kind = field<std::string>(b, "kind", "builtin");
  if (kind == "identity") return identity_comonad(c);
  if (kind == "coreader") return coreader_comonad(c, label_set(b, "S"));
  throw ParseError("unknown comonad kind '" + kind + "'");
}

MonadData<FinSetCategory> finset_monad_from_json(const json& j, const FinSetCategory& c) {
  const auto& b = builtin_body(j);
  const auto kind = field<std::string>(b, "kind", "builtin");
  if (kind == "identity") return identity_monad(c);
  if (kind == "exception") return exception_monad(c, label_set(b, "E"));
  throw ParseError("unknown monad kind '" + kind + "'");
}

}  // namespace wm::fincat
