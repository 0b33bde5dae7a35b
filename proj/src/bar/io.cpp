#include "weakmaps/bar/io.hpp"

#include "weakmaps/dg/io.hpp"

namespace wm::bar {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace

AlgebraPtr algebra_from_json(const json& j) {
  if (j.is_object() && j.contains("builtin")) return algebra_from_json(j.at("builtin"));
  if (j.is_object() && j.contains("kind")) {
    if (!j.at("kind").is_string()) throw ParseError("algebra.kind: must be a string");
    int gen = 1;
    if (j.contains("gen_degree")) {
      if (!j.at("gen_degree").is_number_integer()) throw ParseError("algebra.gen_degree: must be an integer");
      gen = j.at("gen_degree").get<int>();
    }
    return builtin_algebra(j.at("kind").get<std::string>(), gen);
  }
  const ComplexPtr A = dg::complex_from_json(field(j, "complex", "algebra"));
  const std::size_t n = A->dim();
  Matrix u = dg::matrix_from_json(field(j, "unit", "algebra"), n, 1, "algebra.unit");
  Matrix m = dg::matrix_from_json(field(j, "mult", "algebra"), n, n * n, "algebra.mult");
  std::optional<Matrix> e;
  if (j.contains("augmentation")) e = dg::matrix_from_json(j.at("augmentation"), 1, n, "algebra.augmentation");
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "A";
  try {
    return std::make_shared<const DgAlgebra>(name, A, std::move(u), std::move(m), std::move(e));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(std::string("algebra: ") + err.what());
  }
}

ModulePtr module_from_json(const json& j) { return module_from_json(j, algebra_from_json(field(j, "algebra", "module"))); }

ModulePtr module_from_json(const json& j, const AlgebraPtr& alg) {
  if (!j.is_object()) throw ParseError("module: must be an object");
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "M";
  if (j.contains("kind")) {
    const json& k = j.at("kind");
    if (!k.is_string()) throw ParseError("module.kind: must be a string");
    const std::string kind = k.get<std::string>();
    if (kind == "regular") return regular_module(alg);
    const ComplexPtr V = dg::complex_from_json(field(j, "complex", "module"));
    try {
      if (kind == "trivial") return trivial_module(alg, V, name);
      if (kind == "free") return free_module(alg, V, name);
    } catch (const Error& err) {
      throw ParseError(std::string("module: ") + err.what());
    }
    throw ParseError("module.kind: unknown kind '" + kind + "'");
  }
  const ComplexPtr M = dg::complex_from_json(field(j, "complex", "module"));
  const std::size_t cols = alg->tp(M)->complex->dim();
  Matrix a = dg::matrix_from_json(field(j, "action", "module"), M->dim(), cols, "module.action");
  try {
    return make_module(alg, M, std::move(a), name);
  } catch (const Error& err) {
    throw ParseError(std::string("module: ") + err.what());
  }
}

ULali ulali_from_json(const json& j) {
  const AlgebraPtr alg = algebra_from_json(field(j, "algebra", "ulali"));
  const TowerPtr B = make_tower(module_from_json(field(j, "B", "ulali"), alg));
  const TowerPtr A = make_tower(module_from_json(field(j, "A", "ulali"), alg));
  // Maps are given by their components; source and target come from the modules.
  auto map = [&](const char* key, const ComplexPtr& src, const ComplexPtr& tgt, int degree) {
    const json& m = field(j, key, "ulali");
    if (!m.is_object()) throw ParseError(std::string("ulali.") + key + ": must be an object");
    Matrix out(tgt->dim(), src->dim());
    if (m.contains("components")) {
      const json& comps = m.at("components");
      if (!comps.is_object()) throw ParseError(std::string("ulali.") + key + ".components: must be an object");
      for (const auto& [deg, block] : comps.items()) {
        int k = 0;
        try {
          std::size_t used = 0;
          k = std::stoi(deg, &used);
          if (used != deg.size()) throw std::invalid_argument(deg);
        } catch (const std::exception&) {
          throw ParseError(std::string("ulali.") + key + ": bad degree '" + deg + "'");
        }
        const std::string where = std::string("ulali.") + key + "." + deg;
        out.set_block(tgt->offset(k + degree), src->offset(k),
                      dg::matrix_from_json(block, tgt->dim_at(k + degree), src->dim_at(k), where));
      }
    }
    try {
      return dg::make_map(src, tgt, degree, std::move(out));
    } catch (const Error& err) {
      throw ParseError(std::string("ulali.") + key + ": " + err.what());
    }
  };
  ULali u{B, A, {}, {}, {}};
  u.g = map("g", B->module()->M, A->module()->M, 0);
  u.f = map("f", A->module()->M, B->module()->M, 0);
  u.eps = map("eps", B->module()->M, B->module()->M, 1);
  return u;
}

json module_to_json(const DgModule& M) {
  json out;
  const std::string& kind = M.alg->name();
  if (kind == "rationals" || kind == "dual_numbers") out["algebra"] = {{"kind", kind}};
  if (kind == "exterior") {
    const auto& d = M.alg->reduced()->degrees();
    out["algebra"] = {{"kind", kind}, {"gen_degree", d.empty() ? 1 : d.front()}};
  }
  out["complex"] = dg::complex_to_json(*M.M);
  out["action"] = dg::matrix_to_json(M.action.m);
  return out;
}

}  // namespace wm::bar
