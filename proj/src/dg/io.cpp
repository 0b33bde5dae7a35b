#include "weakmaps/dg/io.hpp"

namespace wm::dg {

using nlohmann::json;

namespace {

int degree_key(const std::string& k, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(k, &used);
    if (used == k.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(where + ": degree key '" + k + "' is not an integer");
}

Rational entry(const json& e, const std::string& where) {
  if (e.is_number_integer()) return Rational(e.get<long>());
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw ParseError(where + ": matrix entries must be integers or \"p/q\" strings");
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": matrix must be an array of rows");
  Matrix m(rows, cols);
  if (j.empty() && (rows == 0 || cols == 0)) return m;
  if (j.size() != rows) throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry(j[i][c], where);
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(i, c);
      if (q.get_den() == 1 && q.get_num().fits_slong_p())
        row.push_back(q.get_num().get_si());
      else
        row.push_back(format_rational(q));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexPtr complex_from_json(const json& j) {
  const json& degs = field(j, "degrees", "complex");
  if (!degs.is_object()) throw ParseError("complex.degrees: must be an object");
  std::vector<std::pair<int, std::size_t>> dims;
  for (const auto& [k, v] : degs.items()) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
      throw ParseError("complex.degrees." + k + ": dimension must be a non-negative integer");
    dims.emplace_back(degree_key(k, "complex.degrees"), v.get<std::size_t>());
  }
  auto dim_of = [&](int k) -> std::size_t {
    for (const auto& [d, n] : dims)
      if (d == k) return n;
    return 0;
  };
  std::vector<std::pair<int, Matrix>> bds;
  if (j.contains("boundary")) {
    const json& b = j.at("boundary");
    if (!b.is_object()) throw ParseError("complex.boundary: must be an object");
    for (const auto& [k, v] : b.items()) {
      const int d = degree_key(k, "complex.boundary");
      bds.emplace_back(d, matrix_from_json(v, dim_of(d - 1), dim_of(d), "complex.boundary." + k));
    }
  }
  try {
    return complex_from_pieces(dims, bds);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("complex: ") + e.what());
  }
}

json complex_to_json(const ChainComplex& X) {
  json out;
  out["degrees"] = json::object();
  out["boundary"] = json::object();
  for (int k : X.support()) {
    out["degrees"][std::to_string(k)] = X.dim_at(k);
    if (X.dim_at(k - 1) > 0) {
      const Matrix b = X.boundary(k);
      if (!b.is_zero()) out["boundary"][std::to_string(k)] = matrix_to_json(b);
    }
  }
  return out;
}

GradedMap graded_map_from_json(const json& j) {
  const json& dj = field(j, "degree", "gradedmap");
  if (!dj.is_number_integer()) throw ParseError("gradedmap.degree: must be an integer");
  const int degree = dj.get<int>();
  ComplexPtr src = complex_from_json(field(j, "source", "gradedmap"));
  ComplexPtr tgt = complex_from_json(field(j, "target", "gradedmap"));
  Matrix m(tgt->dim(), src->dim());
  if (j.contains("components")) {
    const json& c = j.at("components");
    if (!c.is_object()) throw ParseError("gradedmap.components: must be an object");
    for (const auto& [k, v] : c.items()) {
      const int d = degree_key(k, "gradedmap.components");
      const Matrix blk = matrix_from_json(v, tgt->dim_at(d + degree), src->dim_at(d), "gradedmap.components." + k);
      m.set_block(tgt->offset(d + degree), src->offset(d), blk);
    }
  }
  try {
    return make_map(std::move(src), std::move(tgt), degree, std::move(m));
  } catch (const Error& e) {
    throw ParseError(std::string("gradedmap: ") + e.what());
  }
}

json graded_map_to_json(const GradedMap& f) {
  json out;
  out["degree"] = f.degree;
  out["source"] = complex_to_json(*f.src);
  out["target"] = complex_to_json(*f.tgt);
  out["components"] = json::object();
  for (int k : f.src->support()) {
    const std::size_t r = f.tgt->dim_at(k + f.degree);
    if (r == 0) continue;
    const Matrix blk = f.m.block(f.tgt->offset(k + f.degree), f.src->offset(k), r, f.src->dim_at(k));
    if (!blk.is_zero()) out["components"][std::to_string(k)] = matrix_to_json(blk);
  }
  return out;
}

}  // namespace wm::dg
