#pragma once

#include <json.hpp>

#include "weakmaps/dg/complex.hpp"

namespace wm::dg {

/// Rows of integers or "p/q" strings.  `rows`/`cols` give the expected shape;
/// an empty array is accepted for any shape with a zero side.
Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols, const std::string& where);
nlohmann::json matrix_to_json(const Matrix& m);

/// {"degrees": {"k": dim}, "boundary": {"k": ∂_k}}
ComplexPtr complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const ChainComplex& X);

/// {"degree": i, "source": complex, "target": complex, "components": {"k": f_k}}
GradedMap graded_map_from_json(const nlohmann::json& j);
nlohmann::json graded_map_to_json(const GradedMap& f);

}  // namespace wm::dg
