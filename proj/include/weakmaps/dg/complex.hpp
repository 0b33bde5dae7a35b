#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weakmaps/dg/matrix.hpp"
#include "weakmaps/report.hpp"

namespace wm::dg {

/// Finite chain complex over Q.  The basis is one list with a degree per
/// vector, sorted ascending; the boundary is a single square matrix that only
/// maps degree k to degree k-1.
class ChainComplex {
 public:
  /// Throws Error if degrees are unsorted, the boundary has the wrong shape
  /// or degree pattern, or ∂∂ ≠ 0.
  ChainComplex(std::vector<int> degrees, Matrix d);

  [[nodiscard]] std::size_t dim() const { return deg_.size(); }
  [[nodiscard]] int degree(std::size_t i) const { return deg_[i]; }
  [[nodiscard]] const std::vector<int>& degrees() const { return deg_; }
  [[nodiscard]] const Matrix& d() const { return d_; }

  /// Distinct degrees with nonzero dimension, ascending.
  [[nodiscard]] std::vector<int> support() const;
  [[nodiscard]] std::size_t dim_at(int k) const;
  /// Index of the first basis vector of degree k (or where it would go).
  [[nodiscard]] std::size_t offset(int k) const;
  /// ∂_k as a dim(k-1) × dim(k) matrix.
  [[nodiscard]] Matrix boundary(int k) const;

  [[nodiscard]] std::string str() const;

 private:
  std::vector<int> deg_;
  Matrix d_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

ComplexPtr make_complex(std::vector<int> degrees, Matrix d);
/// Complex with the given per-degree dimensions and boundaries ∂_k.
ComplexPtr complex_from_pieces(const std::vector<std::pair<int, std::size_t>>& dims,
                               const std::vector<std::pair<int, Matrix>>& boundaries);
/// Zero differential.
ComplexPtr graded_space(std::vector<int> degrees);
/// The unit complex: Q in degree 0.
ComplexPtr unit_complex();
/// Pointer equality or equal degrees and boundary.
bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

/// A graded map X → Y of degree i: a dim Y × dim X matrix whose nonzero
/// entries go from degree k to degree k+i.
struct GradedMap {
  ComplexPtr src;
  ComplexPtr tgt;
  int degree = 0;
  Matrix m;

  [[nodiscard]] bool is_zero() const { return m.is_zero(); }
  /// Per-degree form "k:[[..]] ..." for reports.
  [[nodiscard]] std::string str() const;
};

/// Checks shape and degree pattern; throws Error otherwise.
GradedMap make_map(ComplexPtr src, ComplexPtr tgt, int degree, Matrix m);
GradedMap identity(const ComplexPtr& X);
GradedMap zero_map(const ComplexPtr& src, const ComplexPtr& tgt, int degree);

/// g·f.  Throws CompositionError when tgt(f) ≠ src(g).
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap operator+(const GradedMap& f, const GradedMap& g);
GradedMap operator-(const GradedMap& f, const GradedMap& g);
GradedMap operator-(const GradedMap& f);
GradedMap operator*(const Rational& s, const GradedMap& f);
bool operator==(const GradedMap& f, const GradedMap& g);

/// ∂f = ∂_Y·f − (−1)^i f·∂_X.
GradedMap differential(const GradedMap& f);
bool is_chain_map(const GradedMap& f);

/// X ⊗ Y with the basis sorted by total degree, then by the X index, then by
/// the Y index.
struct TensorProduct {
  ComplexPtr left;
  ComplexPtr right;
  ComplexPtr complex;
  std::vector<std::uint32_t> index;                          ///< i * dim Y + j ↦ position
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  ///< position ↦ (i, j)

  [[nodiscard]] std::size_t at(std::size_t i, std::size_t j) const { return index[i * right->dim() + j]; }
};
using TensorPtr = std::shared_ptr<const TensorProduct>;

/// ∂(x⊗y) = ∂x⊗y + (−1)^|x| x⊗∂y.
TensorPtr tensor(const ComplexPtr& X, const ComplexPtr& Y);
/// (f⊗g)(x⊗y) = (−1)^{|g||x|} f(x)⊗g(y), as a map S → T.
GradedMap tensor_map(const TensorProduct& S, const TensorProduct& T, const GradedMap& f, const GradedMap& g);
/// x⊗y ↦ (−1)^{|x||y|} y⊗x.
GradedMap symmetry(const TensorProduct& XY, const TensorProduct& YX);
/// x⊗(y⊗z) ↦ (x⊗y)⊗z.  `X_YZ.right` must be `YZ.complex` and `XY_Z.left`
/// must be `XY.complex`.
GradedMap associator(const TensorProduct& X_YZ, const TensorProduct& YZ, const TensorProduct& XY,
                     const TensorProduct& XY_Z);
/// I⊗X → X and X⊗I → X.
GradedMap left_unitor(const TensorProduct& IX);
GradedMap right_unitor(const TensorProduct& XI);

/// Homological lali g: A → B with section q and contraction ξ of degree 1.
struct HomologicalLali {
  GradedMap g;
  GradedMap q;
  GradedMap xi;
};

HomologicalLali identity_lali(const ComplexPtr& X);
/// Checks chain maps, gq = 1, ∂ξ = 1 − qg, gξ = 0, ξq = 0, ξξ = 0.
Report validate_lali(const HomologicalLali& l, const std::string& at = "lali");
/// outer ∘ inner = (g g', q' q, ξ' + q' ξ g').
HomologicalLali compose_lali(const HomologicalLali& outer, const HomologicalLali& inner);
/// (u, v): l → l' with g'u = vg, uq = q'v and uξ = ξ'u.
Report check_lali_morphism(const HomologicalLali& l, const HomologicalLali& l2, const GradedMap& u,
                           const GradedMap& v, const std::string& at = "lali-morphism");

/// rank ker ∂_k − rank im ∂_{k+1} for k in [lo, hi].
std::vector<std::pair<int, std::size_t>> homology_ranks(const ChainComplex& X, int lo, int hi);
/// Same over the support of X.
std::vector<std::pair<int, std::size_t>> homology_ranks(const ChainComplex& X);

}  // namespace wm::dg
