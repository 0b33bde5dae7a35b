#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "weakmaps/dg/complex.hpp"
#include "weakmaps/dg/random.hpp"

namespace wm::bar {

using dg::ComplexPtr;
using dg::GradedMap;
using dg::Matrix;
using dg::Rational;
using dg::Rng;
using dg::TensorPtr;

/// Unital dg-algebra (A, u, m) together with the monad T = A ⊗ (−).
///
/// Tensor products A ⊗ Y are cached per Y so that T^n M is one shared
/// complex; maps built through T() therefore compose without structural
/// comparisons.
class DgAlgebra {
 public:
  /// `unit` is dim A × 1, `mult` is dim A × dim(A⊗A).  An optional
  /// augmentation ε: A → I (1 × dim A) gives the trivial modules.
  DgAlgebra(std::string name, ComplexPtr A, Matrix unit, Matrix mult, std::optional<Matrix> augmentation = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const ComplexPtr& complex() const { return A_; }
  [[nodiscard]] const GradedMap& unit() const { return u_; }
  [[nodiscard]] const GradedMap& mult() const { return m_; }
  [[nodiscard]] const std::optional<GradedMap>& augmentation() const { return eps_; }

  /// Ā = A / im u, with the chain projection A → Ā and a degree-0 section.
  [[nodiscard]] const ComplexPtr& reduced() const { return bar_; }
  [[nodiscard]] const GradedMap& proj() const { return proj_; }
  [[nodiscard]] const GradedMap& incl() const { return incl_; }

  /// A ⊗ Y.
  [[nodiscard]] TensorPtr tp(const ComplexPtr& Y) const;
  /// Ā ⊗ Y.
  [[nodiscard]] TensorPtr tp_reduced(const ComplexPtr& Y) const;
  /// T f = 1_A ⊗ f, with the Koszul sign (−1)^{|f||a|}.
  [[nodiscard]] GradedMap T(const GradedMap& f) const;
  [[nodiscard]] GradedMap T(const GradedMap& f, std::size_t times) const;
  /// μ_Y = (m ⊗ 1)·assoc: A⊗(A⊗Y) → A⊗Y.
  [[nodiscard]] GradedMap mu(const ComplexPtr& Y) const;
  /// η_Y: Y → A⊗Y, y ↦ 1⊗y.
  [[nodiscard]] GradedMap eta(const ComplexPtr& Y) const;

 private:
  std::string name_;
  ComplexPtr A_;
  GradedMap u_, m_;
  std::optional<GradedMap> eps_;
  ComplexPtr bar_;
  GradedMap proj_, incl_;
  TensorPtr AA_;
  mutable std::mutex mu_lock_;
  mutable std::map<const dg::ChainComplex*, TensorPtr> tp_, tp_bar_, tp_AA_;
};

using AlgebraPtr = std::shared_ptr<const DgAlgebra>;

/// Unit and associativity laws, u and m chain maps, ε an algebra map.
Report validate_algebra(const DgAlgebra& A);

AlgebraPtr rationals();
/// Q[x]/x² with x in degree 0.
AlgebraPtr dual_numbers();
/// Λ(e) with e in the given degree.
AlgebraPtr exterior(int gen_degree = 1);
/// Q[x]/x^{top+1} with x in degree 0; products of reduced elements survive
/// once top ≥ 2.
AlgebraPtr truncated_polynomial(int top);
/// "rationals", "dual_numbers" or "exterior".
AlgebraPtr builtin_algebra(const std::string& kind, int gen_degree = 1);

/// A left dg-module: a chain map A⊗M → M.
struct DgModule {
  AlgebraPtr alg;
  ComplexPtr M;
  GradedMap action;
  std::string name;
};
using ModulePtr = std::shared_ptr<const DgModule>;

/// `action` is dim M × dim(A⊗M).
ModulePtr make_module(AlgebraPtr alg, ComplexPtr M, Matrix action, std::string name = "M");
/// Chain map, a·η = 1 and a·μ = a·Ta.
Report validate_module(const DgModule& M);
/// Strict module map check f·a = b·Tf.
bool is_module_map(const DgModule& M, const DgModule& N, const GradedMap& f);

/// A ⊗ V with action μ_V.
ModulePtr free_module(const AlgebraPtr& alg, const ComplexPtr& V, std::string name = "free");
/// V with A acting through the augmentation.
ModulePtr trivial_module(const AlgebraPtr& alg, const ComplexPtr& V, std::string name = "trivial");
/// The algebra as a module over itself.
ModulePtr regular_module(const AlgebraPtr& alg);

struct ModuleSum {
  ModulePtr module;
  GradedMap in1, in2, pr1, pr2;
};
ModuleSum direct_sum(const ModulePtr& M1, const ModulePtr& M2);
/// M transported along a random degree-wise basis change; returns the new
/// module and the iso M → M'.
std::pair<ModulePtr, GradedMap> random_conjugate(Rng& rng, const ModulePtr& M);

/// Direct sum of small blocks (trivial Q[k], trivial Q[k]→Q[k-1], free A[k])
/// with degrees in lo..hi and total dimension at most max_dim, then
/// conjugated.
ModulePtr random_module(Rng& rng, const AlgebraPtr& alg, std::size_t max_dim, int lo = 0, int hi = 1);

}  // namespace wm::bar
