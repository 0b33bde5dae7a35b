#pragma once

#include <vector>

#include "weakmaps/bar/bar.hpp"

namespace wm::bar {

/// A weak map M ⇝ N of degree i truncated at level L: components
/// f_n: R_n → N of degree n + i stored on the normalized domain.
struct WeakHom {
  TowerPtr src;
  TowerPtr tgt;
  int degree = 0;
  std::size_t L = 0;
  std::vector<GradedMap> comp;

  /// F_n = f_n · proj_n on the full power T^n M.
  [[nodiscard]] GradedMap inflate(std::size_t n) const;
};

/// F ↦ F · incl_n.
GradedMap restrict_to_normalized(const ModuleTower& src, std::size_t n, const GradedMap& F);

WeakHom weak_zero(const TowerPtr& src, const TowerPtr& tgt, int degree, std::size_t L);
/// (1, 0, 0, …).
WeakHom weak_identity(const TowerPtr& M, std::size_t L);
/// J: strict f ↦ (f, 0, 0, …).
WeakHom weak_from_strict(const TowerPtr& src, const TowerPtr& tgt, const GradedMap& f, std::size_t L);
/// The forgetful functor: f ↦ f_0.
inline const GradedMap& forget(const WeakHom& f) { return f.comp.at(0); }

WeakHom operator+(const WeakHom& f, const WeakHom& g);
WeakHom operator-(const WeakHom& f, const WeakHom& g);
WeakHom operator*(const Rational& s, const WeakHom& f);
bool operator==(const WeakHom& f, const WeakHom& g);
/// Components with index ≤ n agree.
bool equal_up_to(const WeakHom& f, const WeakHom& g, std::size_t n);

/// (∂f)_n = ∂F_n − (−1)^i [ b·TF_{n−1} + Σ_{j=1}^{n−1} (−1)^j F_{n−1}·μ_{j−1}
///          + (−1)^n F_{n−1}·T^{n−1}a ], restricted to R_n.
WeakHom weak_differential(const WeakHom& f);
/// (gf)_n = Σ_{p+q=n} (−1)^{p·deg f} G_p · T^p F_q, restricted to R_n.
WeakHom weak_compose(const WeakHom& g, const WeakHom& f);

/// Random components with small integer entries.
WeakHom random_weak(Rng& rng, const TowerPtr& src, const TowerPtr& tgt, int degree, std::size_t L);

/// Per-level equality checks "name @ level n", or "name @ <where> level n".
void check_weak_equal(Report& r, const std::string& name, const WeakHom& lhs, const WeakHom& rhs,
                      const std::string& where = "");

/// The dg-category laws on `trials` random instances over `alg`: weak ∂² = 0,
/// Leibniz, associativity, both unit laws, and J and the forgetful functor
/// preserving composition and differential.  Modules have dimension at most
/// `max_dim`; every check is labelled "<alg> #t (i, k) level n".
Report weak_law_suite(Rng& rng, const AlgebraPtr& alg, std::size_t trials, std::size_t max_dim, std::size_t L);

/// g: B → A strict, f0: A → B, ε0: B →₁ B with (g, f0, ε0) a lali of
/// complexes.
struct ULali {
  TowerPtr B;
  TowerPtr A;
  GradedMap g;
  GradedMap f;
  GradedMap eps;
};

/// The U-lali checks: g a strict chain module map and the lali equations.
Report validate_ulali(const ULali& u);

struct LiftResult {
  WeakHom f;    ///< A ⇝ B, degree 0
  WeakHom eps;  ///< B ⇝ B, degree 1
  Report report;
};
/// f_n = ε0·b·T f_{n−1} and ε_n = −ε0·b·T ε_{n−1}, with every lali
/// equation in the weak category checked up to level L.  Throws Error when
/// the input is not a U-lali.
LiftResult lift_ulali(const ULali& u, std::size_t L);

struct FactorResult {
  GradedMap h;  ///< QA → B
  Report report;
};
/// h·ι_0 = b·Tf and h·ι_{n+1} = b·T(ε·h·ι_n), with the verification and
/// uniqueness checks.  `T` must be the codescent object of u.A.  Throws Error
/// when the input is not a U-lali, unless `validate_input` is false (for
/// inputs that are themselves truncated, such as (p, q, ξ)).
FactorResult free_ulali_factor(const ULali& u, const Codescent& T, bool validate_input = true);

/// f̄·J_n = b·T(g_n)·Incl_n.
GradedMap weak_to_strict(const WeakHom& g, const Codescent& T);
/// (f·J_n·η_{R_n})_n, i.e. f ∘ q̄ with q̄_n = ι_n η.
WeakHom strict_to_weak(const GradedMap& f, const Codescent& T, const TowerPtr& tgt);
/// A strict module map QM → N of degree 0 with f·J_n = b·T(φ_n) for random
/// φ_n: R_n → N of degree n.
GradedMap random_strict(Rng& rng, const Codescent& T, const TowerPtr& tgt);

/// B = M ⊕ A⊗K with K = Q[k] → Q[k−1] contractible, g the projection,
/// f = (1, φ) for a random chain map φ: M → A⊗K and ε(m, c) = (0, h(c − φm))
/// where h = 1 ⊗ h_K.
ULali acyclic_fibration_ulali(Rng& rng, const ModulePtr& M);

}  // namespace wm::bar
