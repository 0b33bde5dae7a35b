#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "weakmaps/bar/algebra.hpp"

namespace wm::bar {

/// The powers T^k M = A ⊗ (A ⊗ (… ⊗ M)), the reduced powers
/// R_n = Ā^{⊗n} ⊗ M, and the structure maps between them, built on demand.
class ModuleTower {
 public:
  explicit ModuleTower(ModulePtr M) : M_(std::move(M)) {}

  [[nodiscard]] const ModulePtr& module() const { return M_; }
  [[nodiscard]] const DgAlgebra& alg() const { return *M_->alg; }

  /// T^k M.
  [[nodiscard]] ComplexPtr power(std::size_t k) const;
  /// R_n.
  [[nodiscard]] ComplexPtr reduced(std::size_t n) const;
  /// T^n M → R_n, a chain map.
  [[nodiscard]] const GradedMap& proj(std::size_t n) const;
  /// R_n → T^n M, a degree-0 section of proj(n).
  [[nodiscard]] const GradedMap& incl(std::size_t n) const;

  /// T^N M → T^{N-1} M multiplying the A factors at positions j and j+1.
  [[nodiscard]] const GradedMap& mult_at(std::size_t N, std::size_t j) const;
  /// T^N M → T^{N-1} M acting with the last A factor on M.
  [[nodiscard]] const GradedMap& act(std::size_t N) const;
  /// T^N M → T^{N+1} M inserting the unit at position pos (0 ≤ pos ≤ N).
  [[nodiscard]] const GradedMap& insert_unit(std::size_t N, std::size_t pos) const;

 private:
  ModulePtr M_;
  mutable std::recursive_mutex lock_;
  mutable std::vector<ComplexPtr> powers_, reduced_;
  mutable std::map<std::size_t, GradedMap> proj_, incl_, act_;
  mutable std::map<std::pair<std::size_t, std::size_t>, GradedMap> mult_, ins_;
};

using TowerPtr = std::shared_ptr<const ModuleTower>;
TowerPtr make_tower(ModulePtr M);

/// Augmented simplicial object X_n = T^{n+1} M, n ≥ −1, with the extra
/// degeneracies s_{−1} = η.
class BarComplex {
 public:
  BarComplex(TowerPtr tower, std::size_t L) : tower_(std::move(tower)), L_(L) {}

  [[nodiscard]] const TowerPtr& tower() const { return tower_; }
  [[nodiscard]] std::size_t L() const { return L_; }
  /// X_n for n ≥ −1.
  [[nodiscard]] ComplexPtr level(int n) const { return tower_->power(static_cast<std::size_t>(n + 1)); }
  /// d_j: X_n → X_{n−1}, 0 ≤ j ≤ n.
  [[nodiscard]] const GradedMap& face(int n, int j) const;
  /// s_j: X_n → X_{n+1}, −1 ≤ j ≤ n.
  [[nodiscard]] const GradedMap& degeneracy(int n, int j) const;

  /// Simplicial, augmentation and contraction identities on levels up to
  /// L + 1, plus T s_i = s_{i+1} and T d_i = d_{i+1}.
  [[nodiscard]] Report validate() const;

 private:
  TowerPtr tower_;
  std::size_t L_;
};

/// The normalized codescent object |X| truncated at simplicial level L:
/// |X|_k = ⊕_{n ≤ L} N_{n, k−n} with N_n = A ⊗ R_n, as a module QM.
class Codescent {
 public:
  Codescent(TowerPtr tower, std::size_t L);

  [[nodiscard]] const TowerPtr& tower() const { return tower_; }
  [[nodiscard]] const BarComplex& bar() const { return bar_; }
  [[nodiscard]] std::size_t L() const { return L_; }
  [[nodiscard]] const DgAlgebra& alg() const { return tower_->alg(); }

  /// N_n.
  [[nodiscard]] ComplexPtr normalized(std::size_t n) const { return N_[n]; }
  [[nodiscard]] const ComplexPtr& total() const { return total_; }
  /// The total complex as a module with action ā.
  [[nodiscard]] const ModulePtr& module() const { return QM_; }

  /// N_n → |X| of degree n (block inclusion).
  [[nodiscard]] const GradedMap& J(std::size_t n) const { return J_[n]; }
  /// X_n → N_n, the quotient by degenerate elements.
  [[nodiscard]] const GradedMap& P(std::size_t n) const { return P_[n]; }
  /// N_n → X_n, a section of P(n).
  [[nodiscard]] const GradedMap& Incl(std::size_t n) const { return I_[n]; }
  /// ι_n = J_n · P_n.
  [[nodiscard]] GradedMap iota(std::size_t n) const { return dg::compose(J_[n], P_[n]); }

  [[nodiscard]] const GradedMap& p() const { return p_; }
  [[nodiscard]] const GradedMap& q() const { return q_; }
  [[nodiscard]] const GradedMap& xi() const { return xi_; }
  [[nodiscard]] const GradedMap& abar() const { return QM_->action; }

  /// Position of basis vector b of N_n in |X|.
  [[nodiscard]] std::size_t position(std::size_t n, std::size_t b) const { return pos_[n][b]; }

  /// ι_n s_j = 0, ∂ι_0 = 0, ∂ι_n = ι_{n−1} Σ(−1)^j d_j, p ι_0 = d_0,
  /// p ι_n = 0, ā·Tι_n = ι_n d_0, and the module laws of ā.
  [[nodiscard]] Report validate() const;

 private:
  TowerPtr tower_;
  std::size_t L_;
  BarComplex bar_;
  std::vector<ComplexPtr> N_;
  ComplexPtr total_;
  ModulePtr QM_;
  std::vector<std::vector<std::size_t>> pos_;
  std::vector<GradedMap> J_, P_, I_;
  GradedMap p_, q_, xi_;
};

using CodescentPtr = std::shared_ptr<const Codescent>;
CodescentPtr codescent(const ModulePtr& M, std::size_t L);

/// (p, q, ξ) on QM.
dg::HomologicalLali bar_lali(const Codescent& T);
/// Lali equations restricted to each level n ≤ L, with the ∂ξ equation at
/// level L reported truncation-exempt; p a strict module map; q a chain map.
Report check_bar_lali(const Codescent& T);

/// Q(k): QM → QM' for a strict module map k: M → M', level by level
/// 1_A ⊗ 1_Ā^{⊗n} ⊗ k.
GradedMap codescent_map(const Codescent& T, const Codescent& T2, const GradedMap& k);

/// dim X_n − rank of the span of the degeneracy images, for X_n = T^{n+1}M.
std::size_t normalized_dim_by_rank(const BarComplex& B, int n);

}  // namespace wm::bar
