#include "weakmaps/bar/algebra.hpp"

#include <algorithm>

namespace wm::bar {

using dg::compose;
using dg::identity;
using dg::same_complex;

DgAlgebra::DgAlgebra(std::string name, ComplexPtr A, Matrix unit, Matrix mult, std::optional<Matrix> augmentation)
    : name_(std::move(name)), A_(std::move(A)) {
  AA_ = dg::tensor(A_, A_);
  tp_[A_.get()] = AA_;
  u_ = dg::make_map(dg::unit_complex(), A_, 0, std::move(unit));
  m_ = dg::make_map(AA_->complex, A_, 0, std::move(mult));
  if (augmentation) eps_ = dg::make_map(A_, dg::unit_complex(), 0, std::move(*augmentation));

  // Ā drops the first coordinate where the unit is nonzero.
  std::size_t piv = A_->dim();
  for (std::size_t i = 0; i < A_->dim(); ++i)
    if (sgn(u_.m(i, 0)) != 0) {
      piv = i;
      break;
    }
  if (piv == A_->dim()) throw Error("algebra '" + name_ + "': unit is zero");
  std::vector<int> deg;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < A_->dim(); ++i)
    if (i != piv) {
      keep.push_back(i);
      deg.push_back(A_->degree(i));
    }
  const std::size_t n = keep.size();
  Matrix P(n, A_->dim()), I(A_->dim(), n);
  for (std::size_t r = 0; r < n; ++r) {
    P(r, keep[r]) = 1;
    I(keep[r], r) = 1;
    P(r, piv) = -u_.m(keep[r], 0) / u_.m(piv, 0);
  }
  Matrix d = P * A_->d() * I;
  bar_ = dg::make_complex(deg, d);
  proj_ = dg::make_map(A_, bar_, 0, std::move(P));
  incl_ = dg::make_map(bar_, A_, 0, std::move(I));
}

TensorPtr DgAlgebra::tp(const ComplexPtr& Y) const {
  std::lock_guard lock(mu_lock_);
  auto& slot = tp_[Y.get()];
  if (!slot) slot = dg::tensor(A_, Y);
  return slot;
}

TensorPtr DgAlgebra::tp_reduced(const ComplexPtr& Y) const {
  std::lock_guard lock(mu_lock_);
  auto& slot = tp_bar_[Y.get()];
  if (!slot) slot = dg::tensor(bar_, Y);
  return slot;
}

GradedMap DgAlgebra::T(const GradedMap& f) const {
  return dg::tensor_map(*tp(f.src), *tp(f.tgt), identity(A_), f);
}

GradedMap DgAlgebra::T(const GradedMap& f, std::size_t times) const {
  GradedMap g = f;
  for (std::size_t k = 0; k < times; ++k) g = T(g);
  return g;
}

GradedMap DgAlgebra::mu(const ComplexPtr& Y) const {
  const TensorPtr AY = tp(Y);
  const TensorPtr A_AY = tp(AY->complex);
  TensorPtr AA_Y;
  {
    std::lock_guard lock(mu_lock_);
    auto& slot = tp_AA_[Y.get()];
    if (!slot) slot = dg::tensor(AA_->complex, Y);
    AA_Y = slot;
  }
  const GradedMap assoc = dg::associator(*A_AY, *AY, *AA_, *AA_Y);
  return compose(dg::tensor_map(*AA_Y, *AY, m_, identity(Y)), assoc);
}

GradedMap DgAlgebra::eta(const ComplexPtr& Y) const {
  const TensorPtr AY = tp(Y);
  Matrix m(AY->complex->dim(), Y->dim());
  for (std::size_t j = 0; j < Y->dim(); ++j)
    for (std::size_t i = 0; i < A_->dim(); ++i)
      if (sgn(u_.m(i, 0)) != 0) m(AY->at(i, j), j) = u_.m(i, 0);
  return GradedMap{Y, AY->complex, 0, std::move(m)};
}

namespace {

void eq(Report& r, const std::string& name, const std::string& at, const GradedMap& lhs, const GradedMap& rhs) {
  r.check(name, at, lhs == rhs, [&] { return std::pair{lhs.str(), rhs.str()}; });
}

}  // namespace

Report validate_algebra(const DgAlgebra& A) {
  Report r;
  const std::string at = A.name();
  r.check("algebra.unit_chain", at, dg::is_chain_map(A.unit()));
  r.check("algebra.mult_chain", at, dg::is_chain_map(A.mult()));
  const ComplexPtr& X = A.complex();
  // left unit as m·η_A = 1, right unit as m·(1⊗u) = ρ on A⊗I
  eq(r, "algebra.left_unit", at, compose(A.mult(), A.eta(X)), identity(X));
  const auto AI = dg::tensor(X, dg::unit_complex());
  const GradedMap right = compose(A.mult(), dg::tensor_map(*AI, *A.tp(X), identity(X), A.unit()));
  eq(r, "algebra.right_unit", at, right, dg::right_unitor(*AI));
  eq(r, "algebra.assoc", at, compose(A.mult(), A.mu(X)), compose(A.mult(), A.T(A.mult())));
  if (A.augmentation()) {
    const GradedMap& e = *A.augmentation();
    r.check("algebra.augmentation_chain", at, dg::is_chain_map(e));
    eq(r, "algebra.augmentation_unit", at, compose(e, A.unit()), identity(dg::unit_complex()));
    // ε·m = ε⊗ε on A⊗A, read through I⊗I ≅ I
    const auto II = dg::tensor(dg::unit_complex(), dg::unit_complex());
    const GradedMap ee = compose(dg::left_unitor(*II), dg::tensor_map(*A.tp(X), *II, e, e));
    eq(r, "algebra.augmentation_mult", at, compose(e, A.mult()), ee);
  }
  return r;
}

namespace {

/// Two-dimensional algebra Q·1 ⊕ Q·x with x² = 0 and x in degree k.
AlgebraPtr square_zero(const std::string& name, int k) {
  // basis sorted by degree; for k ≥ 0 the unit comes first
  const bool unit_first = k >= 0;
  const std::size_t one = unit_first ? 0 : 1, x = unit_first ? 1 : 0;
  std::vector<int> deg = unit_first ? std::vector<int>{0, k} : std::vector<int>{k, 0};
  ComplexPtr A = dg::make_complex(deg, Matrix(2, 2));
  const auto AA = dg::tensor(A, A);
  Matrix u(2, 1), m(2, 4), e(1, 2);
  u(one, 0) = 1;
  e(0, one) = 1;
  m(one, AA->at(one, one)) = 1;
  m(x, AA->at(one, x)) = 1;
  m(x, AA->at(x, one)) = 1;
  return std::make_shared<const DgAlgebra>(name, A, u, m, e);
}

}  // namespace

AlgebraPtr rationals() {
  static const AlgebraPtr Q = [] {
    Matrix one(1, 1);
    one(0, 0) = 1;
    return std::make_shared<const DgAlgebra>("rationals", dg::unit_complex(), one, one, one);
  }();
  return Q;
}

AlgebraPtr dual_numbers() {
  static const AlgebraPtr D = square_zero("dual_numbers", 0);
  return D;
}

AlgebraPtr exterior(int gen_degree) {
  if (gen_degree == 1) {
    static const AlgebraPtr E = square_zero("exterior", 1);
    return E;
  }
  return square_zero("exterior", gen_degree);
}

AlgebraPtr truncated_polynomial(int top) {
  if (top < 1) throw Error("truncated_polynomial: top power must be at least 1");
  const std::size_t n = static_cast<std::size_t>(top) + 1;
  ComplexPtr A = dg::make_complex(std::vector<int>(n, 0), Matrix(n, n));
  const auto AA = dg::tensor(A, A);
  Matrix u(n, 1), m(n, n * n), e(1, n);
  u(0, 0) = 1;
  e(0, 0) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) m(i + j, AA->at(i, j)) = 1;
  return std::make_shared<const DgAlgebra>("poly" + std::to_string(top), A, u, m, e);
}

AlgebraPtr builtin_algebra(const std::string& kind, int gen_degree) {
  if (kind == "rationals") return rationals();
  if (kind == "dual_numbers") return dual_numbers();
  if (kind == "exterior") return exterior(gen_degree);
  throw ParseError("unknown builtin algebra '" + kind + "'");
}

ModulePtr make_module(AlgebraPtr alg, ComplexPtr M, Matrix action, std::string name) {
  const ComplexPtr AM = alg->tp(M)->complex;
  GradedMap a = dg::make_map(AM, M, 0, std::move(action));
  return std::make_shared<const DgModule>(DgModule{std::move(alg), std::move(M), std::move(a), std::move(name)});
}

Report validate_module(const DgModule& M) {
  Report r;
  const DgAlgebra& A = *M.alg;
  r.check("module.action_chain", M.name, dg::is_chain_map(M.action));
  eq(r, "module.unit", M.name, compose(M.action, A.eta(M.M)), identity(M.M));
  eq(r, "module.assoc", M.name, compose(M.action, A.mu(M.M)), compose(M.action, A.T(M.action)));
  return r;
}

bool is_module_map(const DgModule& M, const DgModule& N, const GradedMap& f) {
  return compose(f, M.action) == compose(N.action, N.alg->T(f));
}

ModulePtr free_module(const AlgebraPtr& alg, const ComplexPtr& V, std::string name) {
  const GradedMap mu = alg->mu(V);
  return std::make_shared<const DgModule>(DgModule{alg, mu.tgt, mu, std::move(name)});
}

ModulePtr trivial_module(const AlgebraPtr& alg, const ComplexPtr& V, std::string name) {
  if (!alg->augmentation()) throw Error("algebra '" + alg->name() + "' has no augmentation");
  const GradedMap& e = *alg->augmentation();
  const auto AV = alg->tp(V);
  Matrix a(V->dim(), AV->complex->dim());
  for (std::size_t c = 0; c < AV->factors.size(); ++c) {
    const auto [i, j] = AV->factors[c];
    a(j, c) = e.m(0, i);
  }
  return std::make_shared<const DgModule>(DgModule{alg, V, GradedMap{AV->complex, V, 0, std::move(a)}, std::move(name)});
}

ModulePtr regular_module(const AlgebraPtr& alg) {
  return std::make_shared<const DgModule>(DgModule{alg, alg->complex(), alg->mult(), alg->name()});
}

ModuleSum direct_sum(const ModulePtr& M1, const ModulePtr& M2) {
  const AlgebraPtr& alg = M1->alg;
  const dg::DirectSum S = dg::direct_sum(M1->M, M2->M);
  const GradedMap a = compose(S.in1, compose(M1->action, alg->T(S.pr1))) +
                      compose(S.in2, compose(M2->action, alg->T(S.pr2)));
  auto M = std::make_shared<const DgModule>(DgModule{alg, S.complex, a, M1->name + "+" + M2->name});
  return {M, S.in1, S.in2, S.pr1, S.pr2};
}

std::pair<ModulePtr, GradedMap> random_conjugate(Rng& rng, const ModulePtr& M) {
  const auto [Y, P] = dg::random_conjugate(rng, M->M);
  const GradedMap Pinv{Y, M->M, 0, *P.m.inverse()};
  const GradedMap a = compose(P, compose(M->action, M->alg->T(Pinv)));
  return {std::make_shared<const DgModule>(DgModule{M->alg, Y, a, M->name}), P};
}

ModulePtr random_module(Rng& rng, const AlgebraPtr& alg, std::size_t max_dim, int lo, int hi) {
  const std::size_t target = 1 + rng() % std::max<std::size_t>(max_dim, 1);
  const std::size_t adim = alg->complex()->dim();
  ModulePtr acc;
  std::size_t used = 0;
  while (used < target) {
    const int k = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    const std::size_t kind = rng() % 3;
    ModulePtr block;
    if (kind == 2 && used + adim <= target) {
      block = free_module(alg, dg::graded_space({k}), "A[" + std::to_string(k) + "]");
      used += adim;
    } else if (kind == 1 && used + 2 <= target) {
      Matrix d(2, 2);
      d(0, 1) = 1;
      block = trivial_module(alg, dg::make_complex({k - 1, k}, d), "C[" + std::to_string(k) + "]");
      used += 2;
    } else {
      block = trivial_module(alg, dg::graded_space({k}), "Q[" + std::to_string(k) + "]");
      used += 1;
    }
    acc = acc ? direct_sum(acc, block).module : block;
  }
  return random_conjugate(rng, acc).first;
}

}  // namespace wm::bar
