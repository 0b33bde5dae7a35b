#include "weakmaps/bar/bar.hpp"

#include <algorithm>
#include <tuple>

namespace wm::bar {

using dg::compose;
using dg::identity;
using dg::zero_map;

namespace {

Rational sign(long long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void eq(Report& r, const std::string& name, const std::string& at, const GradedMap& lhs, const GradedMap& rhs) {
  r.check(name, at, lhs == rhs, [&] { return std::pair{lhs.str(), rhs.str()}; });
}

std::string level(long long n) { return "level " + std::to_string(n); }

}  // namespace

// ---------------------------------------------------------------------------
// Tower

ComplexPtr ModuleTower::power(std::size_t k) const {
  std::lock_guard g(lock_);
  if (powers_.empty()) powers_.push_back(M_->M);
  while (powers_.size() <= k) powers_.push_back(alg().tp(powers_.back())->complex);
  return powers_[k];
}

ComplexPtr ModuleTower::reduced(std::size_t n) const {
  std::lock_guard g(lock_);
  if (reduced_.empty()) reduced_.push_back(M_->M);
  while (reduced_.size() <= n) reduced_.push_back(alg().tp_reduced(reduced_.back())->complex);
  return reduced_[n];
}

const GradedMap& ModuleTower::proj(std::size_t n) const {
  std::lock_guard g(lock_);
  if (auto it = proj_.find(n); it != proj_.end()) return it->second;
  GradedMap f = n == 0 ? identity(M_->M)
                       : dg::tensor_map(*alg().tp(power(n - 1)), *alg().tp_reduced(reduced(n - 1)), alg().proj(),
                                        proj(n - 1));
  return proj_.emplace(n, std::move(f)).first->second;
}

const GradedMap& ModuleTower::incl(std::size_t n) const {
  std::lock_guard g(lock_);
  if (auto it = incl_.find(n); it != incl_.end()) return it->second;
  GradedMap f = n == 0 ? identity(M_->M)
                       : dg::tensor_map(*alg().tp_reduced(reduced(n - 1)), *alg().tp(power(n - 1)), alg().incl(),
                                        incl(n - 1));
  return incl_.emplace(n, std::move(f)).first->second;
}

const GradedMap& ModuleTower::mult_at(std::size_t N, std::size_t j) const {
  if (N < 2 || j + 2 > N) throw Error("mult_at: no factors " + std::to_string(j) + "," + std::to_string(j + 1) +
                                      " in T^" + std::to_string(N));
  std::lock_guard g(lock_);
  if (auto it = mult_.find({N, j}); it != mult_.end()) return it->second;
  GradedMap f = j == 0 ? alg().mu(power(N - 2)) : alg().T(mult_at(N - 1, j - 1));
  return mult_.emplace(std::pair{N, j}, std::move(f)).first->second;
}

const GradedMap& ModuleTower::act(std::size_t N) const {
  if (N < 1) throw Error("act: T^0 has no A factor");
  std::lock_guard g(lock_);
  if (auto it = act_.find(N); it != act_.end()) return it->second;
  GradedMap f = N == 1 ? M_->action : alg().T(act(N - 1));
  return act_.emplace(N, std::move(f)).first->second;
}

const GradedMap& ModuleTower::insert_unit(std::size_t N, std::size_t pos) const {
  if (pos > N) throw Error("insert_unit: position out of range");
  std::lock_guard g(lock_);
  if (auto it = ins_.find({N, pos}); it != ins_.end()) return it->second;
  GradedMap f = pos == 0 ? alg().eta(power(N)) : alg().T(insert_unit(N - 1, pos - 1));
  return ins_.emplace(std::pair{N, pos}, std::move(f)).first->second;
}

TowerPtr make_tower(ModulePtr M) { return std::make_shared<const ModuleTower>(std::move(M)); }

// ---------------------------------------------------------------------------
// Bar complex

const GradedMap& BarComplex::face(int n, int j) const {
  if (n < 0 || j < 0 || j > n) throw Error("face d_" + std::to_string(j) + " on X_" + std::to_string(n));
  const auto N = static_cast<std::size_t>(n + 1);
  return j < n ? tower_->mult_at(N, static_cast<std::size_t>(j)) : tower_->act(N);
}

const GradedMap& BarComplex::degeneracy(int n, int j) const {
  if (n < -1 || j < -1 || j > n) throw Error("degeneracy s_" + std::to_string(j) + " on X_" + std::to_string(n));
  return tower_->insert_unit(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(j + 1));
}

namespace {

/// Collects one check per identity family and level, naming the first
/// offending index set.
struct Family {
  std::string name;
  std::string at;
  bool ok = true;
  std::string where;
  void add(bool good, const std::string& idx) {
    if (!good && ok) {
      ok = false;
      where = idx;
    }
  }
  void emit(Report& r) const {
    r.check(name, at, ok, [&] { return std::pair<std::string, std::string>{"differs at " + where, "equal"}; });
  }
};

}  // namespace

Report BarComplex::validate() const {
  Report r;
  const int top = static_cast<int>(L_) + 1;
  const DgAlgebra& A = tower_->alg();
  for (int n = -1; n <= top; ++n) {
    const std::string at = "X_" + std::to_string(n);
    Family ff{"bar.face_face", at}, ss{"bar.degen_degen", at}, fs{"bar.face_degen", at}, Ts{"bar.T_degen", at},
        Td{"bar.T_face", at};
    // d_i d_j = d_{j-1} d_i on X_n
    if (n >= 1)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          ff.add(compose(face(n - 1, i), face(n, j)) == compose(face(n - 1, j - 1), face(n, i)),
                 "i=" + std::to_string(i) + ",j=" + std::to_string(j));
    // s_i s_j = s_{j+1} s_i for −1 ≤ i ≤ j ≤ n
    if (n + 2 <= top)
      for (int j = -1; j <= n; ++j)
        for (int i = -1; i <= j; ++i)
          ss.add(compose(degeneracy(n + 1, i), degeneracy(n, j)) == compose(degeneracy(n + 1, j + 1), degeneracy(n, i)),
                 "i=" + std::to_string(i) + ",j=" + std::to_string(j));
    // d_i s_j on X_n
    if (n + 1 <= top)
      for (int j = -1; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          const GradedMap lhs = compose(face(n + 1, i), degeneracy(n, j));
          bool good;
          if (i < j)
            good = lhs == compose(degeneracy(n - 1, j - 1), face(n, i));
          else if (i == j || i == j + 1)
            good = lhs == identity(level(n));
          else
            good = lhs == compose(degeneracy(n - 1, j), face(n, i - 1));
          fs.add(good, "i=" + std::to_string(i) + ",j=" + std::to_string(j));
        }
    // T s_i = s_{i+1}, T d_i = d_{i+1}
    if (n + 2 <= top)
      for (int i = -1; i <= n; ++i)
        Ts.add(A.T(degeneracy(n, i)) == degeneracy(n + 1, i + 1), "i=" + std::to_string(i));
    if (n >= 0 && n + 1 <= top)
      for (int i = 0; i <= n; ++i) Td.add(A.T(face(n, i)) == face(n + 1, i + 1), "i=" + std::to_string(i));
    for (const Family* f : {&ff, &ss, &fs, &Ts, &Td}) f->emit(r);
  }
  return r;
}

std::size_t normalized_dim_by_rank(const BarComplex& B, int n) {
  const std::size_t dim = B.level(n)->dim();
  if (n <= 0) return dim;
  std::size_t cols = 0;
  for (int j = 0; j < n; ++j) cols += B.degeneracy(n - 1, j).m.cols();
  Matrix span(dim, cols);
  std::size_t c0 = 0;
  for (int j = 0; j < n; ++j) {
    const Matrix& s = B.degeneracy(n - 1, j).m;
    span.set_block(0, c0, s);
    c0 += s.cols();
  }
  return dim - span.rank();
}

// ---------------------------------------------------------------------------
// Codescent

Codescent::Codescent(TowerPtr tower, std::size_t L) : tower_(std::move(tower)), L_(L), bar_(tower_, L) {
  const DgAlgebra& A = tower_->alg();
  const GradedMap oneA = identity(A.complex());
  for (std::size_t n = 0; n <= L_; ++n) {
    const auto Xn = A.tp(tower_->power(n));
    const auto Nn = A.tp(tower_->reduced(n));
    N_.push_back(Nn->complex);
    P_.push_back(dg::tensor_map(*Xn, *Nn, oneA, tower_->proj(n)));
    I_.push_back(dg::tensor_map(*Nn, *Xn, oneA, tower_->incl(n)));
  }

  // basis of |X|: (total degree, level, index), ascending
  std::vector<std::tuple<int, std::size_t, std::size_t>> basis;
  for (std::size_t n = 0; n <= L_; ++n)
    for (std::size_t b = 0; b < N_[n]->dim(); ++b) basis.emplace_back(N_[n]->degree(b) + static_cast<int>(n), n, b);
  std::sort(basis.begin(), basis.end());
  pos_.assign(L_ + 1, {});
  for (std::size_t n = 0; n <= L_; ++n) pos_[n].assign(N_[n]->dim(), 0);
  std::vector<int> deg;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const auto& [d, n, b] = basis[p];
    pos_[n][b] = p;
    deg.push_back(d);
  }
  const std::size_t dim = basis.size();
  std::vector<Matrix> Jm;
  for (std::size_t n = 0; n <= L_; ++n) {
    Matrix j(dim, N_[n]->dim());
    for (std::size_t b = 0; b < N_[n]->dim(); ++b) j(pos_[n][b], b) = 1;
    Jm.push_back(std::move(j));
  }

  // The boundary is pinned down by ∂(ι_n) = ι_{n−1} Σ_j (−1)^j d_j.  With
  // ι_n = J_n P_n and P_n a chain map this reads, on N_n,
  //   ∂ J_n = ι_{n−1} Σ_j (−1)^j d_j · Incl_n + (−1)^n J_n ∂_{N_n},
  // which is well defined because the face sum kills degenerate elements.
  Matrix D(dim, dim);
  for (std::size_t n = 0; n <= L_; ++n) {
    Matrix col = sign(static_cast<long long>(n)) * (Jm[n] * N_[n]->d());
    if (n >= 1) {
      const int ni = static_cast<int>(n);
      Matrix faces = bar_.face(ni, 0).m;
      for (int j = 1; j <= ni; ++j) faces += sign(j) * bar_.face(ni, j).m;
      col += Jm[n - 1] * (P_[n - 1].m * (faces * I_[n].m));
    }
    for (std::size_t b = 0; b < N_[n]->dim(); ++b) D.set_column(pos_[n][b], col, b);
  }
  total_ = dg::make_complex(deg, std::move(D));
  for (std::size_t n = 0; n <= L_; ++n) J_.push_back(GradedMap{N_[n], total_, static_cast<int>(n), std::move(Jm[n])});

  const ComplexPtr& M = tower_->module()->M;
  Matrix pm(M->dim(), dim);
  for (std::size_t b = 0; b < N_[0]->dim(); ++b) pm.set_column(pos_[0][b], tower_->module()->action.m, b);
  p_ = GradedMap{total_, M, 0, std::move(pm)};
  q_ = compose(J_[0], A.eta(M));

  // ξ J_n = J_{n+1} P_{n+1} s_{−1} Incl_n below the top level, zero at it.
  Matrix xm(dim, dim);
  for (std::size_t n = 0; n < L_; ++n) {
    const Matrix col = J_[n + 1].m * (P_[n + 1].m * (bar_.degeneracy(static_cast<int>(n), -1).m * I_[n].m));
    for (std::size_t b = 0; b < N_[n]->dim(); ++b) xm.set_column(pos_[n][b], col, b);
  }
  xi_ = GradedMap{total_, total_, 1, std::move(xm)};

  // ā(a ⊗ J_n y) = (−1)^{n|a|} ι_n d_0 (a ⊗ Incl_n y)
  const auto AX = A.tp(total_);
  Matrix am(dim, AX->complex->dim());
  const ComplexPtr& Ac = A.complex();
  for (std::size_t n = 0; n <= L_; ++n) {
    const auto AN = A.tp(N_[n]);
    const Matrix Mn = J_[n].m * (P_[n].m * (bar_.face(static_cast<int>(n) + 1, 0).m * A.T(I_[n]).m));
    for (std::size_t i = 0; i < Ac->dim(); ++i)
      for (std::size_t y = 0; y < N_[n]->dim(); ++y) {
        const std::size_t dst = AX->at(i, pos_[n][y]);
        am.set_column(dst, Mn, AN->at(i, y));
        if ((n * static_cast<std::size_t>(std::abs(Ac->degree(i)))) % 2 == 1)
          for (std::size_t r = 0; r < dim; ++r) am(r, dst) = -am(r, dst);
      }
  }
  QM_ = std::make_shared<const DgModule>(
      DgModule{tower_->module()->alg, total_, GradedMap{AX->complex, total_, 0, std::move(am)},
               "Q(" + tower_->module()->name + ")"});
}

CodescentPtr codescent(const ModulePtr& M, std::size_t L) {
  if (L < 1) throw Error("truncation level must be at least 1");
  return std::make_shared<const Codescent>(make_tower(M), L);
}

Report Codescent::validate() const {
  Report r;
  const DgAlgebra& A = alg();
  r.check("codescent.dd", "|X|", (total_->d() * total_->d()).is_zero());
  for (std::size_t n = 0; n <= L_; ++n) {
    const int ni = static_cast<int>(n);
    const std::string at = level(ni);
    const GradedMap in = iota(n);
    bool degenerate_ok = true;
    for (int j = 0; j < ni; ++j) degenerate_ok = degenerate_ok && compose(in, bar_.degeneracy(ni - 1, j)).is_zero();
    r.check("codescent.iota_degenerate", at, degenerate_ok);
    if (n == 0) {
      eq(r, "codescent.d_iota", at, dg::differential(in), zero_map(in.src, total_, -1));
      eq(r, "codescent.p_iota", at, compose(p_, in), bar_.face(0, 0));
    } else {
      GradedMap faces = bar_.face(ni, 0);
      for (int j = 1; j <= ni; ++j) faces = faces + sign(j) * bar_.face(ni, j);
      eq(r, "codescent.d_iota", at, dg::differential(in), compose(iota(n - 1), faces));
      eq(r, "codescent.p_iota", at, compose(p_, in), zero_map(in.src, p_.tgt, ni));
    }
    eq(r, "codescent.abar_iota", at, compose(abar(), A.T(in)), compose(in, bar_.face(ni + 1, 0)));
  }
  r.merge(validate_module(*QM_));
  return r;
}

dg::HomologicalLali bar_lali(const Codescent& T) { return {T.p(), T.q(), T.xi()}; }

Report check_bar_lali(const Codescent& T) {
  Report r;
  const auto& X = T.total();
  const GradedMap& p = T.p();
  const GradedMap& q = T.q();
  const GradedMap& xi = T.xi();
  const auto& M = p.tgt;
  const GradedMap dxi = dg::differential(xi);
  const GradedMap rhs = identity(X) - compose(q, p);
  eq(r, "lali.p_chain", "QM", dg::differential(p), zero_map(X, M, -1));
  eq(r, "lali.q_chain", "QM", dg::differential(q), zero_map(M, X, -1));
  eq(r, "lali.pq", "QM", compose(p, q), identity(M));
  eq(r, "lali.xiq", "QM", compose(xi, q), zero_map(M, X, 1));
  for (std::size_t n = 0; n <= T.L(); ++n) {
    const std::string at = level(static_cast<long long>(n));
    const GradedMap& J = T.J(n);
    if (n < T.L())
      eq(r, "lali.dxi", at, compose(dxi, J), compose(rhs, J));
    else
      r.exempt("lali.dxi", at);
    eq(r, "lali.pxi", at, compose(p, compose(xi, J)), zero_map(J.src, M, J.degree + 1));
    eq(r, "lali.xixi", at, compose(xi, compose(xi, J)), zero_map(J.src, X, J.degree + 2));
  }
  const DgModule& Mod = *T.tower()->module();
  r.check("lali.p_strict", "QM", is_module_map(*T.module(), Mod, p));
  return r;
}

GradedMap codescent_map(const Codescent& T, const Codescent& T2, const GradedMap& k) {
  if (T.L() != T2.L()) throw CompositionError("codescent_map: truncation levels differ");
  const DgAlgebra& A = T.alg();
  Matrix m(T2.total()->dim(), T.total()->dim());
  GradedMap Rk = k;
  for (std::size_t n = 0; n <= T.L(); ++n) {
    if (n > 0)
      Rk = dg::tensor_map(*A.tp_reduced(T.tower()->reduced(n - 1)), *A.tp_reduced(T2.tower()->reduced(n - 1)),
                          identity(A.reduced()), Rk);
    const GradedMap level = dg::tensor_map(*A.tp(T.tower()->reduced(n)), *A.tp(T2.tower()->reduced(n)),
                                           identity(A.complex()), Rk);
    const Matrix col = T2.J(n).m * level.m;
    for (std::size_t b = 0; b < T.normalized(n)->dim(); ++b) m.set_column(T.position(n, b), col, b);
  }
  return GradedMap{T.total(), T2.total(), k.degree, std::move(m)};
}

}  // namespace wm::bar
