#include "weakmaps/bar/weak.hpp"

namespace wm::bar {

using dg::compose;
using dg::differential;
using dg::identity;
using dg::zero_map;

namespace {

Rational sign(long long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

std::string level(std::size_t n) { return "level " + std::to_string(n); }

void eq(Report& r, const std::string& name, const std::string& at, const GradedMap& lhs, const GradedMap& rhs) {
  r.check(name, at, lhs == rhs, [&] { return std::pair{lhs.str(), rhs.str()}; });
}

bool same_module(const TowerPtr& a, const TowerPtr& b) {
  return a == b || a->module() == b->module() ||
         (dg::same_complex(a->module()->M, b->module()->M) && a->module()->action == b->module()->action);
}

WeakHom with_comps(const WeakHom& shape, int degree, std::vector<GradedMap> comp) {
  return WeakHom{shape.src, shape.tgt, degree, shape.L, std::move(comp)};
}

void require_parallel(const WeakHom& f, const WeakHom& g) {
  if (f.L != g.L) throw CompositionError("weak maps: truncation mismatch");
  if (f.degree != g.degree || !same_module(f.src, g.src) || !same_module(f.tgt, g.tgt))
    throw CompositionError("weak maps are not parallel");
}

}  // namespace

GradedMap WeakHom::inflate(std::size_t n) const { return compose(comp.at(n), src->proj(n)); }

GradedMap restrict_to_normalized(const ModuleTower& src, std::size_t n, const GradedMap& F) {
  return compose(F, src.incl(n));
}

WeakHom weak_zero(const TowerPtr& src, const TowerPtr& tgt, int degree, std::size_t L) {
  WeakHom f{src, tgt, degree, L, {}};
  for (std::size_t n = 0; n <= L; ++n)
    f.comp.push_back(zero_map(src->reduced(n), tgt->module()->M, degree + static_cast<int>(n)));
  return f;
}

WeakHom weak_identity(const TowerPtr& M, std::size_t L) {
  WeakHom f = weak_zero(M, M, 0, L);
  f.comp[0] = identity(M->module()->M);
  return f;
}

WeakHom weak_from_strict(const TowerPtr& src, const TowerPtr& tgt, const GradedMap& f, std::size_t L) {
  WeakHom w = weak_zero(src, tgt, f.degree, L);
  w.comp[0] = f;
  return w;
}

WeakHom operator+(const WeakHom& f, const WeakHom& g) {
  require_parallel(f, g);
  std::vector<GradedMap> c;
  for (std::size_t n = 0; n <= f.L; ++n) c.push_back(f.comp[n] + g.comp[n]);
  return with_comps(f, f.degree, std::move(c));
}

WeakHom operator-(const WeakHom& f, const WeakHom& g) { return f + Rational(-1) * g; }

WeakHom operator*(const Rational& s, const WeakHom& f) {
  std::vector<GradedMap> c;
  for (const auto& x : f.comp) c.push_back(s * x);
  return with_comps(f, f.degree, std::move(c));
}

bool operator==(const WeakHom& f, const WeakHom& g) { return f.L == g.L && equal_up_to(f, g, f.L); }

bool equal_up_to(const WeakHom& f, const WeakHom& g, std::size_t n) {
  if (f.degree != g.degree) return false;
  for (std::size_t k = 0; k <= n; ++k)
    if (!(f.comp.at(k) == g.comp.at(k))) return false;
  return true;
}

WeakHom weak_differential(const WeakHom& f) {
  const ModuleTower& S = *f.src;
  const DgAlgebra& A = S.alg();
  const GradedMap& b = f.tgt->module()->action;
  std::vector<GradedMap> c;
  c.push_back(differential(f.comp[0]));
  for (std::size_t n = 1; n <= f.L; ++n) {
    const GradedMap Fp = f.inflate(n - 1);
    GradedMap corr = compose(b, A.T(Fp));
    for (std::size_t j = 1; j < n; ++j)
      corr = corr + sign(static_cast<long long>(j)) * compose(Fp, S.mult_at(n, j - 1));
    corr = corr + sign(static_cast<long long>(n)) * compose(Fp, S.act(n));
    const GradedMap D = differential(f.inflate(n)) - sign(f.degree) * corr;
    c.push_back(restrict_to_normalized(S, n, D));
  }
  return with_comps(f, f.degree - 1, std::move(c));
}

WeakHom weak_compose(const WeakHom& g, const WeakHom& f) {
  if (f.L != g.L) throw CompositionError("weak maps: truncation mismatch");
  if (!same_module(f.tgt, g.src)) throw CompositionError("weak maps do not compose: middle modules differ");
  const DgAlgebra& A = f.src->alg();
  WeakHom out{f.src, g.tgt, f.degree + g.degree, f.L, {}};
  std::vector<GradedMap> G, F;
  for (std::size_t n = 0; n <= f.L; ++n) {
    G.push_back(g.inflate(n));
    F.push_back(f.inflate(n));
  }
  for (std::size_t n = 0; n <= f.L; ++n) {
    GradedMap sum = compose(G[0], F[n]);
    for (std::size_t p = 1; p <= n; ++p)
      sum = sum + sign(static_cast<long long>(p) * f.degree) * compose(G[p], A.T(F[n - p], p));
    out.comp.push_back(restrict_to_normalized(*f.src, n, sum));
  }
  return out;
}

WeakHom random_weak(Rng& rng, const TowerPtr& src, const TowerPtr& tgt, int degree, std::size_t L) {
  WeakHom f{src, tgt, degree, L, {}};
  for (std::size_t n = 0; n <= L; ++n)
    f.comp.push_back(dg::random_map(rng, src->reduced(n), tgt->module()->M, degree + static_cast<int>(n)));
  return f;
}

void check_weak_equal(Report& r, const std::string& name, const WeakHom& lhs, const WeakHom& rhs,
                      const std::string& where) {
  for (std::size_t n = 0; n <= lhs.L; ++n)
    eq(r, name, where.empty() ? level(n) : where + " " + level(n), lhs.comp.at(n), rhs.comp.at(n));
}

Report weak_law_suite(Rng& rng, const AlgebraPtr& alg, std::size_t trials, std::size_t max_dim, std::size_t L) {
  Report r;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto M = make_tower(random_module(rng, alg, max_dim));
    const auto N = make_tower(random_module(rng, alg, max_dim));
    const auto P = make_tower(random_module(rng, alg, max_dim));
    const auto Q = make_tower(random_module(rng, alg, max_dim));
    const int i = static_cast<int>(rng() % 3) - 1;
    const int k = static_cast<int>(rng() % 3) - 1;
    const WeakHom f = random_weak(rng, M, N, i, L);
    const WeakHom g = random_weak(rng, N, P, k, L);
    const WeakHom h = random_weak(rng, P, Q, static_cast<int>(rng() % 3) - 1, L);
    const std::string at =
        alg->name() + " #" + std::to_string(t) + " (" + std::to_string(i) + ", " + std::to_string(k) + ")";

    const WeakHom df = weak_differential(f);
    const WeakHom dg_ = weak_differential(g);
    check_weak_equal(r, "weak.dd", weak_differential(df), weak_zero(M, N, i - 2, L), at);
    check_weak_equal(r, "weak.leibniz", weak_differential(weak_compose(g, f)),
                     weak_compose(dg_, f) + sign(k) * weak_compose(g, df), at);
    check_weak_equal(r, "weak.assoc", weak_compose(h, weak_compose(g, f)), weak_compose(weak_compose(h, g), f),
                     at);
    check_weak_equal(r, "weak.unit_left", weak_compose(weak_identity(N, L), f), f, at);
    check_weak_equal(r, "weak.unit_right", weak_compose(f, weak_identity(M, L)), f, at);

    const GradedMap s1 = dg::random_map(rng, M->module()->M, N->module()->M, i);
    const GradedMap s2 = dg::random_map(rng, N->module()->M, P->module()->M, k);
    check_weak_equal(r, "weak.J_compose", weak_compose(weak_from_strict(N, P, s2, L), weak_from_strict(M, N, s1, L)),
                     weak_from_strict(M, P, compose(s2, s1), L), at);
    eq(r, "weak.forget_compose", at, forget(weak_compose(g, f)), compose(forget(g), forget(f)));
    eq(r, "weak.forget_differential", at, forget(df), differential(forget(f)));
  }
  return r;
}

Report validate_ulali(const ULali& u) {
  Report r;
  r.check("ulali.g_strict", "input", is_module_map(*u.B->module(), *u.A->module(), u.g));
  r.merge(dg::validate_lali({u.g, u.f, u.eps}, "input"));
  return r;
}

LiftResult lift_ulali(const ULali& u, std::size_t L) {
  const Report input = validate_ulali(u);
  if (!input.ok()) throw Error("lift_ulali: input is not a U-lali\n" + input.text());
  const DgAlgebra& A = u.A->alg();
  const GradedMap& b = u.B->module()->action;
  LiftResult res{weak_zero(u.A, u.B, 0, L), weak_zero(u.B, u.B, 1, L), input};
  Report& r = res.report;
  res.f.comp[0] = u.f;
  res.eps.comp[0] = u.eps;
  for (std::size_t n = 1; n <= L; ++n) {
    const GradedMap rf = compose(u.eps, compose(b, A.T(res.f.inflate(n - 1))));
    const GradedMap re = -compose(u.eps, compose(b, A.T(res.eps.inflate(n - 1))));
    // the recursion lands in maps that already vanish on degenerate elements
    bool side = true;
    for (std::size_t pos = 0; pos < n; ++pos) {
      side = side && compose(rf, u.A->insert_unit(n - 1, pos)).is_zero();
      side = side && compose(re, u.B->insert_unit(n - 1, pos)).is_zero();
    }
    r.check("lift.side_condition", level(n), side);
    res.f.comp[n] = restrict_to_normalized(*u.A, n, rf);
    res.eps.comp[n] = restrict_to_normalized(*u.B, n, re);
  }
  const WeakHom& f = res.f;
  const WeakHom& e = res.eps;
  const WeakHom Jg = weak_from_strict(u.B, u.A, u.g, L);
  eq(r, "lift.Uf", level(0), forget(f), u.f);
  eq(r, "lift.Ueps", level(0), forget(e), u.eps);
  check_weak_equal(r, "lift.f_closed", weak_differential(f), weak_zero(u.A, u.B, -1, L));
  check_weak_equal(r, "lift.gf", weak_compose(Jg, f), weak_identity(u.A, L));
  check_weak_equal(r, "lift.deps", weak_differential(e), weak_identity(u.B, L) - weak_compose(f, Jg));
  check_weak_equal(r, "lift.geps", weak_compose(Jg, e), weak_zero(u.B, u.A, 1, L));
  check_weak_equal(r, "lift.epsf", weak_compose(e, f), weak_zero(u.A, u.B, 1, L));
  check_weak_equal(r, "lift.epseps", weak_compose(e, e), weak_zero(u.B, u.B, 2, L));
  for (std::size_t k = 0; k <= L; ++k) {
    r.check("lift.eps0_f", level(k), compose(u.eps, f.comp[k]).is_zero());
    r.check("lift.eps0_eps", level(k), compose(u.eps, e.comp[k]).is_zero());
  }
  return res;
}

FactorResult free_ulali_factor(const ULali& u, const Codescent& T, bool validate_input) {
  if (!same_module(T.tower(), u.A)) throw CompositionError("free_ulali_factor: codescent object is not over A");
  const Report input = validate_input ? validate_ulali(u) : Report{};
  if (!input.ok()) throw Error("free_ulali_factor: input is not a U-lali\n" + input.text());
  const DgAlgebra& A = T.alg();
  const GradedMap& b = u.B->module()->action;
  const std::size_t L = T.L();
  const ComplexPtr& X = T.total();
  const ComplexPtr& B = u.B->module()->M;

  // h J_n = H_n · Incl_n with H_0 = b·Tf and H_{n+1} = b·T(ε · h ι_n)
  Matrix hm(B->dim(), X->dim());
  std::vector<GradedMap> hJ;
  GradedMap H = compose(b, A.T(u.f));
  for (std::size_t n = 0; n <= L; ++n) {
    hJ.push_back(compose(H, T.Incl(n)));
    for (std::size_t c = 0; c < T.normalized(n)->dim(); ++c) hm.set_column(T.position(n, c), hJ[n].m, c);
    if (n < L) H = compose(b, A.T(compose(u.eps, compose(hJ[n], T.P(n)))));
  }
  FactorResult res{GradedMap{X, B, 0, std::move(hm)}, input};
  const GradedMap& h = res.h;
  Report& r = res.report;

  const GradedMap dh = differential(h);
  const GradedMap strict_gap = compose(h, T.abar()) - compose(b, A.T(h));
  for (std::size_t n = 0; n <= L; ++n) {
    const std::string at = level(n);
    const GradedMap& J = T.J(n);
    eq(r, "factor.chain", at, compose(dh, J), zero_map(J.src, B, J.degree - 1));
    eq(r, "factor.strict", at, compose(strict_gap, A.T(J)), zero_map(A.tp(J.src)->complex, B, J.degree));
    eq(r, "factor.gh", at, compose(u.g, compose(h, J)), compose(T.p(), J));
    if (n < L)
      eq(r, "factor.eh", at, compose(u.eps, compose(h, J)), compose(h, compose(T.xi(), J)));
    else
      r.exempt("factor.eh", at);
  }
  eq(r, "factor.hq", level(0), compose(h, T.q()), u.f);

  // Re-derive every component from the forcing equations alone.
  const GradedMap f2 = compose(h, T.q());
  GradedMap H2 = compose(b, A.T(f2));
  for (std::size_t n = 0; n <= L; ++n) {
    eq(r, "factor.unique", level(n), compose(H2, T.Incl(n)), compose(h, T.J(n)));
    if (n < L) {
      const GradedMap h_iota = compose(h, T.iota(n));
      eq(r, "factor.forcing", level(n + 1), compose(h, compose(T.iota(n + 1), T.bar().degeneracy(static_cast<int>(n), -1))),
         compose(u.eps, h_iota));
      H2 = compose(b, A.T(compose(u.eps, h_iota)));
    }
  }
  return res;
}

GradedMap weak_to_strict(const WeakHom& g, const Codescent& T) {
  if (!same_module(g.src, T.tower())) throw CompositionError("weak_to_strict: codescent object is over another module");
  if (g.L < T.L()) throw CompositionError("weak_to_strict: truncation mismatch");
  const DgAlgebra& A = T.alg();
  const GradedMap& b = g.tgt->module()->action;
  const ComplexPtr& N = g.tgt->module()->M;
  Matrix m(N->dim(), T.total()->dim());
  for (std::size_t n = 0; n <= T.L(); ++n) {
    const GradedMap col = compose(b, compose(A.T(g.inflate(n)), T.Incl(n)));
    for (std::size_t c = 0; c < T.normalized(n)->dim(); ++c) m.set_column(T.position(n, c), col.m, c);
  }
  return GradedMap{T.total(), N, g.degree, std::move(m)};
}

WeakHom strict_to_weak(const GradedMap& f, const Codescent& T, const TowerPtr& tgt) {
  WeakHom w{T.tower(), tgt, f.degree, T.L(), {}};
  const DgAlgebra& A = T.alg();
  for (std::size_t n = 0; n <= T.L(); ++n)
    w.comp.push_back(compose(f, compose(T.J(n), A.eta(T.tower()->reduced(n)))));
  return w;
}

GradedMap random_strict(Rng& rng, const Codescent& T, const TowerPtr& tgt) {
  const DgAlgebra& A = T.alg();
  const GradedMap& b = tgt->module()->action;
  const ComplexPtr& N = tgt->module()->M;
  Matrix m(N->dim(), T.total()->dim());
  for (std::size_t n = 0; n <= T.L(); ++n) {
    const GradedMap phi = dg::random_map(rng, T.tower()->reduced(n), N, static_cast<int>(n));
    const GradedMap col = compose(b, A.T(phi));
    for (std::size_t c = 0; c < T.normalized(n)->dim(); ++c) m.set_column(T.position(n, c), col.m, c);
  }
  return GradedMap{T.total(), N, 0, std::move(m)};
}

ULali acyclic_fibration_ulali(Rng& rng, const ModulePtr& M) {
  const AlgebraPtr& alg = M->alg;
  const int k = 1 + static_cast<int>(rng() % 2);
  Matrix d(2, 2), hk(2, 2);
  d(0, 1) = 1;
  hk(1, 0) = 1;
  const ComplexPtr K = dg::make_complex({k - 1, k}, d);
  const ModulePtr C = free_module(alg, K, "A⊗K");
  const GradedMap h = alg->T(GradedMap{K, K, 1, hk});
  const ModuleSum S = direct_sum(M, C);
  const GradedMap phi = differential(dg::random_map(rng, M->M, C->M, 1));
  ULali u{make_tower(S.module), make_tower(M), S.pr1, S.in1 + compose(S.in2, phi),
          compose(S.in2, compose(h, S.pr2 - compose(phi, S.pr1)))};
  return u;
}

}  // namespace wm::bar
