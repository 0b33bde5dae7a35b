#pragma once

#include <vector>

#include "weakmaps/fincat/comonad.hpp"
#include "weakmaps/fincat/finset.hpp"

namespace wm::awfs {

using FinMonad = fincat::MonadData<fincat::FinSetCategory>;

/// j: c → d with a Kleisli retraction k: d → Tc, k·j = η_c.
struct SplitMono {
  fincat::Function j;
  fincat::Function k;
};

/// (A, a: TA → A).
struct TAlgebra {
  fincat::Set carrier;
  fincat::Function action;
};

/// One triangle of a sketch: a split mono c → d and φ: d → X.
struct SketchCell {
  SplitMono mono;
  fincat::Function phi;
};

struct Sketch {
  fincat::Set X;
  std::vector<SketchCell> cells;
};

bool is_split_mono(const fincat::FinSetCategory& c, const FinMonad& T, const SplitMono& m);
bool is_t_algebra(const fincat::FinSetCategory& c, const FinMonad& T, const TAlgebra& A);

/// h̄ = a·Th·k; throws Error when (j,k) is not T-split.
fincat::Function sketch_canonical_lift(const fincat::FinSetCategory& c, const FinMonad& T, const SplitMono& m,
                                       const TAlgebra& A, const fincat::Function& h);

/// f: X → A with f·φ_i = a·T(f·φ_i·j_i)·k_i for every cell.
bool model_by_squares(const fincat::FinSetCategory& c, const FinMonad& T, const Sketch& s, const TAlgebra& A,
                      const fincat::Function& f);
/// f: X → A such that each composite triangle (f·ψ_i, f·φ_i) is the canonical
/// lifting triangle of f·ψ_i along j_i, with ψ_i = φ_i·j_i.
bool model_by_lifting_triangles(const fincat::FinSetCategory& c, const FinMonad& T, const Sketch& s,
                                const TAlgebra& A, const fincat::Function& f);

/// Every T-split mono c → d with c, d drawn from `objects`.
std::vector<SplitMono> all_split_monos(const fincat::FinSetCategory& c, const FinMonad& T,
                                       const std::vector<fincat::Set>& objects);
/// Every T-algebra structure on each carrier.
std::vector<TAlgebra> all_t_algebras(const fincat::FinSetCategory& c, const FinMonad& T,
                                     const std::vector<fincat::Set>& carriers);

}  // namespace wm::awfs
