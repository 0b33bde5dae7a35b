#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "weakmaps/awfs/algebra.hpp"
#include "weakmaps/fincat/comonad.hpp"
#include "weakmaps/fincat/finset.hpp"

namespace wm::spans {

using awfs::FinAlgebra;
using awfs::FinAwfs;
using fincat::FinSetCategory;
using fincat::Function;
using fincat::Set;

/// Kl(Q) for the cofibrant replacement Q of a (P-)split-epi AWFS on FinSet.
class WeakMapCategory {
 public:
  using Object = Set;
  using Arrow = fincat::KleisliArrow<FinSetCategory>;

  WeakMapCategory(FinSetCategory c, FinAwfs A);

  [[nodiscard]] const FinSetCategory& base() const { return kl_.base(); }
  [[nodiscard]] const FinAwfs& awfs() const { return A_; }
  [[nodiscard]] const fincat::ComonadData<FinSetCategory>& Q() const { return kl_.comonad(); }
  [[nodiscard]] const fincat::CoKleisli<FinSetCategory>& kleisli() const { return kl_; }

  [[nodiscard]] std::vector<Arrow> hom(const Set& a, const Set& b) const { return kl_.hom(a, b); }
  [[nodiscard]] Arrow compose(const Arrow& g, const Arrow& f) const { return kl_.compose(g, f); }
  [[nodiscard]] Arrow identity(const Set& a) const { return kl_.identity(a); }
  [[nodiscard]] Set dom(const Arrow& f) const { return f.dom; }
  [[nodiscard]] Set cod(const Arrow& f) const { return f.arrow.cod; }
  [[nodiscard]] bool equal(const Arrow& f, const Arrow& g) const { return kl_.equal(f, g); }
  [[nodiscard]] bool same_object(const Set& a, const Set& b) const { return a == b; }
  [[nodiscard]] std::string show(const Arrow& f) const { return kl_.show(f); }
  [[nodiscard]] std::string show_object(const Set& a) const { return a.str(); }

  /// f ↦ f·ε.
  [[nodiscard]] Arrow cofree(const Function& f) const { return kl_.cofree(f); }
  /// φ_𝕗: QB → A, the canonical filler against the free coalgebra on !_B.
  [[nodiscard]] Function phi(const FinAlgebra& alg) const { return awfs::phi(kl_.base(), A_, alg); }

 private:
  FinAwfs A_;
  fincat::CoKleisli<FinSetCategory> kl_;
};

WeakMapCategory weak_maps_kleisli(const FinSetCategory& c, const FinAwfs& A);

/// A span A ← X → B whose left leg carries an algebra structure.
struct ASpan {
  FinAlgebra left;
  Function right;

  [[nodiscard]] const Set& apex() const { return left.g.dom; }
  [[nodiscard]] std::string str() const;
};

/// r: X → Y is a span map s → t: b·r = a, g·r = f and r·σ_a = σ_b.
bool is_span_map(const FinSetCategory& c, const ASpan& s, const ASpan& t, const Function& r);
/// Every span map s → t.
std::vector<Function> span_maps(const FinSetCategory& c, const ASpan& s, const ASpan& t);
std::optional<Function> find_span_map(const FinSetCategory& c, const ASpan& s, const ASpan& t);
/// A bijective span map s → t, if any.
std::optional<Function> find_span_iso(const FinSetCategory& c, const ASpan& s, const ASpan& t);

/// The identity span (𝟙_A, 1_A).
ASpan identity_span(const WeakMapCategory& W, const Set& a);
/// Pullback of the inner legs, the cartesian lift of the second left leg and
/// vertical composition with the first.
ASpan span_compose(const WeakMapCategory& W, const ASpan& s1, const ASpan& s2);

/// (fr !_A, f) with apex QA.
ASpan kleisli_to_span(const WeakMapCategory& W, const Set& a, const Function& f);
/// g·φ_𝕒 for the span (𝕒, g).
Function span_to_kleisli(const WeakMapCategory& W, const ASpan& s);

/// Isomorphism-invariant description of a span A → B over a fixed P: the
/// partition of PA by σ (blocks numbered by first occurrence), the right leg
/// on each block, and the sorted (left, right) values of apex points outside
/// the image of σ.
struct SpanShape {
  std::vector<std::uint32_t> block_of;
  std::vector<std::uint32_t> block_value;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> extras;

  friend bool operator==(const SpanShape&, const SpanShape&) = default;
  friend auto operator<=>(const SpanShape&, const SpanShape&) = default;
};

SpanShape span_shape(const WeakMapCategory& W, const ASpan& s);
/// The canonical span with the given shape; apex labels are b<i> for blocks
/// and x<i> for the remaining points.
ASpan span_from_shape(const WeakMapCategory& W, const Set& a, const Set& b, const SpanShape& shape);
/// Relabels the apex canonically.
ASpan normalize(const WeakMapCategory& W, const ASpan& s);

/// One representative per isomorphism class of spans A → B with apex size at
/// most `max_apex`, in a deterministic order.
std::vector<ASpan> enumerate_spans(const WeakMapCategory& W, const Set& a, const Set& b, std::size_t max_apex);

struct Bounds {
  std::size_t max_apex = 0;  ///< 0 means |QA| + 2
  std::size_t zigzag = 4;
};

struct ZigzagStep {
  ASpan from;
  ASpan to;
  Function map;
  bool forward = true;  ///< map goes from the previous span to the next one
};

struct Equivalent {
  std::vector<ZigzagStep> witness;
};
struct NotFoundWithinBounds {
  std::size_t max_apex = 0;
  std::size_t zigzag = 0;
  std::size_t explored = 0;
};
using EquivResult = std::variant<Equivalent, NotFoundWithinBounds>;

/// Searches, in order: identical normal forms, a direct span map either way,
/// a common span mapping to both or a common span both map to, and a
/// breadth-first zigzag through the bounded span representatives.
EquivResult span_equiv(const WeakMapCategory& W, const ASpan& s1, const ASpan& s2, Bounds bounds = {});

/// Per-hom comparison of C(QA, B) with bounded span classes:
///   compare.roundtrip   span_to_kleisli ∘ kleisli_to_span = 1
///   compare.invariance  span_to_kleisli constant along every span map
///                       between representatives of apex ≤ min(bound, 4)
///   compare.reach       every bounded span connects to the canonical span
///                       of its image
///   compare.class_count bounded span class count = |C(QA, B)|
/// plus a `hom` row with the counts.
Report compare_hom(const WeakMapCategory& W, const Set& a, const Set& b, Bounds bounds = {});

}  // namespace wm::spans
