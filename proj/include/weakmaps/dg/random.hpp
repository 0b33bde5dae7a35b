#pragma once

#include <random>

#include "weakmaps/dg/complex.hpp"

namespace wm::dg {

using Rng = std::mt19937_64;

/// Integer in [-2, 2].
Rational random_small(Rng& rng);
/// Random invertible n × n matrix with small entries.
Matrix random_invertible(Rng& rng, std::size_t n);
/// Degree-preserving invertible map X → X' where X' is X with the boundary
/// conjugated; returns (X', P).
std::pair<ComplexPtr, GradedMap> random_conjugate(Rng& rng, const ComplexPtr& X);

/// Sum of blocks Q[k] and Q[k]→Q[k-1] over degrees lo..hi, total dimension at
/// most max_dim (at least 1), conjugated by a random degree-wise basis change.
ComplexPtr random_complex(Rng& rng, int lo, int hi, std::size_t max_dim);
/// Random matrix respecting the degree pattern; zero or not.
GradedMap random_map(Rng& rng, const ComplexPtr& src, const ComplexPtr& tgt, int degree);

/// Contractible complex made of n copies of Q[k]→Q[k-1] at random k in
/// lo..hi, with its contraction h (∂h + h∂ = 1, hh = 0).
std::pair<ComplexPtr, GradedMap> random_contractible(Rng& rng, int lo, int hi, std::size_t pairs);

/// A lali A → B with A = B ⊕ C for a random contractible C:
/// g the projection, q = (1, φ) for a random chain map φ = ∂χ, and
/// ξ(b, c) = (0, h(c − φb)).
HomologicalLali random_lali(Rng& rng, const ComplexPtr& B, int lo, int hi);

/// Direct sum X ⊕ Y with the basis re-sorted by degree, plus the inclusions
/// and projections.
struct DirectSum {
  ComplexPtr complex;
  GradedMap in1, in2, pr1, pr2;
};
DirectSum direct_sum(const ComplexPtr& X, const ComplexPtr& Y);

}  // namespace wm::dg
