#pragma once

// Separating-element construction by recursive kernel/image splitting.
//
// Both procedures share one shape: fix a nonzero v in V, find a linear map
// on V that kills v but not all of V, split V into Ker and Im, recurse.
//   mod_separate  uses phi_x(w) = w x v - v x w with x scanned over basis
//                 words; returns one element per leaf (a covering list).
//   diff_separate uses psi_{v;i}(w) = w D_i(v) - v D_i(w) with D_i scanned
//                 over the declared derivations; returns the product of the
//                 two recursive elements (kernel factor first).
// Every split satisfies dim Ker + dim Im = dim V with both parts nonzero,
// and v lies in the kernel part.

#include <memory>
#include <optional>
#include <vector>

#include "sepforge/algebra.hpp"
#include "sepforge/subspace.hpp"

namespace sepforge {

// A linear map from V into a degree truncation of the algebra: column j is
// the image of V's j-th canonical basis vector in codomain coordinates.
struct SubspaceMap {
  Matrix matrix;
  WordCoordinates codomain;
};

// w -> w x v - v x w on V's basis. Codomain truncation degree is
// deg V + deg x + deg v.
SubspaceMap phi_map(const AlgebraElement& x, const AlgebraElement& v,
                    const Subspace& V);

// w -> w D(v) - v D(w) on V's basis. Codomain truncation degree is
// deg V + max deg D(x_j) + deg v.
SubspaceMap psi_map(const Derivation& D, const AlgebraElement& v,
                    const Subspace& V);

enum class SeparationMode { DiffProduct, ModList };

struct TraceNode {
  Subspace space;
  // Leaf: the canonical separating element of this 1-dimensional space.
  std::optional<AlgebraElement> element;
  // Internal: the chosen v and the splitting witness.
  std::optional<AlgebraElement> v;
  std::optional<AlgebraElement> x_witness;      // mod splits
  int derivation_index = -1;                    // diff splits
  std::optional<AlgebraElement> w_witness;      // diff splits
  std::shared_ptr<const TraceNode> kernel_child;
  std::shared_ptr<const TraceNode> image_child;

  explicit TraceNode(Subspace s) : space(std::move(s)) {}
  bool is_leaf() const { return element.has_value(); }
};

struct SeparationResult {
  SeparationMode mode;
  std::vector<AlgebraElement> elements;  // DiffProduct: exactly one
  std::shared_ptr<const TraceNode> trace;
};

// Product-form separator for differential ideals of a polynomial algebra:
// the result's single element lies in every ideal that is closed under all
// of Ds and meets V nontrivially. Throws NoSplittingFound when no (i, w)
// splits some recursion node, EmptySubspace on V = 0.
SeparationResult diff_separate(const AlgebraRef& alg,
                               const std::vector<Derivation>& Ds,
                               const Subspace& V);

// List-form separator for two-sided ideals: every ideal meeting V
// nontrivially contains some element of the returned list (length <= dim V).
// Candidates x run over the first `budget` basis words; throws
// SearchBudgetExhausted when none of them splits a recursion node.
SeparationResult mod_separate(const AlgebraRef& alg, const Subspace& V,
                              long budget);

struct StabilizeStep {
  int d;
  SeparationResult result;  // run on the filtration L_d
};

// diff_separate over the nested filtrations L_1 ... L_{d_max}.
std::vector<StabilizeStep> diff_stabilize(const AlgebraRef& alg,
                                          const std::vector<Derivation>& Ds,
                                          int d_max);

// Cumulative products b_i = a_1 ... a_i, so b_{i+1} is a multiple of b_i.
// Commutative algebras only; all inputs must be nonzero.
std::vector<AlgebraElement> chain(const std::vector<AlgebraElement>& elements);

}  // namespace sepforge
