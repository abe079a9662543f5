#include "sepforge/separator.hpp"

#include <algorithm>

#include "sepforge/errors.hpp"

namespace sepforge {

namespace {

std::string subspace_brief(const Subspace& V) {
  std::string s = "dim " + std::to_string(V.dimension()) + " span{";
  auto elems = V.basis_elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ", ";
    s += elems[i].str();
  }
  return s + "}";
}

SubspaceMap map_on_subspace(const Subspace& V, int codomain_degree,
                            const std::vector<AlgebraElement>& images) {
  WordCoordinates codomain(V.algebra(), codomain_degree);
  Matrix m(V.algebra()->field(), codomain.dim(), V.dimension());
  for (int j = 0; j < V.dimension(); ++j) {
    std::vector<FieldElement> col = codomain.vector_of(images[j]);
    for (int i = 0; i < codomain.dim(); ++i) m.at(i, j) = col[i];
  }
  return SubspaceMap{std::move(m), std::move(codomain)};
}

// Index of the canonical basis vector whose leading word is smallest in
// the graded word order.
int select_v(const Subspace& V) {
  int best = 0;
  WordLess less;
  for (int i = 1; i < V.dimension(); ++i)
    if (less(V.leading_word(i), V.leading_word(best))) best = i;
  return best;
}

Subspace kernel_part(const SubspaceMap& map, const Subspace& V) {
  EchelonBasis null = kernel(map.matrix);
  std::vector<AlgebraElement> basis = V.basis_elements();
  std::vector<AlgebraElement> gens;
  for (const auto& sol : null.vectors) {
    AlgebraElement g(V.algebra());
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!sol[j].is_zero()) g = g + sol[j] * basis[j];
    gens.push_back(std::move(g));
  }
  return Subspace::span(V.algebra(), gens);
}

Subspace image_part(const SubspaceMap& map, const Subspace& V) {
  EchelonBasis im = image(map.matrix);
  std::vector<AlgebraElement> gens;
  for (const auto& vec : im.vectors)
    gens.push_back(map.codomain.element_of(vec));
  return Subspace::span(V.algebra(), gens);
}

}  // namespace

SubspaceMap phi_map(const AlgebraElement& x, const AlgebraElement& v,
                    const Subspace& V) {
  require_same_algebra(x.algebra(), V.algebra());
  require_same_algebra(v.algebra(), V.algebra());
  if (v.is_zero() || !V.contains(v))
    throw VNotInSubspace("phi requires a nonzero v inside V");
  int trunc = std::max(0, V.max_element_degree()) + std::max(0, x.degree()) +
              std::max(0, v.degree());
  std::vector<AlgebraElement> images;
  for (const auto& w : V.basis_elements())
    images.push_back(multiply(multiply(w, x), v) - multiply(multiply(v, x), w));
  return map_on_subspace(V, trunc, images);
}

SubspaceMap psi_map(const Derivation& D, const AlgebraElement& v,
                    const Subspace& V) {
  require_same_algebra(D.algebra(), V.algebra());
  require_same_algebra(v.algebra(), V.algebra());
  if (v.is_zero() || !V.contains(v))
    throw VNotInSubspace("psi requires a nonzero v inside V");
  int img_deg = 0;
  for (const auto& img : D.images())
    img_deg = std::max(img_deg, img.degree());
  int trunc = std::max(0, V.max_element_degree()) + img_deg +
              std::max(0, v.degree());
  AlgebraElement dv = apply_derivation(D, v);
  std::vector<AlgebraElement> images;
  for (const auto& w : V.basis_elements())
    images.push_back(multiply(w, dv) - multiply(v, apply_derivation(D, w)));
  return map_on_subspace(V, trunc, images);
}

namespace {

std::shared_ptr<const TraceNode> diff_node(const AlgebraRef& alg,
                                           const std::vector<Derivation>& Ds,
                                           const Subspace& V) {
  if (V.is_zero()) throw EmptySubspace("cannot separate the zero subspace");
  auto node = std::make_shared<TraceNode>(V);
  if (V.dimension() == 1) {
    node->element = V.basis_elements()[0];
    return node;
  }
  AlgebraElement v = V.basis_elements()[select_v(V)];
  node->v = v;
  for (std::size_t i = 0; i < Ds.size(); ++i) {
    SubspaceMap map = psi_map(Ds[i], v, V);
    if (map.matrix.is_zero()) continue;
    // Record the first basis w with a nonzero image as the witness.
    auto basis = V.basis_elements();
    for (int j = 0; j < V.dimension(); ++j) {
      bool nonzero = false;
      for (int r = 0; r < map.matrix.rows(); ++r)
        if (!map.matrix.at(r, j).is_zero()) {
          nonzero = true;
          break;
        }
      if (nonzero) {
        node->derivation_index = static_cast<int>(i);
        node->w_witness = basis[j];
        break;
      }
    }
    node->kernel_child = diff_node(alg, Ds, kernel_part(map, V));
    node->image_child = diff_node(alg, Ds, image_part(map, V));
    return node;
  }
  throw NoSplittingFound(subspace_brief(V));
}

AlgebraElement diff_element(const TraceNode& node) {
  if (node.is_leaf()) return *node.element;
  return multiply(diff_element(*node.kernel_child),
                  diff_element(*node.image_child));
}

}  // namespace

SeparationResult diff_separate(const AlgebraRef& alg,
                               const std::vector<Derivation>& Ds,
                               const Subspace& V) {
  if (Ds.empty()) throw SpecMismatch("diff separation needs at least one derivation");
  if (!alg->is_commutative())
    throw SpecMismatch("diff separation is defined on polynomial algebras");
  for (const auto& D : Ds) require_same_algebra(D.algebra(), alg);
  require_same_algebra(V.algebra(), alg);
  auto trace = diff_node(alg, Ds, V);
  SeparationResult res;
  res.mode = SeparationMode::DiffProduct;
  res.elements = {diff_element(*trace)};
  res.trace = std::move(trace);
  return res;
}

namespace {

std::shared_ptr<const TraceNode> mod_node(const AlgebraRef& alg,
                                          const Subspace& V,
                                          const std::vector<AlgebraElement>& candidates) {
  if (V.is_zero()) throw EmptySubspace("cannot separate the zero subspace");
  auto node = std::make_shared<TraceNode>(V);
  if (V.dimension() == 1) {
    node->element = V.basis_elements()[0];
    return node;
  }
  AlgebraElement v = V.basis_elements()[select_v(V)];
  node->v = v;
  for (const auto& x : candidates) {
    SubspaceMap map = phi_map(x, v, V);
    if (map.matrix.is_zero()) continue;
    node->x_witness = x;
    node->kernel_child = mod_node(alg, kernel_part(map, V), candidates);
    node->image_child = mod_node(alg, image_part(map, V), candidates);
    return node;
  }
  throw SearchBudgetExhausted(static_cast<int>(candidates.size()),
                              subspace_brief(V));
}

void collect_leaves(const TraceNode& node, std::vector<AlgebraElement>& out) {
  if (node.is_leaf()) {
    out.push_back(*node.element);
    return;
  }
  collect_leaves(*node.kernel_child, out);
  collect_leaves(*node.image_child, out);
}

}  // namespace

SeparationResult mod_separate(const AlgebraRef& alg, const Subspace& V,
                              long budget) {
  if (budget < 1) throw SpecMismatch("search budget must be at least 1");
  require_same_algebra(V.algebra(), alg);
  std::vector<AlgebraElement> candidates = enumerate_basis(alg, budget);
  auto trace = mod_node(alg, V, candidates);
  SeparationResult res;
  res.mode = SeparationMode::ModList;
  collect_leaves(*trace, res.elements);
  res.trace = std::move(trace);
  return res;
}

std::vector<StabilizeStep> diff_stabilize(const AlgebraRef& alg,
                                          const std::vector<Derivation>& Ds,
                                          int d_max) {
  if (d_max < 1) throw SpecMismatch("exhaustion depth must be at least 1");
  std::vector<StabilizeStep> out;
  for (int d = 1; d <= d_max; ++d) {
    Subspace L = degree_filtration(alg, d);
    out.push_back(StabilizeStep{d, diff_separate(alg, Ds, L)});
  }
  return out;
}

std::vector<AlgebraElement> chain(const std::vector<AlgebraElement>& elements) {
  if (elements.empty()) return {};
  const AlgebraRef& alg = elements[0].algebra();
  if (!alg->is_commutative())
    throw NonCommutativeAlgebra(
        "cumulative-product chains are only provided for commutative algebras");
  std::vector<AlgebraElement> out;
  out.reserve(elements.size());
  AlgebraElement acc = AlgebraElement::one(alg);
  for (const auto& a : elements) {
    require_same_algebra(a.algebra(), alg);
    if (a.is_zero()) throw ZeroElement("chain input contains a zero element");
    acc = multiply(acc, a);
    out.push_back(acc);
  }
  return out;
}

}  // namespace sepforge
