#include "sepforge/subspace.hpp"

#include <algorithm>

#include "sepforge/errors.hpp"

namespace sepforge {

WordCoordinates::WordCoordinates(AlgebraRef alg, int degree_bound)
    : alg_(std::move(alg)), degree_(degree_bound) {
  if (degree_ < 0) throw SpecMismatch("negative truncation degree");
  for (int d = degree_; d >= 0; --d)
    for (Word& w : alg_->words_of_degree(d)) words_.push_back(std::move(w));
  for (int i = 0; i < static_cast<int>(words_.size()); ++i)
    index_.emplace(words_[i], i);
}

std::optional<int> WordCoordinates::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<FieldElement> WordCoordinates::vector_of(const AlgebraElement& a) const {
  require_same_algebra(a.algebra(), alg_);
  std::vector<FieldElement> v(words_.size(), FieldElement::zero(alg_->field()));
  for (const auto& [w, c] : a.terms()) {
    auto idx = index_of(w);
    if (!idx)
      throw DegreeBoundExceeded("element does not fit in the degree truncation");
    v[*idx] = c;
  }
  return v;
}

AlgebraElement WordCoordinates::element_of(const std::vector<FieldElement>& v) const {
  if (v.size() != words_.size())
    throw AmbientMismatch("coordinate vector length mismatch");
  AlgebraElement a(alg_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) a.add_term(words_[i], v[i]);
  return a;
}

Subspace Subspace::span(const AlgebraRef& alg,
                        const std::vector<AlgebraElement>& gens,
                        int degree_bound) {
  int d = degree_bound;
  if (d < 0) {
    d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
  }
  WordCoordinates coords(alg, d);
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_algebra(g.algebra(), alg);
    rows.push_back(coords.vector_of(g));
  }
  EchelonBasis basis = rows.empty()
                           ? EchelonBasis(alg->field(), coords.dim())
                           : rref(Matrix::from_rows(alg->field(), rows)).first;
  return Subspace(std::move(coords), std::move(basis));
}

Subspace Subspace::zero_space(const AlgebraRef& alg, int degree_bound) {
  WordCoordinates coords(alg, degree_bound);
  EchelonBasis basis(alg->field(), coords.dim());
  return Subspace(std::move(coords), std::move(basis));
}

std::vector<AlgebraElement> Subspace::basis_elements() const {
  std::vector<AlgebraElement> out;
  out.reserve(basis_.vectors.size());
  for (const auto& v : basis_.vectors) out.push_back(coords_.element_of(v));
  return out;
}

const Word& Subspace::leading_word(int i) const {
  return coords_.word_at(basis_.pivot_columns[i]);
}

int Subspace::max_element_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < basis_.vectors.size(); ++i)
    d = std::max(d, static_cast<int>(leading_word(static_cast<int>(i)).size()));
  return d;
}

bool Subspace::contains(const AlgebraElement& a) const {
  return coordinates_of(a).has_value();
}

std::optional<std::vector<FieldElement>> Subspace::coordinates_of(
    const AlgebraElement& a) const {
  require_same_algebra(a.algebra(), algebra());
  if (a.degree() > coords_.degree_bound()) return std::nullopt;
  return solve_in_span(basis_, coords_.vector_of(a));
}

Subspace Subspace::extended_to(int degree_bound) const {
  if (degree_bound < coords_.degree_bound())
    throw AmbientMismatch("cannot shrink a subspace's truncation");
  if (degree_bound == coords_.degree_bound()) return *this;
  return span(algebra(), basis_elements(), degree_bound);
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (!(*a.algebra() == *b.algebra())) return false;
  int d = std::max(a.degree_bound(), b.degree_bound());
  return a.extended_to(d).basis_ == b.extended_to(d).basis_;
}

Subspace degree_filtration(const AlgebraRef& alg, int d) {
  WordCoordinates coords(alg, d);
  EchelonBasis basis(alg->field(), coords.dim());
  for (int i = 0; i < coords.dim(); ++i) {
    std::vector<FieldElement> row(coords.dim(), FieldElement::zero(alg->field()));
    row[i] = FieldElement::one(alg->field());
    basis.vectors.push_back(std::move(row));
    basis.pivot_columns.push_back(i);
  }
  return Subspace(std::move(coords), std::move(basis));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_algebra(a.algebra(), b.algebra());
  int d = std::max(a.degree_bound(), b.degree_bound());
  Subspace ax = a.extended_to(d);
  Subspace bx = b.extended_to(d);
  EchelonBasis basis = intersect(ax.basis(), bx.basis());
  WordCoordinates coords(a.algebra(), d);
  return Subspace(std::move(coords), std::move(basis));
}

}  // namespace sepforge
