#pragma once

// Finite-dimensional coordinate subspaces of an algebra's degree truncation.
// Coordinates are the normal-form words of degree <= d, ordered by degree
// descending and lexicographically ascending within a degree, so the pivot
// of a canonical basis vector sits on its leading word.

#include <optional>
#include <vector>

#include "sepforge/algebra.hpp"
#include "sepforge/linalg.hpp"

namespace sepforge {

class WordCoordinates {
 public:
  WordCoordinates(AlgebraRef alg, int degree_bound);

  const AlgebraRef& algebra() const { return alg_; }
  int degree_bound() const { return degree_; }
  int dim() const { return static_cast<int>(words_.size()); }
  const Word& word_at(int i) const { return words_[i]; }
  std::optional<int> index_of(const Word& w) const;

  // Coordinate vector of an element; DegreeBoundExceeded if a term's word
  // falls outside the truncation.
  std::vector<FieldElement> vector_of(const AlgebraElement& a) const;
  AlgebraElement element_of(const std::vector<FieldElement>& v) const;

 private:
  AlgebraRef alg_;
  int degree_;
  std::vector<Word> words_;
  std::map<Word, int, WordLess> index_;
};

class Subspace {
 public:
  // Span of the given elements inside the degree-d truncation; d defaults
  // to the largest element degree. The stored basis is canonical RREF.
  static Subspace span(const AlgebraRef& alg,
                       const std::vector<AlgebraElement>& gens,
                       int degree_bound = -1);
  static Subspace zero_space(const AlgebraRef& alg, int degree_bound);

  const AlgebraRef& algebra() const { return coords_.algebra(); }
  const WordCoordinates& coords() const { return coords_; }
  const EchelonBasis& basis() const { return basis_; }
  int degree_bound() const { return coords_.degree_bound(); }
  int dimension() const { return basis_.dimension(); }
  bool is_zero() const { return basis_.is_zero(); }

  // Canonical basis as elements; leading coefficients are 1.
  std::vector<AlgebraElement> basis_elements() const;
  // Leading word of the i-th canonical basis vector.
  const Word& leading_word(int i) const;
  // Largest degree appearing in the basis; -1 for the zero subspace.
  int max_element_degree() const;

  bool contains(const AlgebraElement& a) const;
  // Coordinates of a in the canonical basis, if a lies in the subspace.
  std::optional<std::vector<FieldElement>> coordinates_of(
      const AlgebraElement& a) const;

  // The same subspace embedded in a larger truncation.
  Subspace extended_to(int degree_bound) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend Subspace degree_filtration(const AlgebraRef& alg, int d);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

 private:
  Subspace(WordCoordinates coords, EchelonBasis basis)
      : coords_(std::move(coords)), basis_(std::move(basis)) {}

  WordCoordinates coords_;
  EchelonBasis basis_;
};

// L_d: the span of all normal-form words of degree <= d.
Subspace degree_filtration(const AlgebraRef& alg, int d);

// Intersection inside a common truncation; AlgebraMismatch if the algebras
// differ.
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace sepforge
