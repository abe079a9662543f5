#pragma once

// Exact dense linear algebra over a FieldSpec: canonical reduced row echelon
// bases, kernels, images, intersections, and span membership. Deterministic
// pivoting (first nonzero entry in column order), so equal subspaces always
// produce identical bases.

#include <optional>
#include <utility>
#include <vector>

#include "sepforge/field.hpp"

namespace sepforge {

class Matrix {
 public:
  Matrix(const FieldSpec& spec, int rows, int cols);
  static Matrix identity(const FieldSpec& spec, int n);
  static Matrix from_rows(const FieldSpec& spec,
                          const std::vector<std::vector<FieldElement>>& rows);

  const FieldSpec& spec() const { return spec_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const FieldElement& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }
  Matrix transpose() const;
  bool is_zero() const;

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

 private:
  FieldSpec spec_;
  int rows_, cols_;
  std::vector<FieldElement> e_;
};

// Canonical RREF basis of a coordinate subspace: rows are nonzero, each
// pivot is 1, pivot columns strictly increase, and pivot columns are zero
// in every other row. Equal subspaces compare equal componentwise.
struct EchelonBasis {
  FieldSpec spec;
  int ambient_dim = 0;
  std::vector<std::vector<FieldElement>> vectors;
  std::vector<int> pivot_columns;

  EchelonBasis() : spec(FieldSpec::rationals()) {}
  EchelonBasis(const FieldSpec& s, int ambient) : spec(s), ambient_dim(ambient) {}

  int dimension() const { return static_cast<int>(vectors.size()); }
  bool is_zero() const { return vectors.empty(); }

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.spec == b.spec && a.ambient_dim == b.ambient_dim &&
           a.vectors == b.vectors && a.pivot_columns == b.pivot_columns;
  }
};

// Row space of m in canonical RREF, plus its rank.
std::pair<EchelonBasis, int> rref(const Matrix& m);

// Canonical basis of {v : m v = 0}.
EchelonBasis kernel(const Matrix& m);

// Canonical basis of the column space of m.
EchelonBasis image(const Matrix& m);

// Canonical basis of the sum a + b.
EchelonBasis sum_space(const EchelonBasis& a, const EchelonBasis& b);

// Canonical basis of a ∩ b.
EchelonBasis intersect(const EchelonBasis& a, const EchelonBasis& b);

// Coordinates of target in b's basis if target lies in span(b).
std::optional<std::vector<FieldElement>> solve_in_span(
    const EchelonBasis& b, const std::vector<FieldElement>& target);

}  // namespace sepforge
