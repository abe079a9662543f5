#include "sepforge/linalg.hpp"

#include "sepforge/errors.hpp"

namespace sepforge {

Matrix::Matrix(const FieldSpec& spec, int rows, int cols)
    : spec_(spec), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw SpecMismatch("negative matrix dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, FieldElement::zero(spec));
}

Matrix Matrix::identity(const FieldSpec& spec, int n) {
  Matrix m(spec, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(spec);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& spec,
                         const std::vector<std::vector<FieldElement>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(spec, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw SpecMismatch("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(spec_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw AmbientMismatch("vector length does not match matrix columns");
  std::vector<FieldElement> out(rows_, FieldElement::zero(spec_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero())
        out[i] = out[i] + at(i, j) * v[j];
  return out;
}

std::pair<EchelonBasis, int> rref(const Matrix& m) {
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<FieldElement> r;
    r.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
    rows.push_back(std::move(r));
  }
  int nrows = m.rows(), ncols = m.cols();
  int r = 0;
  std::vector<int> pivots;
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int sel = -1;
    for (int i = r; i < nrows; ++i)
      if (!rows[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    FieldElement inv = rows[r][col].inverse();
    for (int j = col; j < ncols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] = rows[r][j] * inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      FieldElement f = rows[i][col];
      for (int j = col; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  EchelonBasis basis(m.spec(), ncols);
  basis.pivot_columns = pivots;
  for (int i = 0; i < r; ++i) basis.vectors.push_back(std::move(rows[i]));
  return {std::move(basis), r};
}

EchelonBasis kernel(const Matrix& m) {
  auto [basis, rank] = rref(m);
  int ncols = m.cols();
  std::vector<bool> is_pivot(ncols, false);
  for (int p : basis.pivot_columns) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> gens;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> v(ncols, FieldElement::zero(m.spec()));
    v[f] = FieldElement::one(m.spec());
    for (int i = 0; i < rank; ++i)
      v[basis.pivot_columns[i]] = -basis.vectors[i][f];
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return EchelonBasis(m.spec(), ncols);
  return rref(Matrix::from_rows(m.spec(), gens)).first;
}

EchelonBasis image(const Matrix& m) { return rref(m.transpose()).first; }

EchelonBasis sum_space(const EchelonBasis& a, const EchelonBasis& b) {
  if (!(a.spec == b.spec) || a.ambient_dim != b.ambient_dim)
    throw AmbientMismatch("subspaces live in different ambient spaces");
  std::vector<std::vector<FieldElement>> rows = a.vectors;
  rows.insert(rows.end(), b.vectors.begin(), b.vectors.end());
  if (rows.empty()) return EchelonBasis(a.spec, a.ambient_dim);
  return rref(Matrix::from_rows(a.spec, rows)).first;
}

EchelonBasis intersect(const EchelonBasis& a, const EchelonBasis& b) {
  if (!(a.spec == b.spec) || a.ambient_dim != b.ambient_dim)
    throw AmbientMismatch("subspaces live in different ambient spaces");
  int ka = a.dimension(), kb = b.dimension();
  if (ka == 0 || kb == 0) return EchelonBasis(a.spec, a.ambient_dim);
  // Solve sum alpha_i a_i - sum beta_j b_j = 0; each solution's alpha part
  // spans the intersection.
  Matrix m(a.spec, a.ambient_dim, ka + kb);
  for (int j = 0; j < ka; ++j)
    for (int i = 0; i < a.ambient_dim; ++i) m.at(i, j) = a.vectors[j][i];
  for (int j = 0; j < kb; ++j)
    for (int i = 0; i < a.ambient_dim; ++i) m.at(i, ka + j) = -b.vectors[j][i];
  EchelonBasis null = kernel(m);
  std::vector<std::vector<FieldElement>> gens;
  for (const auto& sol : null.vectors) {
    std::vector<FieldElement> v(a.ambient_dim, FieldElement::zero(a.spec));
    for (int j = 0; j < ka; ++j)
      if (!sol[j].is_zero())
        for (int i = 0; i < a.ambient_dim; ++i)
          v[i] = v[i] + sol[j] * a.vectors[j][i];
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return EchelonBasis(a.spec, a.ambient_dim);
  return rref(Matrix::from_rows(a.spec, gens)).first;
}

std::optional<std::vector<FieldElement>> solve_in_span(
    const EchelonBasis& b, const std::vector<FieldElement>& target) {
  if (static_cast<int>(target.size()) != b.ambient_dim)
    throw AmbientMismatch("target length does not match ambient dimension");
  std::vector<FieldElement> rem = target;
  std::vector<FieldElement> coords;
  coords.reserve(b.vectors.size());
  for (std::size_t i = 0; i < b.vectors.size(); ++i) {
    FieldElement c = rem[b.pivot_columns[i]];
    coords.push_back(c);
    if (!c.is_zero())
      for (int j = 0; j < b.ambient_dim; ++j)
        if (!b.vectors[i][j].is_zero()) rem[j] = rem[j] - c * b.vectors[i][j];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

}  // namespace sepforge
