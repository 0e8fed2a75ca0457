#include "comalg/linalg.hpp"

#include <stdexcept>

namespace comalg {

Subspace Subspace::from_rows(std::size_t ambient_dim, const std::vector<Vec>& rows) {
  return from_matrix_rows(Matrix::from_rows(rows, ambient_dim));
}

Subspace Subspace::from_matrix_rows(const Matrix& rows) {
  auto [r, pivots] = rows.rref();
  Subspace s;
  s.ambient_dim_ = rows.cols();
  s.pivots_ = pivots;
  Matrix basis(pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.at(i, j);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return from_matrix_rows(Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("coordinates: ambient mismatch");
  Vec residual = v;
  Vec coords(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational c = residual[pivots_[i]];
    if (c == 0) continue;
    coords[i] = c;
    for (std::size_t j = 0; j < ambient_dim_; ++j) residual[j] -= c * basis_.at(i, j);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coords;
}

Subspace subspace_join(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_join: ambient mismatch");
  return Subspace::from_matrix_rows(Matrix::vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_intersect: ambient mismatch");
  // Zassenhaus-style: solve x A = y B by taking the kernel of [A^T | -B^T];
  // the common value x A spans the intersection.
  const Matrix stacked = Matrix::hstack(a.basis().transpose(), b.basis().transpose().scaled(-1));
  const Subspace ker = kernel(stacked);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    const Vec xy = ker.basis_vector(i);
    Vec v(a.ambient_dim(), Rational(0));
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t j = 0; j < a.ambient_dim(); ++j) v[j] += xy[r] * a.basis().at(r, j);
    rows.push_back(std::move(v));
  }
  return Subspace::from_rows(a.ambient_dim(), rows);
}

Subspace kernel(const Matrix& m) {
  auto [r, pivots] = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
    rows.push_back(std::move(v));
  }
  return Subspace::from_rows(m.cols(), rows);
}

Subspace row_space(const Matrix& m) { return Subspace::from_matrix_rows(m); }

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim)
    throw std::invalid_argument("quotient: ambient mismatch");
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.relations = relations;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  q.quotient_dim = free_cols.size();

  // Reduce modulo the relations (v -> v - sum_i v[p_i] * basisrow_i), then
  // keep the free coordinates.
  Matrix selector(q.quotient_dim, ambient_dim);
  for (std::size_t k = 0; k < free_cols.size(); ++k) selector.at(k, free_cols[k]) = 1;
  // The reduction is (I - E) with E[j][p_i] = basisrow_i[j].
  Matrix embed_relations(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < relations.dim(); ++i) {
    const std::size_t p = relations.pivots()[i];
    for (std::size_t j = 0; j < ambient_dim; ++j)
      embed_relations.at(j, p) = relations.basis().at(i, j);
  }
  q.projection = selector * (Matrix::identity(ambient_dim) - embed_relations);

  Matrix section(ambient_dim, q.quotient_dim);
  for (std::size_t k = 0; k < free_cols.size(); ++k) section.at(free_cols[k], k) = 1;
  q.section = std::move(section);
  return q;
}

bool descends(const Matrix& op, const QuotientSpace& src, const QuotientSpace& tgt) {
  for (std::size_t i = 0; i < src.relations.dim(); ++i) {
    const Vec image = op.apply(src.relations.basis_vector(i));
    if (!vec_is_zero(tgt.projection.apply(image))) return false;
  }
  return true;
}

Matrix induced_map(const Matrix& op, const QuotientSpace& src, const QuotientSpace& tgt) {
  return tgt.projection * op * src.section;
}

}  // namespace comalg
