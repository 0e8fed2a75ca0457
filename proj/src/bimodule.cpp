#include "comalg/bimodule.hpp"

namespace comalg {

Bimodule::Bimodule(Algebra left_alg, Algebra right_alg, std::size_t dim,
                   std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : left_alg_(std::move(left_alg)),
      right_alg_(std::move(right_alg)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (left_action_.size() != left_alg_.dim() || right_action_.size() != right_alg_.dim())
    throw Error("bimodule: one action matrix per algebra basis vector required");
  for (const auto& mat : left_action_)
    if (mat.rows() != dim_ || mat.cols() != dim_) throw Error("bimodule: left action shape");
  for (const auto& mat : right_action_)
    if (mat.rows() != dim_ || mat.cols() != dim_) throw Error("bimodule: right action shape");
}

Matrix Bimodule::left_op(const Vec& d) const {
  if (d.size() != left_alg_.dim()) throw Error("left_op: length mismatch");
  Matrix out(dim_, dim_);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) out = out + left_action_[i].scaled(d[i]);
  return out;
}

Matrix Bimodule::right_op(const Vec& e) const {
  if (e.size() != right_alg_.dim()) throw Error("right_op: length mismatch");
  Matrix out(dim_, dim_);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0) out = out + right_action_[j].scaled(e[j]);
  return out;
}

Report validate_bimodule(const Bimodule& m) {
  Report report;
  const Algebra& d = m.left_alg();
  const Algebra& e = m.right_alg();
  if (m.left_op(d.unit()) != Matrix::identity(m.dim())) report.add("left action: unit violation");
  if (m.right_op(e.unit()) != Matrix::identity(m.dim())) report.add("right action: unit violation");
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      const Matrix lhs = m.left_basis_action(i) * m.left_basis_action(j);
      if (lhs != m.left_op(d.product_vec(i, j)))
        report.add("left action: multiplicativity fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j) {
      const Matrix rhs = m.right_basis_action(j) * m.right_basis_action(i);
      if (rhs != m.right_op(e.product_vec(i, j)))
        report.add("right action: antimorphism fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j)
      if (m.left_basis_action(i) * m.right_basis_action(j) !=
          m.right_basis_action(j) * m.left_basis_action(i))
        report.add("actions fail to commute at left " + std::to_string(i) + ", right " +
                   std::to_string(j));
  return report;
}

Bimodule regular_bimodule(const Algebra& d) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    left.push_back(d.basis_left_mult(i));
    right.push_back(d.basis_right_mult(i));
  }
  return Bimodule(d, d, d.dim(), std::move(left), std::move(right));
}

Bimodule free_pair_bimodule(const Algebra& d, const Algebra& e) {
  std::vector<Matrix> left, right;
  const Matrix id_d = Matrix::identity(d.dim());
  const Matrix id_e = Matrix::identity(e.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) left.push_back(d.basis_left_mult(i).kron(id_e));
  for (std::size_t j = 0; j < e.dim(); ++j) right.push_back(id_d.kron(e.basis_right_mult(j)));
  return Bimodule(d, e, d.dim() * e.dim(), std::move(left), std::move(right));
}

Subspace balancing_relations(std::size_t dim_left, std::size_t dim_right,
                             const std::vector<Matrix>& rho, const std::vector<Matrix>& lambda) {
  const std::size_t dim = dim_left * dim_right;
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < rho.size(); ++b) {
    for (std::size_t x = 0; x < dim_left; ++x)
      for (std::size_t y = 0; y < dim_right; ++y) {
        Vec rel(dim, Rational(0));
        for (std::size_t p = 0; p < dim_left; ++p) rel[p * dim_right + y] += rho[b].at(p, x);
        for (std::size_t q = 0; q < dim_right; ++q) rel[x * dim_right + q] -= lambda[b].at(q, y);
        if (!vec_is_zero(rel)) rows.push_back(std::move(rel));
      }
  }
  return Subspace::from_rows(dim, rows);
}

std::pair<Bimodule, QuotientSpace> tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!(m.right_alg() == n.left_alg())) throw Error("tensor_over: middle algebra mismatch");
  const Algebra& mid = m.right_alg();
  std::vector<Matrix> rho, lambda;
  for (std::size_t b = 0; b < mid.dim(); ++b) {
    rho.push_back(m.right_basis_action(b));
    lambda.push_back(n.left_basis_action(b));
  }
  const QuotientSpace q =
      quotient(m.dim() * n.dim(), balancing_relations(m.dim(), n.dim(), rho, lambda));

  const Matrix id_m = Matrix::identity(m.dim());
  const Matrix id_n = Matrix::identity(n.dim());
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < m.left_alg().dim(); ++i) {
    const Matrix op = m.left_basis_action(i).kron(id_n);
    if (!descends(op, q, q)) throw Error("tensor_over: left action fails to descend");
    left.push_back(induced_map(op, q, q));
  }
  for (std::size_t j = 0; j < n.right_alg().dim(); ++j) {
    const Matrix op = id_m.kron(n.right_basis_action(j));
    if (!descends(op, q, q)) throw Error("tensor_over: right action fails to descend");
    right.push_back(induced_map(op, q, q));
  }
  Bimodule result(m.left_alg(), n.right_alg(), q.quotient_dim, std::move(left), std::move(right));
  return {std::move(result), q};
}

BimoduleMorphism tensor_morphisms_over(const BimoduleMorphism& phi, const BimoduleMorphism& psi) {
  auto [src, q_src] = tensor_over(phi.source, psi.source);
  auto [tgt, q_tgt] = tensor_over(phi.target, psi.target);
  const Matrix op = phi.matrix.kron(psi.matrix);
  if (!descends(op, q_src, q_tgt))
    throw Error("tensor_morphisms_over: relations are not mapped to relations");
  BimoduleMorphism out{std::move(src), std::move(tgt), induced_map(op, q_src, q_tgt)};
  if (!is_intertwiner(out))
    throw Error("tensor_morphisms_over: induced map is not an intertwiner");
  return out;
}

BimoduleMorphism compose_morphisms(const BimoduleMorphism& psi, const BimoduleMorphism& phi) {
  if (!(phi.target == psi.source)) throw Error("compose_morphisms: endpoint mismatch");
  return BimoduleMorphism{phi.source, psi.target, psi.matrix * phi.matrix};
}

BimoduleMorphism identity_bimodule_morphism(const Bimodule& m) {
  return BimoduleMorphism{m, m, Matrix::identity(m.dim())};
}

BimoduleMorphism invert_morphism(const BimoduleMorphism& phi) {
  const auto inv = phi.matrix.inverse();
  if (!inv) throw Error("invert_morphism: matrix is singular");
  return BimoduleMorphism{phi.target, phi.source, *inv};
}

bool is_intertwiner(const BimoduleMorphism& phi) {
  if (!(phi.source.left_alg() == phi.target.left_alg()) ||
      !(phi.source.right_alg() == phi.target.right_alg()))
    return false;
  if (phi.matrix.rows() != phi.target.dim() || phi.matrix.cols() != phi.source.dim()) return false;
  for (std::size_t i = 0; i < phi.source.left_alg().dim(); ++i)
    if (phi.matrix * phi.source.left_basis_action(i) !=
        phi.target.left_basis_action(i) * phi.matrix)
      return false;
  for (std::size_t j = 0; j < phi.source.right_alg().dim(); ++j)
    if (phi.matrix * phi.source.right_basis_action(j) !=
        phi.target.right_basis_action(j) * phi.matrix)
      return false;
  return true;
}

Matrix reassociation_matrix(std::size_t dm, std::size_t dn, std::size_t dp,
                            const QuotientSpace& q_mn, const QuotientSpace& q_mn_p,
                            const QuotientSpace& q_np, const QuotientSpace& q_m_np) {
  if (q_mn.ambient_dim != dm * dn || q_np.ambient_dim != dn * dp ||
      q_mn_p.ambient_dim != q_mn.quotient_dim * dp ||
      q_m_np.ambient_dim != dm * q_np.quotient_dim)
    throw Error("reassociation: witness quotients do not match the factor dimensions");
  const Matrix raw = q_m_np.projection * Matrix::identity(dm).kron(q_np.projection) *
                     q_mn.section.kron(Matrix::identity(dp));
  // raw: (q_mn * dp) -> target quotient; it must kill the outer relations.
  for (std::size_t i = 0; i < q_mn_p.relations.dim(); ++i)
    if (!vec_is_zero(raw.apply(q_mn_p.relations.basis_vector(i))))
      throw Error("reassociation: outer relations not killed (internal error)");
  return raw * q_mn_p.section;
}

BimoduleMorphism associator(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
  auto [mn, q_mn] = tensor_over(m, n);
  auto [mn_p, q_mn_p] = tensor_over(mn, p);
  auto [np, q_np] = tensor_over(n, p);
  auto [m_np, q_m_np] = tensor_over(m, np);
  Matrix a = reassociation_matrix(m.dim(), n.dim(), p.dim(), q_mn, q_mn_p, q_np, q_m_np);
  BimoduleMorphism out{std::move(mn_p), std::move(m_np), std::move(a)};
  if (!is_intertwiner(out)) throw Error("associator: result is not an intertwiner");
  return out;
}

BimoduleMorphism left_unitor(const Bimodule& m) {
  auto [target, q] = tensor_over(regular_bimodule(m.left_alg()), m);
  Matrix unit_col(m.left_alg().dim(), 1);
  for (std::size_t i = 0; i < m.left_alg().dim(); ++i) unit_col.at(i, 0) = m.left_alg().unit()[i];
  const Matrix map = q.projection * unit_col.kron(Matrix::identity(m.dim()));
  return BimoduleMorphism{m, std::move(target), map};
}

BimoduleMorphism right_unitor(const Bimodule& m) {
  auto [target, q] = tensor_over(m, regular_bimodule(m.right_alg()));
  Matrix unit_col(m.right_alg().dim(), 1);
  for (std::size_t j = 0; j < m.right_alg().dim(); ++j) unit_col.at(j, 0) = m.right_alg().unit()[j];
  const Matrix map = q.projection * Matrix::identity(m.dim()).kron(unit_col);
  return BimoduleMorphism{m, std::move(target), map};
}

Subspace intertwiner_space(const Bimodule& source, const Bimodule& target) {
  if (!(source.left_alg() == target.left_alg()) || !(source.right_alg() == target.right_alg()))
    throw Error("intertwiner_space: algebra pair mismatch");
  const std::size_t rows = target.dim(), cols = source.dim();
  const Matrix id_rows = Matrix::identity(rows);
  const Matrix id_cols = Matrix::identity(cols);
  // Row-major vec(M): vec(M A) = (I kron A^T) vec(M), vec(B M) = (B kron I) vec(M).
  Matrix constraints(0, rows * cols);
  auto add_constraint = [&](const Matrix& a_src, const Matrix& b_tgt) {
    constraints = Matrix::vstack(
        constraints, id_rows.kron(a_src.transpose()) - b_tgt.kron(id_cols));
  };
  for (std::size_t i = 0; i < source.left_alg().dim(); ++i)
    add_constraint(source.left_basis_action(i), target.left_basis_action(i));
  for (std::size_t j = 0; j < source.right_alg().dim(); ++j)
    add_constraint(source.right_basis_action(j), target.right_basis_action(j));
  return kernel(constraints);
}

}  // namespace comalg
