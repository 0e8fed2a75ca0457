#include "comalg/algebra.hpp"

#include <map>

namespace comalg {

std::string Report::joined() const {
  std::string s;
  for (const auto& issue : issues) {
    if (!s.empty()) s += "; ";
    s += issue;
  }
  return s;
}

namespace {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.emplace_back(k, v[k]);
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t dim) {
  Vec out(dim, Rational(0));
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

}  // namespace

Algebra::Algebra(std::string name, std::size_t dim, Vec unit)
    : name_(std::move(name)), dim_(dim), unit_(std::move(unit)), table_(dim * dim) {
  if (unit_.size() != dim_) throw Error("algebra " + name_ + ": unit length != dim");
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vec& value) {
  if (value.size() != dim_) throw Error("set_product: length mismatch");
  table_.at(i * dim_ + j) = to_sparse(value);
}

void Algebra::set_product_sparse(std::size_t i, std::size_t j, SparseVec value) {
  table_.at(i * dim_ + j) = std::move(value);
}

Vec Algebra::product_vec(std::size_t i, std::size_t j) const {
  return to_dense(product(i, j), dim_);
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("multiply: length mismatch");
  Vec out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational coeff = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k] += coeff * c;
    }
  }
  return out;
}

Matrix Algebra::left_mult_matrix(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j)) m.at(k, j) += x[i] * c;
  }
  return m;
}

Matrix Algebra::right_mult_matrix(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& [k, c] : product(i, j)) m.at(k, i) += x[j] * c;
  }
  return m;
}

Matrix Algebra::basis_left_mult(std::size_t i) const { return left_mult_matrix(unit_vec(dim_, i)); }
Matrix Algebra::basis_right_mult(std::size_t i) const { return right_mult_matrix(unit_vec(dim_, i)); }

Report validate_algebra(const Algebra& a) {
  Report report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (e_i e_j) e_k vs e_i (e_j e_k)
      const Vec ij = a.product_vec(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = a.multiply(ij, unit_vec(n, k));
        const Vec rhs = a.multiply(unit_vec(n, i), a.product_vec(j, k));
        if (lhs != rhs)
          report.add("associativity fails at (i,j,k)=(" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Vec basis = unit_vec(n, j);
    if (a.multiply(a.unit(), basis) != basis)
      report.add("left unit law fails at basis " + std::to_string(j));
    if (a.multiply(basis, a.unit()) != basis)
      report.add("right unit law fails at basis " + std::to_string(j));
  }
  return report;
}

Algebra opposite(const Algebra& a) {
  Algebra op(a.name() + "_op", a.dim(), a.unit());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) op.set_product_sparse(i, j, a.product(j, i));
  return op;
}

bool is_commutative(const Algebra& a) { return !noncommutative_witness(a).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> noncommutative_witness(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.product_vec(i, j) != a.product_vec(j, i)) return std::make_pair(i, j);
  return std::nullopt;
}

Subalgebra center(const Algebra& a) { return commutant(a, Subspace::full(a.dim())); }

Subalgebra commutant(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw Error("commutant: ambient mismatch");
  // x commutes with v  <=>  (R_v - L_v) x = 0; stack over the basis of s.
  Matrix stacked(0, a.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec v = s.basis_vector(i);
    stacked = Matrix::vstack(stacked, a.right_mult_matrix(v) - a.left_mult_matrix(v));
  }
  return Subalgebra{a, kernel(stacked)};
}

Subalgebra generated_subalgebra(const Algebra& a, const std::vector<Subspace>& parts) {
  std::vector<Vec> seed{a.unit()};
  for (const auto& part : parts) {
    if (part.ambient_dim() != a.dim()) throw Error("generated_subalgebra: ambient mismatch");
    for (std::size_t i = 0; i < part.dim(); ++i) seed.push_back(part.basis_vector(i));
  }
  Subspace span = Subspace::from_rows(a.dim(), seed);
  for (;;) {
    std::vector<Vec> products;
    for (std::size_t i = 0; i < span.dim(); ++i)
      for (std::size_t j = 0; j < span.dim(); ++j)
        products.push_back(a.multiply(span.basis_vector(i), span.basis_vector(j)));
    Subspace next = subspace_join(span, Subspace::from_rows(a.dim(), products));
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }
  return Subalgebra{a, span};
}

Algebra tensor_algebras(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  Vec unit(na * nb, Rational(0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  Algebra t(a.name() + "*" + b.name(), na * nb, unit);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t l = 0; l < nb; ++l) {
          SparseVec row;
          for (const auto& [p, ca] : a.product(i, k))
            for (const auto& [q, cb] : b.product(j, l)) row.emplace_back(p * nb + q, ca * cb);
          t.set_product_sparse(i * nb + j, k * nb + l, std::move(row));
        }
  return t;
}

std::pair<Algebra, QuotientSpace> tensor_over_central(const Algebra& a, const Algebra& b,
                                                      const Algebra& c, const AlgebraMorphism& ja,
                                                      const AlgebraMorphism& jb) {
  if (!is_commutative(c)) throw Error("tensor_over_central: base algebra is not commutative");
  if (ja.target != a || jb.target != b)
    throw Error("tensor_over_central: morphism targets do not match the factors");
  // With c commutative, c and its opposite coincide, so either spelling of
  // the source is accepted.
  if (!(ja.source == c) || !(jb.source == c))
    throw Error("tensor_over_central: morphism sources do not match the base");
  const Subspace za = center(a).space;
  const Subspace zb = center(b).space;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    if (!za.contains(ja.apply(unit_vec(c.dim(), k))))
      throw Error("tensor_over_central: left image not central at basis " + std::to_string(k));
    if (!zb.contains(jb.apply(unit_vec(c.dim(), k))))
      throw Error("tensor_over_central: right image not central at basis " + std::to_string(k));
  }

  const std::size_t na = a.dim(), nb = b.dim(), dim = na * nb;
  std::vector<Vec> relation_rows;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Matrix right_by_ja = a.right_mult_matrix(ja.apply(unit_vec(c.dim(), k)));
    const Matrix left_by_jb = b.left_mult_matrix(jb.apply(unit_vec(c.dim(), k)));
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y) {
        Vec rel(dim, Rational(0));
        for (std::size_t p = 0; p < na; ++p) rel[p * nb + y] += right_by_ja.at(p, x);
        for (std::size_t q = 0; q < nb; ++q) rel[x * nb + q] -= left_by_jb.at(q, y);
        if (!vec_is_zero(rel)) relation_rows.push_back(std::move(rel));
      }
  }
  const QuotientSpace q = quotient(dim, Subspace::from_rows(dim, relation_rows));

  const Algebra full = tensor_algebras(a, b);
  // The relation span must be a two-sided ideal for multiplication to
  // descend; verified on the basis.
  for (std::size_t i = 0; i < q.relations.dim(); ++i) {
    const Vec rel = q.relations.basis_vector(i);
    for (std::size_t t = 0; t < dim; ++t) {
      if (!vec_is_zero(q.project(full.multiply(rel, unit_vec(dim, t)))) ||
          !vec_is_zero(q.project(full.multiply(unit_vec(dim, t), rel))))
        throw Error("tensor_over_central: relations do not form an ideal (internal error)");
    }
  }

  Algebra out(a.name() + "*_" + c.name() + "*" + b.name(), q.quotient_dim,
              q.project(full.unit()));
  for (std::size_t i = 0; i < q.quotient_dim; ++i)
    for (std::size_t j = 0; j < q.quotient_dim; ++j) {
      const Vec prod = q.project(full.multiply(q.lift(unit_vec(q.quotient_dim, i)),
                                               q.lift(unit_vec(q.quotient_dim, j))));
      out.set_product(i, j, prod);
    }
  return {std::move(out), q};
}

Algebra endomorphism_algebra(std::size_t n) {
  // Basis: matrix units E_pq, row-major; E_pq E_rs = delta_qr E_ps.
  Vec unit(n * n, Rational(0));
  for (std::size_t p = 0; p < n; ++p) unit[p * n + p] = 1;
  Algebra e("End" + std::to_string(n), n * n, unit);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          if (q != r) continue;
          e.set_product_sparse(p * n + q, r * n + s, {{p * n + s, Rational(1)}});
        }
  return e;
}

AlgebraMorphism conjugate_endomorphisms(const Matrix& f) {
  if (f.rows() != f.cols()) throw Error("conjugate_endomorphisms: matrix must be square");
  const auto inv = f.inverse();
  if (!inv) throw Error("conjugate_endomorphisms: matrix is singular");
  const Algebra e = endomorphism_algebra(f.rows());
  // Row-major vec(f X f^-1) = (f kron (f^-1)^T) vec(X).
  return AlgebraMorphism{e, e, f.kron(inv->transpose())};
}

Report check_morphism(const AlgebraMorphism& m) {
  Report report;
  if (m.matrix.rows() != m.target.dim() || m.matrix.cols() != m.source.dim()) {
    report.add("matrix shape mismatch");
    return report;
  }
  if (m.apply(m.source.unit()) != m.target.unit()) report.add("unit not preserved");
  for (std::size_t i = 0; i < m.source.dim(); ++i)
    for (std::size_t j = 0; j < m.source.dim(); ++j) {
      const Vec lhs = m.apply(m.source.product_vec(i, j));
      const Vec rhs = m.target.multiply(m.matrix.col(i), m.matrix.col(j));
      if (lhs != rhs)
        report.add("multiplicativity fails at basis pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
    }
  return report;
}

AlgebraMorphism compose_morphisms(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (f.target != g.source) throw Error("compose_morphisms: domain mismatch");
  return AlgebraMorphism{f.source, g.target, g.matrix * f.matrix};
}

AlgebraMorphism identity_morphism(const Algebra& a) {
  return AlgebraMorphism{a, a, Matrix::identity(a.dim())};
}

bool image_in_subspace(const AlgebraMorphism& m, const Subspace& s) {
  for (std::size_t i = 0; i < m.source.dim(); ++i)
    if (!s.contains(m.matrix.col(i))) return false;
  return true;
}

Algebra scalar_algebra() {
  Algebra k("K", 1, Vec{Rational(1)});
  k.set_product_sparse(0, 0, {{0, Rational(1)}});
  return k;
}

Algebra group_algebra_z2() {
  Algebra z("Z2", 2, Vec{Rational(1), Rational(0)});
  z.set_product_sparse(0, 0, {{0, Rational(1)}});
  z.set_product_sparse(0, 1, {{1, Rational(1)}});
  z.set_product_sparse(1, 0, {{1, Rational(1)}});
  z.set_product_sparse(1, 1, {{0, Rational(1)}});
  return z;
}

Algebra dual_number_algebra() {
  Algebra d("Dual", 2, Vec{Rational(1), Rational(0)});
  d.set_product_sparse(0, 0, {{0, Rational(1)}});
  d.set_product_sparse(0, 1, {{1, Rational(1)}});
  d.set_product_sparse(1, 0, {{1, Rational(1)}});
  // x * x = 0
  return d;
}

Algebra upper_triangular_algebra2() {
  // Basis {E11, E12, E22}.
  Algebra u("Upper2", 3, Vec{Rational(1), Rational(0), Rational(1)});
  u.set_product_sparse(0, 0, {{0, Rational(1)}});
  u.set_product_sparse(0, 1, {{1, Rational(1)}});
  u.set_product_sparse(1, 2, {{1, Rational(1)}});
  u.set_product_sparse(2, 2, {{2, Rational(1)}});
  return u;
}

}  // namespace comalg
