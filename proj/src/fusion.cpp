#include "comalg/fusion.hpp"

namespace comalg {

std::string FusionReport::summary() const {
  std::string s = "carrier-dim=" + std::to_string(carrier_dim) +
                  " tensor-dim=" + std::to_string(tensor_dim) +
                  " fused-dim=" + std::to_string(fused_dim);
  s += std::string(" image-equals-fused=") + (image_equals_fused ? "yes" : "no");
  s += std::string(" rho-injective=") + (injective ? "yes" : "no");
  s += std::string(" rho-morphism=") + (morphism_ok ? "yes" : "no");
  return s;
}

Subspace morphism_image(const AlgebraMorphism& m) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < m.matrix.cols(); ++i) cols.push_back(m.matrix.col(i));
  return Subspace::from_rows(m.matrix.rows(), cols);
}

namespace {

void check_input(const FusionInput& in) {
  if (!check_morphism(in.j_a).ok()) throw Error("fusion: j_a is not an algebra morphism");
  if (!check_morphism(in.j_b).ok()) throw Error("fusion: j_b is not an algebra morphism");
  if (!(in.j_a.source == opposite(in.c)))
    throw Error("fusion: j_a must start from the opposite of c");
  if (!(in.j_b.source == in.c)) throw Error("fusion: j_b must start from c");
  if (!(in.j_a.target == in.a) || !(in.j_b.target == in.b))
    throw Error("fusion: morphism targets do not match a and b");
}

}  // namespace

QuotientSpace balanced_carrier(const FusionInput& in) {
  check_input(in);
  std::vector<Matrix> rho, lambda;
  for (std::size_t k = 0; k < in.c.dim(); ++k) {
    const Vec ck = unit_vec(in.c.dim(), k);
    rho.push_back(in.a.right_mult_matrix(in.j_a.apply(ck)));
    lambda.push_back(in.b.left_mult_matrix(in.j_b.apply(ck)));
  }
  return quotient(in.a.dim() * in.b.dim(),
                  balancing_relations(in.a.dim(), in.b.dim(), rho, lambda));
}

Subspace matrix_algebra_closure(std::size_t n, const Subspace& seeds) {
  if (seeds.ambient_dim() != n * n) throw Error("matrix_algebra_closure: ambient mismatch");
  Subspace span = subspace_join(
      seeds, Subspace::from_rows(n * n, {Matrix::identity(n).flat()}));
  for (;;) {
    std::vector<Vec> products;
    for (std::size_t i = 0; i < span.dim(); ++i) {
      const Matrix mi = Matrix::from_flat(n, n, span.basis_vector(i));
      for (std::size_t j = 0; j < span.dim(); ++j) {
        const Matrix mj = Matrix::from_flat(n, n, span.basis_vector(j));
        products.push_back((mi * mj).flat());
      }
    }
    Subspace next = subspace_join(span, Subspace::from_rows(n * n, products));
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }
  return span;
}

FusionResult fusion_algebra(const FusionInput& in) {
  FusionResult out;
  out.carrier = balanced_carrier(in);
  const std::size_t q = out.carrier.quotient_dim;
  out.end_algebra = endomorphism_algebra(q);

  out.commutant_in_a = commutant(in.a, morphism_image(in.j_a));
  out.commutant_in_b = commutant(in.b, morphism_image(in.j_b));

  const Matrix id_a = Matrix::identity(in.a.dim());
  const Matrix id_b = Matrix::identity(in.b.dim());
  std::vector<Vec> seeds;
  Matrix left_rep(q * q, out.commutant_in_a.space.dim());
  for (std::size_t i = 0; i < out.commutant_in_a.space.dim(); ++i) {
    const Vec x = out.commutant_in_a.space.basis_vector(i);
    const Matrix op = in.a.left_mult_matrix(x).kron(id_b);
    if (!descends(op, out.carrier, out.carrier))
      throw Error("fusion: left-slot action fails to descend at commutant basis " +
                  std::to_string(i));
    const Vec flat = induced_map(op, out.carrier, out.carrier).flat();
    for (std::size_t r = 0; r < flat.size(); ++r) left_rep.at(r, i) = flat[r];
    seeds.push_back(flat);
  }
  Matrix right_rep(q * q, out.commutant_in_b.space.dim());
  for (std::size_t j = 0; j < out.commutant_in_b.space.dim(); ++j) {
    const Vec y = out.commutant_in_b.space.basis_vector(j);
    const Matrix op = id_a.kron(in.b.left_mult_matrix(y));
    if (!descends(op, out.carrier, out.carrier))
      throw Error("fusion: right-slot action fails to descend at commutant basis " +
                  std::to_string(j));
    const Vec flat = induced_map(op, out.carrier, out.carrier).flat();
    for (std::size_t r = 0; r < flat.size(); ++r) right_rep.at(r, j) = flat[r];
    seeds.push_back(flat);
  }
  out.left_rep = std::move(left_rep);
  out.right_rep = std::move(right_rep);
  out.fused = Subalgebra{out.end_algebra,
                         matrix_algebra_closure(q, Subspace::from_rows(q * q, seeds))};
  return out;
}

namespace {

// Left-regular representation of d (x)_b e on the balanced carrier; the flag
// records whether it is multiplicative and unital.
struct RhoData {
  AlgebraMorphism rho;
  bool multiplicative_unital = false;
};

RhoData build_rho(const Algebra& d, const Algebra& b, const Algebra& e,
                  const AlgebraMorphism& iota_d, const AlgebraMorphism& iota_e) {
  auto [tensor, carrier] = tensor_over_central(d, e, b, iota_d, iota_e);
  const std::size_t q = carrier.quotient_dim;
  Matrix rho(q * q, q);
  for (std::size_t i = 0; i < q; ++i) {
    const Vec flat = tensor.basis_left_mult(i).flat();
    for (std::size_t r = 0; r < flat.size(); ++r) rho.at(r, i) = flat[r];
  }
  RhoData out{AlgebraMorphism{std::move(tensor), endomorphism_algebra(q), std::move(rho)}, true};

  // rho(x y) = rho(x) rho(y) and rho(1) = id, checked in the matrix picture.
  auto as_matrix = [&](const Vec& x) {
    Vec flat(q * q, Rational(0));
    for (std::size_t i = 0; i < q; ++i) {
      if (x[i] == 0) continue;
      const Vec column = out.rho.matrix.col(i);
      for (std::size_t r = 0; r < flat.size(); ++r) flat[r] += x[i] * column[r];
    }
    return Matrix::from_flat(q, q, flat);
  };
  if (!as_matrix(out.rho.source.unit()).is_identity()) out.multiplicative_unital = false;
  for (std::size_t i = 0; i < q && out.multiplicative_unital; ++i)
    for (std::size_t j = 0; j < q && out.multiplicative_unital; ++j) {
      const Matrix lhs = as_matrix(out.rho.source.product_vec(i, j));
      const Matrix rhs = as_matrix(unit_vec(q, i)) * as_matrix(unit_vec(q, j));
      if (lhs != rhs) out.multiplicative_unital = false;
    }
  return out;
}

}  // namespace

AlgebraMorphism rho_iso(const Algebra& d, const Algebra& b, const Algebra& e,
                        const AlgebraMorphism& iota_d, const AlgebraMorphism& iota_e) {
  RhoData data = build_rho(d, b, e, iota_d, iota_e);
  if (!data.multiplicative_unital)
    throw Error("rho_iso: left multiplication is not an algebra morphism (internal error)");
  return std::move(data.rho);
}

FusionReport verify_fusion_theorem(const Algebra& d, const Algebra& b, const Algebra& e,
                                   const AlgebraMorphism& iota_d, const AlgebraMorphism& iota_e) {
  if (!is_commutative(b)) throw Error("verify_fusion_theorem: base algebra must be commutative");
  // With b commutative, opposite(b) equals b, so iota_d doubles as the map
  // from the opposite required by the general fusion.
  FusionInput in{d, e, b, AlgebraMorphism{opposite(b), d, iota_d.matrix},
                 AlgebraMorphism{b, e, iota_e.matrix}};
  const FusionResult fusion = fusion_algebra(in);
  const RhoData data = build_rho(d, b, e, iota_d, iota_e);

  FusionReport report;
  report.carrier_dim = fusion.carrier.quotient_dim;
  report.tensor_dim = data.rho.source.dim();
  report.fused_dim = fusion.fused.space.dim();
  report.image_equals_fused = (morphism_image(data.rho) == fusion.fused.space);
  report.injective = (data.rho.matrix.rank() == data.rho.source.dim());
  report.morphism_ok = data.multiplicative_unital;
  return report;
}

}  // namespace comalg
