#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "comalg/bimodule.hpp"
#include "test_util.hpp"

using namespace comalg;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const Algebra K = scalar_algebra();
const Algebra Z2 = group_algebra_z2();
const Algebra M2 = endomorphism_algebra(2);

Bimodule free_pair(const Algebra& d, const Algebra& e) { return free_pair_bimodule(d, e); }

BimoduleMorphism random_endo_intertwiner(const Bimodule& m, testutil::Rng& rng) {
  const Subspace space = intertwiner_space(m, m);
  Vec flat(m.dim() * m.dim(), Rational(0));
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const Rational c = rng.small_rational();
    if (c == 0) continue;
    const Vec basis = space.basis_vector(i);
    for (std::size_t k = 0; k < flat.size(); ++k) flat[k] += c * basis[k];
  }
  return BimoduleMorphism{m, m, Matrix::from_flat(m.dim(), m.dim(), flat)};
}

}  // namespace

TEST_CASE("regular bimodules") {
  const Bimodule rk = regular_bimodule(K);
  CHECK(rk.dim() == 1);
  CHECK(rk.left_basis_action(0).is_identity());
  CHECK(rk.right_basis_action(0).is_identity());
  CHECK(validate_bimodule(rk).ok());

  CHECK(validate_bimodule(regular_bimodule(M2)).ok());

  const Bimodule rz = regular_bimodule(Z2);
  Matrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(rz.left_basis_action(1) == swap);
  CHECK(validate_bimodule(rz).ok());
}

TEST_CASE("validate_bimodule reports constructed failures") {
  // Left action with L(unit) != id.
  std::vector<Matrix> left{Matrix(1, 1)};
  std::vector<Matrix> right{Matrix::identity(1)};
  const Bimodule bad(K, K, 1, left, right);
  const Report r = validate_bimodule(bad);
  CHECK(!r.ok());

  // Actions that fail to commute.
  std::vector<Matrix> l2, r2;
  for (std::size_t i = 0; i < 4; ++i) l2.push_back(M2.basis_left_mult(i));
  for (std::size_t j = 0; j < 4; ++j) r2.push_back(M2.basis_left_mult(j));  // wrong side
  const Bimodule bad2(M2, opposite(M2), 4, l2, r2);
  const Report r2rep = validate_bimodule(bad2);
  bool commute_issue = false;
  for (const auto& issue : r2rep.issues)
    if (issue.find("commute") != std::string::npos) commute_issue = true;
  CHECK(commute_issue);
}

TEST_CASE("tensor_over basic dimensions") {
  // Over K the tensor is plain: dims multiply.
  const Bimodule a = free_pair(M2, K);
  const Bimodule b = free_pair(K, Z2);
  auto [t, qt] = tensor_over(a, b);
  CHECK(t.dim() == a.dim() * b.dim());
  CHECK(validate_bimodule(t).ok());
  CHECK(qt.relations.dim() == 0);

  // regular(Z2) (x)_{Z2} regular(Z2) collapses to dim 2.
  auto [z, qz] = tensor_over(regular_bimodule(Z2), regular_bimodule(Z2));
  CHECK(z.dim() == 2);
  CHECK(validate_bimodule(z).ok());
  CHECK(qz.relations.dim() == 2);

  CHECK_THROWS_AS(tensor_over(free_pair(K, M2), free_pair(Z2, K)), Error);
}

TEST_CASE("dimension formula for balanced tensors") {
  const Bimodule m = regular_bimodule(M2);
  auto [t, qt] = tensor_over(m, m);
  CHECK(t.dim() == m.dim() * m.dim() - qt.relations.dim());
  CHECK(validate_bimodule(t).ok());
}

TEST_CASE("left and right unitors") {
  // On regular(K) the unitor is the identity.
  const BimoduleMorphism lk = left_unitor(regular_bimodule(K));
  CHECK(lk.matrix.is_identity());

  const Bimodule rm2 = regular_bimodule(M2);
  const BimoduleMorphism l = left_unitor(rm2);
  CHECK(is_intertwiner(l));
  const BimoduleMorphism linv = invert_morphism(l);
  CHECK((linv.matrix * l.matrix).is_identity());

  const BimoduleMorphism r = right_unitor(rm2);
  CHECK(is_intertwiner(r));
  CHECK((invert_morphism(r).matrix * r.matrix).is_identity());
}

TEST_CASE("unitor naturality") {
  testutil::Rng rng(5);
  const Bimodule m = free_pair(Z2, M2);
  for (int trial = 0; trial < 10; ++trial) {
    const BimoduleMorphism phi = random_endo_intertwiner(m, rng);
    REQUIRE(is_intertwiner(phi));
    const BimoduleMorphism l = left_unitor(m);
    const BimoduleMorphism lifted =
        tensor_morphisms_over(identity_bimodule_morphism(regular_bimodule(m.left_alg())), phi);
    CHECK(lifted.matrix * l.matrix == l.matrix * phi.matrix);
    const BimoduleMorphism r = right_unitor(m);
    const BimoduleMorphism lifted_r =
        tensor_morphisms_over(phi, identity_bimodule_morphism(regular_bimodule(m.right_alg())));
    CHECK(lifted_r.matrix * r.matrix == r.matrix * phi.matrix);
  }
}

TEST_CASE("tensor_morphisms_over") {
  const Bimodule m = regular_bimodule(Z2);
  const BimoduleMorphism id_t =
      tensor_morphisms_over(identity_bimodule_morphism(m), identity_bimodule_morphism(m));
  CHECK(id_t.matrix.is_identity());

  // 0 (x) psi = 0.
  const BimoduleMorphism zero{m, m, Matrix(2, 2)};
  const BimoduleMorphism z = tensor_morphisms_over(zero, identity_bimodule_morphism(m));
  CHECK(z.matrix.is_zero());

  // Interchange with composition on random instances.
  testutil::Rng rng(17);
  const Bimodule h = free_pair(Z2, Z2);
  for (int trial = 0; trial < 10; ++trial) {
    const BimoduleMorphism f1 = random_endo_intertwiner(h, rng);
    const BimoduleMorphism f2 = random_endo_intertwiner(h, rng);
    const BimoduleMorphism g1 = random_endo_intertwiner(h, rng);
    const BimoduleMorphism g2 = random_endo_intertwiner(h, rng);
    const Matrix lhs = tensor_morphisms_over(compose_morphisms(f2, f1), compose_morphisms(g2, g1)).matrix;
    const Matrix rhs =
        (tensor_morphisms_over(f2, g2).matrix * tensor_morphisms_over(f1, g1).matrix);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("compose_morphisms") {
  const Bimodule m = regular_bimodule(M2);
  const BimoduleMorphism id = identity_bimodule_morphism(m);
  testutil::Rng rng(3);
  const BimoduleMorphism phi = random_endo_intertwiner(m, rng);
  CHECK(compose_morphisms(phi, id).matrix == phi.matrix);
  CHECK(compose_morphisms(id, phi).matrix == phi.matrix);
  const BimoduleMorphism psi = random_endo_intertwiner(m, rng);
  const BimoduleMorphism chi = random_endo_intertwiner(m, rng);
  CHECK(compose_morphisms(compose_morphisms(chi, psi), phi).matrix ==
        compose_morphisms(chi, compose_morphisms(psi, phi)).matrix);
}

TEST_CASE("is_intertwiner") {
  const Bimodule rm2 = regular_bimodule(M2);
  CHECK(is_intertwiner(identity_bimodule_morphism(rm2)));

  // Left multiplication by a central element is an intertwiner.
  const BimoduleMorphism central{rm2, rm2, M2.left_mult_matrix(M2.unit())};
  CHECK(is_intertwiner(central));

  // Left multiplication by E11 is not: it fails right commutation.
  const BimoduleMorphism e11{rm2, rm2, M2.left_mult_matrix(Vec{q(1), q(0), q(0), q(0)})};
  CHECK(!is_intertwiner(e11));
}

TEST_CASE("associator") {
  // All middle algebras K: identity under the lexicographic convention.
  const Bimodule u = free_pair(Z2, K);
  const Bimodule v = free_pair(K, K);
  const Bimodule w = free_pair(K, M2);
  const BimoduleMorphism a0 = associator(u, v, w);
  CHECK(a0.matrix.is_identity());

  // Regular Z/2 chain: invertible 2x2.
  const Bimodule rz = regular_bimodule(Z2);
  const BimoduleMorphism a = associator(rz, rz, rz);
  CHECK(a.matrix.rows() == 2);
  CHECK(is_intertwiner(a));
  const BimoduleMorphism ainv = invert_morphism(a);
  CHECK((a.matrix * ainv.matrix).is_identity());
  CHECK(is_intertwiner(ainv));
}

TEST_CASE("associator naturality") {
  testutil::Rng rng(29);
  const Bimodule m = regular_bimodule(Z2);
  const Bimodule n = free_pair(Z2, Z2);
  for (int trial = 0; trial < 8; ++trial) {
    const BimoduleMorphism f = random_endo_intertwiner(m, rng);
    const BimoduleMorphism g = random_endo_intertwiner(n, rng);
    const BimoduleMorphism h = random_endo_intertwiner(m, rng);
    const BimoduleMorphism a = associator(m, n, m);
    const Matrix lhs = a.matrix * tensor_morphisms_over(tensor_morphisms_over(f, g), h).matrix;
    const Matrix rhs = tensor_morphisms_over(f, tensor_morphisms_over(g, h)).matrix * a.matrix;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("intertwiner_space spans only intertwiners") {
  const Bimodule m = free_pair(Z2, M2);
  const Subspace space = intertwiner_space(m, m);
  CHECK(space.dim() >= 1);  // contains the identity
  Vec id_flat = Matrix::identity(m.dim()).flat();
  CHECK(space.contains(id_flat));
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const BimoduleMorphism phi{m, m, Matrix::from_flat(m.dim(), m.dim(), space.basis_vector(i))};
    CHECK(is_intertwiner(phi));
  }
}

TEST_CASE("zero-dimensional bimodules degrade gracefully") {
  const Bimodule zero(K, K, 0, {Matrix(0, 0)}, {Matrix(0, 0)});
  CHECK(validate_bimodule(zero).ok());
  auto [t, qt] = tensor_over(zero, regular_bimodule(K));
  CHECK(t.dim() == 0);
}
