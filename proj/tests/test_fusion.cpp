#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "comalg/fusion.hpp"
#include "test_util.hpp"

using namespace comalg;

namespace {

const Algebra K = scalar_algebra();
const Algebra Z2 = group_algebra_z2();
const Algebra Dual = dual_number_algebra();
const Algebra M2 = endomorphism_algebra(2);
const Algebra Upper = upper_triangular_algebra2();

AlgebraMorphism unit_map(const Algebra& target) {
  Matrix m(target.dim(), 1);
  for (std::size_t i = 0; i < target.dim(); ++i) m.at(i, 0) = target.unit()[i];
  return AlgebraMorphism{K, target, std::move(m)};
}

FusionInput over_k(const Algebra& a, const Algebra& b) {
  return FusionInput{a, b, K, unit_map(a), unit_map(b)};
}

}  // namespace

TEST_CASE("balanced_carrier dimensions") {
  // Over K the carrier is the whole tensor product.
  CHECK(balanced_carrier(over_k(Z2, Dual)).quotient_dim == 4);
  CHECK(balanced_carrier(over_k(M2, M2)).quotient_dim == 16);

  // Z/2 over itself collapses 4 -> 2.
  FusionInput z{Z2, Z2, Z2, identity_morphism(Z2), identity_morphism(Z2)};
  CHECK(balanced_carrier(z).quotient_dim == 2);
}

TEST_CASE("balanced_carrier is monotone in the relation data") {
  // Adding relations (a larger acting image) cannot raise the dimension.
  FusionInput trivial = over_k(Z2, Z2);
  FusionInput full{Z2, Z2, Z2, identity_morphism(Z2), identity_morphism(Z2)};
  CHECK(balanced_carrier(full).quotient_dim <= balanced_carrier(trivial).quotient_dim);
}

TEST_CASE("fusion_algebra over K with M2 factors") {
  const FusionResult r = fusion_algebra(over_k(M2, M2));
  CHECK(r.carrier.quotient_dim == 16);
  CHECK(r.commutant_in_a.space.dim() == 4);  // commutant of the scalars
  CHECK(r.commutant_in_b.space.dim() == 4);
  CHECK(r.fused.space.dim() == 16);
  CHECK(r.end_algebra.dim() == 256);
}

TEST_CASE("fusion_algebra trivial and group cases") {
  const FusionResult trivial = fusion_algebra(over_k(K, K));
  CHECK(trivial.fused.space.dim() == 1);

  FusionInput z{Z2, Z2, Z2, identity_morphism(Z2), identity_morphism(Z2)};
  const FusionResult r = fusion_algebra(z);
  CHECK(r.carrier.quotient_dim == 2);
  CHECK(r.fused.space.dim() == 2);
}

TEST_CASE("left and right representations commute elementwise") {
  for (const auto& in : {over_k(M2, Upper), over_k(Z2, M2),
                         FusionInput{Z2, Z2, Z2, identity_morphism(Z2), identity_morphism(Z2)}}) {
    const FusionResult r = fusion_algebra(in);
    const std::size_t n = r.carrier.quotient_dim;
    for (std::size_t i = 0; i < r.commutant_in_a.space.dim(); ++i)
      for (std::size_t j = 0; j < r.commutant_in_b.space.dim(); ++j) {
        const Matrix a = Matrix::from_flat(n, n, r.left_rep.col(i));
        const Matrix b = Matrix::from_flat(n, n, r.right_rep.col(j));
        CHECK(a * b == b * a);
      }
  }
}

TEST_CASE("rho fixes the class of 1 (x) 1") {
  // rho_xi(1 (x) 1) = xi for every basis class xi of the quotient.
  const AlgebraMorphism rho = rho_iso(Z2, Z2, Z2, identity_morphism(Z2), identity_morphism(Z2));
  const std::size_t n = rho.source.dim();
  const Vec unit_class = rho.source.unit();
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix action = Matrix::from_flat(n, n, rho.matrix.col(i));
    CHECK(action.apply(unit_class) == unit_vec(n, i));
  }
}

TEST_CASE("rho over K on K is the identity") {
  const AlgebraMorphism rho = rho_iso(K, K, K, unit_map(K), unit_map(K));
  CHECK(rho.matrix.is_identity());
}

TEST_CASE("rho injective onto a dim-2 subalgebra for the Z/2 case") {
  const AlgebraMorphism rho = rho_iso(Z2, Z2, Z2, identity_morphism(Z2), identity_morphism(Z2));
  CHECK(rho.source.dim() == 2);
  CHECK(rho.matrix.rank() == 2);
  // Cross-check through the generic morphism validator.
  CHECK(check_morphism(rho).ok());
}

TEST_CASE("verify_fusion_theorem on the named catalog instances") {
  SUBCASE("(M2, K, M2)") {
    const FusionReport r = verify_fusion_theorem(M2, K, M2, unit_map(M2), unit_map(M2));
    CHECK(r.ok());
    CHECK(r.carrier_dim == 16);
    CHECK(r.tensor_dim == 16);
    CHECK(r.fused_dim == 16);
  }
  SUBCASE("(Z2, Z2, Z2)") {
    const FusionReport r =
        verify_fusion_theorem(Z2, Z2, Z2, identity_morphism(Z2), identity_morphism(Z2));
    CHECK(r.ok());
    CHECK(r.carrier_dim == 2);
    CHECK(r.fused_dim == 2);
  }
  SUBCASE("(K, K, K)") {
    const FusionReport r = verify_fusion_theorem(K, K, K, unit_map(K), unit_map(K));
    CHECK(r.ok());
    CHECK(r.fused_dim == 1);
  }
  SUBCASE("(Dual, K, Upper)") {
    const FusionReport r = verify_fusion_theorem(Dual, K, Upper, unit_map(Dual), unit_map(Upper));
    CHECK(r.ok());
    CHECK(r.carrier_dim == 6);
  }
}

TEST_CASE("fusion theorem over K for catalog pairs") {
  for (const Algebra& d : {K, Z2, Dual, M2, Upper})
    for (const Algebra& e : {K, Z2, Dual, M2, Upper}) {
      CAPTURE(d.name());
      CAPTURE(e.name());
      const FusionReport r = verify_fusion_theorem(d, K, e, unit_map(d), unit_map(e));
      CHECK(r.ok());
      CHECK(r.tensor_dim == d.dim() * e.dim());
      CHECK(r.fused_dim == r.tensor_dim);
    }
}

TEST_CASE("fusion rejects a noncommutative base") {
  CHECK_THROWS_AS(verify_fusion_theorem(M2, M2, M2, identity_morphism(M2), identity_morphism(M2)),
                  Error);
}

TEST_CASE("matrix_algebra_closure") {
  // E12 and E21 generate all of M2 inside End(K^2).
  Matrix e12(2, 2), e21(2, 2);
  e12.at(0, 1) = 1;
  e21.at(1, 0) = 1;
  const Subspace seeds = Subspace::from_rows(4, {e12.flat(), e21.flat()});
  CHECK(matrix_algebra_closure(2, seeds).dim() == 4);
  // The empty seed closes to the scalars.
  CHECK(matrix_algebra_closure(2, Subspace(4)).dim() == 1);
}
