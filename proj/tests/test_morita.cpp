#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "comalg/coherence.hpp"
#include "comalg/translate.hpp"
#include "test_util.hpp"

using namespace comalg;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const Algebra K = scalar_algebra();
const Algebra Z2 = group_algebra_z2();
const Algebra M2 = endomorphism_algebra(2);

Net net_k() { return make_net(K); }
Net net_z2() { return make_net(Z2); }

// Defect with trivial nets K, K and any algebra: phi is the unit map.
Defect scalar_defect(const Algebra& d) {
  Matrix phi(d.dim(), 1);
  for (std::size_t i = 0; i < d.dim(); ++i) phi.at(i, 0) = d.unit()[i];
  return make_defect(net_k(), net_k(), d, AlgebraMorphism{tensor_algebras(K, K), d, phi});
}

}  // namespace

TEST_CASE("make_net accepts commutative and rejects noncommutative algebras") {
  CHECK(make_net(Z2).algebra == Z2);
  CHECK(make_net(K).algebra == K);
  CHECK(make_net(dual_number_algebra()).algebra == dual_number_algebra());
  CHECK_THROWS_WITH_AS(make_net(M2), doctest::Contains("locality fails at basis pair"), Error);
  CHECK_THROWS_AS(make_net(upper_triangular_algebra2()), Error);
}

TEST_CASE("identity_defect") {
  const Defect idk = identity_defect(net_k());
  CHECK(idk.algebra == K);

  const Defect idz = identity_defect(net_z2());
  // mu sends e_i (x) e_j to the product: columns (e,e),(e,g),(g,e),(g,g).
  Matrix expected(2, 4);
  expected.at(0, 0) = 1;
  expected.at(1, 1) = 1;
  expected.at(1, 2) = 1;
  expected.at(0, 3) = 1;
  CHECK(idz.phi.matrix == expected);
  // phi image is the whole center of a commutative algebra.
  CHECK(morphism_image(idz.phi) == center(Z2).space);
}

TEST_CASE("make_defect accepts central and rejects noncentral images") {
  CHECK(scalar_defect(M2).algebra == M2);

  // phi: K (x) Z2 -> Z2 through the augmentation g -> 1 is fine.
  Matrix aug(2, 2);
  aug.at(0, 0) = 1;
  aug.at(0, 1) = 1;
  CHECK(make_defect(net_k(), net_z2(), Z2, AlgebraMorphism{tensor_algebras(K, Z2), Z2, aug})
            .algebra == Z2);

  // A map K (x) K -> M2 hitting E11 is rejected; E12 witnesses noncentrality.
  Matrix bad(4, 1);
  bad.at(0, 0) = 1;
  const AlgebraMorphism phi{tensor_algebras(K, K), M2, bad};
  const Report violations = defect_violations(net_k(), net_k(), M2, phi);
  CHECK(!violations.ok());
  bool central_issue = false;
  for (const auto& issue : violations.issues)
    if (issue.find("not central") != std::string::npos &&
        issue.find("defect basis 1") != std::string::npos)
      central_issue = true;
  CHECK(central_issue);
  CHECK_THROWS_AS(make_defect(net_k(), net_k(), M2, phi), Error);
}

TEST_CASE("fuse_defects dimensions") {
  // Over K dimensions multiply.
  const Defect dm2 = scalar_defect(M2);
  const DefectFusion f = fuse_defects_full(dm2, dm2);
  CHECK(f.defect.algebra.dim() == 16);
  CHECK(f.defect.left_net == net_k());

  // The Z/2 identity defect fused with itself collapses to dim 2.
  const Defect idz = identity_defect(net_z2());
  CHECK(fuse_defects(idz, idz).algebra.dim() == 2);
}

TEST_CASE("fusing with the identity defect preserves the algebra dimension") {
  const Defect idz = identity_defect(net_z2());
  InstanceGen gen(7);
  const Defect d = gen.random_defect(net_z2(), net_z2(), 4);
  const Defect fused = fuse_defects(d, identity_defect(net_z2()));
  CHECK(fused.algebra.dim() == d.algebra.dim());
  const Defect fused_left = fuse_defects(identity_defect(net_z2()), d);
  CHECK(fused_left.algebra.dim() == d.algebra.dim());
}

TEST_CASE("collapsing the identity-defect fusion is an algebra isomorphism") {
  // D (*) id_B -> D through d (x) b -> d * iota(b).
  InstanceGen gen(13);
  const Net b = net_z2();
  const Defect d = gen.random_defect(net_k(), b, 4);
  const DefectFusion fused = fuse_defects_full(d, identity_defect(b));
  const Algebra& da = d.algebra;
  const Algebra& ba = b.algebra;
  const AlgebraMorphism iota = d.right_restriction();
  Matrix collapse(da.dim(), fused.carrier.quotient_dim);
  for (std::size_t k = 0; k < fused.carrier.quotient_dim; ++k) {
    const Vec lifted = fused.carrier.lift(unit_vec(fused.carrier.quotient_dim, k));
    Vec value(da.dim(), Rational(0));
    for (std::size_t i = 0; i < da.dim(); ++i)
      for (std::size_t j = 0; j < ba.dim(); ++j) {
        const Rational& c = lifted[i * ba.dim() + j];
        if (c == 0) continue;
        value = vec_add(value,
                        vec_scale(c, da.multiply(unit_vec(da.dim(), i), iota.matrix.col(j))));
      }
    for (std::size_t r = 0; r < da.dim(); ++r) collapse.at(r, k) = value[r];
  }
  const AlgebraMorphism as_morphism{fused.defect.algebra, da, collapse};
  CHECK(check_morphism(as_morphism).ok());
  CHECK(collapse.inverse().has_value());
}

TEST_CASE("make_sector validates the equal-action constraint") {
  const Defect dz = identity_defect(net_z2());
  CHECK(identity_sector(dz).bimodule.dim() == 2);

  // Zero-dimensional bimodule is vacuously a sector.
  const Bimodule zero(Z2, Z2, 0, {Matrix(0, 0), Matrix(0, 0)}, {Matrix(0, 0), Matrix(0, 0)});
  CHECK(make_sector(dz, dz, zero).bimodule.dim() == 0);

  // Any M2-M2 bimodule over the scalar defects is accepted.
  const Defect dm2 = scalar_defect(M2);
  CHECK(make_sector(dm2, dm2, regular_bimodule(M2)).bimodule.dim() == 4);

  // Mismatched actions are rejected with a witness: take the regular Z/2
  // bimodule but pair the identity defect with the sign-twisted one.
  Matrix twisted(2, 4);
  twisted.at(0, 0) = 1;   // (e,e) -> e
  twisted.at(1, 1) = -1;  // (e,g) -> -g
  twisted.at(1, 2) = -1;  // (g,e) -> -g
  twisted.at(0, 3) = 1;   // (g,g) -> e
  const Defect sign_defect =
      make_defect(net_z2(), net_z2(), Z2, AlgebraMorphism{tensor_algebras(Z2, Z2), Z2, twisted});
  const Report violations = sector_violations(identity_defect(net_z2()), sign_defect,
                                              regular_bimodule(Z2));
  CHECK(!violations.ok());
  bool witness = false;
  for (const auto& issue : violations.issues)
    if (issue.find("action mismatch at net basis pair") != std::string::npos) witness = true;
  CHECK(witness);
}

TEST_CASE("vertical_fusion") {
  const Defect dz = identity_defect(net_z2());
  const Sector id = identity_sector(dz);
  const Sector fused = vertical_fusion(id, id);
  CHECK(fused.bimodule.dim() == 2);

  // Left unitor realizes the identity-sector absorption.
  InstanceGen gen(11);
  const Sector h = gen.random_sector(dz, dz, 4);
  const Sector lifted = vertical_fusion(identity_sector(dz), h);
  const BimoduleMorphism unitor = left_unitor(h.bimodule);
  CHECK(unitor.target == lifted.bimodule);
  CHECK(unitor.matrix.inverse().has_value());

  CHECK_THROWS_AS(vertical_fusion(id, identity_sector(scalar_defect(M2))), Error);
}

TEST_CASE("horizontal_fusion") {
  // Over the middle net K the underlying space is the plain tensor product.
  const Defect dm2 = scalar_defect(M2);
  const Sector s = identity_sector(dm2);
  const Sector fused = horizontal_fusion(s, s);
  CHECK(fused.bimodule.dim() == 16);
  CHECK(fused.top.algebra.dim() == 16);

  // Identity sectors of the Z/2 identity defect collapse to dim 2.
  const Defect idz = identity_defect(net_z2());
  const Sector sz = identity_sector(idz);
  const Sector fused_z = horizontal_fusion(sz, sz);
  CHECK(fused_z.bimodule.dim() == 2);

  // Identity sectors fuse to the identity sector of the fused defect.
  CHECK(fused_z == identity_sector(fuse_defects(idz, idz)));
}

TEST_CASE("horizontal fusion with the identity sector of the identity defect") {
  InstanceGen gen(23);
  const Net b = net_z2();
  const Defect d0 = gen.random_defect(net_k(), b, 4);
  const Defect d1 = gen.random_defect(net_k(), b, 4);
  const Sector h = gen.random_sector(d0, d1, 4);
  const Sector id_b = identity_sector(identity_defect(b));
  const Sector fused = horizontal_fusion(h, id_b);
  // The carrier stays the same size: tensoring with B over B is trivial.
  CHECK(fused.bimodule.dim() == h.bimodule.dim());
}

TEST_CASE("intertwiner fusions") {
  const Defect dz = identity_defect(net_z2());
  const Sector s = identity_sector(dz);
  InstanceGen gen(3);

  const Intertwiner id = identity_intertwiner(s);
  CHECK(vertical_fusion_intertwiners(id, id).matrix.is_identity());
  CHECK(horizontal_fusion_intertwiners(id, id).matrix.is_identity());

  const Intertwiner phi = gen.random_endo_intertwiner(s);
  const Intertwiner psi = gen.random_endo_intertwiner(s);
  // Transversal fusion is composition.
  CHECK(transversal_fusion(psi, phi).matrix == psi.matrix * phi.matrix);

  // Horizontal fusion is bilinear over scalars: (2 phi) (x) psi = 2 (phi (x) psi).
  const Intertwiner two_phi{phi.source, phi.target, phi.matrix.scaled(q(2))};
  CHECK(horizontal_fusion_intertwiners(two_phi, psi).matrix ==
        horizontal_fusion_intertwiners(phi, psi).matrix.scaled(q(2)));

  // Interchange of horizontal fusion with composition.
  const Intertwiner phi2 = gen.random_endo_intertwiner(s);
  const Intertwiner psi2 = gen.random_endo_intertwiner(s);
  CHECK(horizontal_fusion_intertwiners(transversal_fusion(phi2, phi),
                                       transversal_fusion(psi2, psi))
            .matrix ==
        horizontal_fusion_intertwiners(phi2, psi2).matrix *
            horizontal_fusion_intertwiners(phi, psi).matrix);
}

TEST_CASE("interchanger is invertible and natural") {
  InstanceGen gen(41);
  const Net a = net_k();
  const Net b = net_z2();
  const Net c = net_k();
  const Defect d0 = gen.random_defect(a, b, 2);
  const Defect d1 = gen.random_defect(a, b, 2);
  const Defect d2 = gen.random_defect(a, b, 2);
  const Defect e0 = gen.random_defect(b, c, 2);
  const Defect e1 = gen.random_defect(b, c, 2);
  const Defect e2 = gen.random_defect(b, c, 2);
  const Sector h = gen.random_sector(d0, d1, 3);
  const Sector h2 = gen.random_sector(d1, d2, 3);
  const Sector k = gen.random_sector(e0, e1, 3);
  const Sector k2 = gen.random_sector(e1, e2, 3);

  const Intertwiner phi = interchanger(h, k, h2, k2);
  CHECK(phi.matrix.rows() == phi.matrix.cols());
  const auto inv = phi.matrix.inverse();
  REQUIRE(inv.has_value());

  // Naturality against endomorphism quadruples.
  const Intertwiner fh = gen.random_endo_intertwiner(h);
  const Intertwiner fh2 = gen.random_endo_intertwiner(h2);
  const Intertwiner fk = gen.random_endo_intertwiner(k);
  const Intertwiner fk2 = gen.random_endo_intertwiner(k2);
  const Intertwiner lhs = vertical_fusion_intertwiners(horizontal_fusion_intertwiners(fh, fk),
                                                       horizontal_fusion_intertwiners(fh2, fk2));
  const Intertwiner rhs = horizontal_fusion_intertwiners(vertical_fusion_intertwiners(fh, fh2),
                                                         vertical_fusion_intertwiners(fk, fk2));
  CHECK(phi.matrix * lhs.matrix == rhs.matrix * phi.matrix);
}

TEST_CASE("interchanger on all-scalar data is a reindexing") {
  const Defect dk = scalar_defect(K);
  const Sector s = identity_sector(dk);
  const Intertwiner phi = interchanger(s, s, s, s);
  CHECK(phi.matrix.is_identity());
}

TEST_CASE("zero-dimensional sectors fuse to zero") {
  const Defect dz = identity_defect(net_z2());
  const Bimodule zero(Z2, Z2, 0, {Matrix(0, 0), Matrix(0, 0)}, {Matrix(0, 0), Matrix(0, 0)});
  const Sector z = make_sector(dz, dz, zero);
  CHECK(vertical_fusion(z, identity_sector(dz)).bimodule.dim() == 0);
  CHECK(vertical_fusion(identity_sector(dz), z).bimodule.dim() == 0);
  CHECK(horizontal_fusion(z, identity_sector(dz)).bimodule.dim() == 0);
}

TEST_CASE("record translation round trips on every layer") {
  InstanceGen gen(31);
  const Net nz = net_z2();
  const Defect d0 = gen.random_defect(nz, nz, 4);
  const Defect d1 = gen.random_defect(nz, nz, 4);
  const Sector s = gen.random_sector(d0, d1, 4);
  const std::vector<ComalgRecord> records = {
      ComalgRecord::of(nz), ComalgRecord::of(d0), ComalgRecord::of(s),
      ComalgRecord::of(gen.random_endo_intertwiner(s))};
  for (const auto& record : records) {
    const CcnRecord ccn = comalg_to_ccn(record);
    CHECK(ccn_to_comalg(ccn) == record);
    CHECK(comalg_to_ccn(ccn_to_comalg(ccn)) == ccn);
    CHECK(!ccn.interval_evaluation.empty());
  }
  // Defect metadata reflects the three interval classes.
  const CcnRecord defect_view = comalg_to_ccn(ComalgRecord::of(identity_defect(nz)));
  REQUIRE(defect_view.interval_evaluation.size() == 3);
  CHECK(defect_view.interval_evaluation[0] ==
        std::pair<std::string, std::string>{"white", "dim 2"});
  CHECK(defect_view.interval_evaluation[2] ==
        std::pair<std::string, std::string>{"bicolored", "dim 2"});
}

TEST_CASE("net action on a sector routes equally through both defects") {
  InstanceGen gen(17);
  const Defect d0 = gen.random_defect(net_z2(), net_z2(), 4);
  const Defect d1 = gen.random_defect(net_z2(), net_z2(), 4);
  const Sector h = gen.random_sector(d0, d1, 4);
  for (std::size_t g = 0; g < 2; ++g) CHECK_NOTHROW(net_action_on_sector(h, g));
}
