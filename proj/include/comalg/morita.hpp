#pragma once

#include "comalg/fusion.hpp"

namespace comalg {

// A locally constant conformal net: one commutative algebra, every embedding
// evaluated to the identity (unoriented case).
struct Net {
  Algebra algebra;
  bool operator==(const Net&) const = default;
};

// A defect between nets A and B: an algebra D with a central homomorphism
// phi from A (x) B into D.
struct Defect {
  Net left_net;
  Net right_net;
  Algebra algebra;
  AlgebraMorphism phi;  // tensor_algebras(A, B) -> algebra, image in the center
  bool operator==(const Defect&) const = default;

  AlgebraMorphism left_restriction() const;   // A -> D, a -> phi(a (x) 1)
  AlgebraMorphism right_restriction() const;  // B -> D, b -> phi(1 (x) b)
};

// A sector between defects sharing a net pair: a D-E bimodule on which the
// two induced A (x) B actions coincide.
struct Sector {
  Defect top;
  Defect bottom;
  Bimodule bimodule;
  bool operator==(const Sector&) const = default;
};

struct Intertwiner {
  Sector source;
  Sector target;
  Matrix matrix;
  bool operator==(const Intertwiner&) const = default;
};

Net make_net(const Algebra& a);  // rejects noncommutative algebras with a witness pair

Report defect_violations(const Net& a, const Net& b, const Algebra& d, const AlgebraMorphism& phi);
Defect make_defect(const Net& a, const Net& b, const Algebra& d, const AlgebraMorphism& phi);
Defect identity_defect(const Net& n);

struct DefectFusion {
  Defect defect;
  QuotientSpace carrier;  // of D (x) E modulo the B-balancing
};
DefectFusion fuse_defects_full(const Defect& d, const Defect& e);
Defect fuse_defects(const Defect& d, const Defect& e);

Report sector_violations(const Defect& top, const Defect& bottom, const Bimodule& m);
Sector make_sector(const Defect& top, const Defect& bottom, const Bimodule& m);
Sector identity_sector(const Defect& d);

struct SectorFusion {
  Sector sector;
  QuotientSpace carrier;
};
SectorFusion vertical_fusion_full(const Sector& h, const Sector& k);
Sector vertical_fusion(const Sector& h, const Sector& k);
SectorFusion horizontal_fusion_full(const Sector& h, const Sector& k);
Sector horizontal_fusion(const Sector& h, const Sector& k);

// The unambiguous action of the shared net on a sector's carrier, routed
// through the top defect; asserts the bottom route gives the same matrix.
Matrix net_action_on_sector(const Sector& h, std::size_t net_basis_index);

Intertwiner make_intertwiner(const Sector& source, const Sector& target, Matrix matrix);
Intertwiner identity_intertwiner(const Sector& h);
Intertwiner transversal_fusion(const Intertwiner& psi, const Intertwiner& phi);  // psi o phi
Intertwiner vertical_fusion_intertwiners(const Intertwiner& phi, const Intertwiner& psi);
Intertwiner horizontal_fusion_intertwiners(const Intertwiner& phi, const Intertwiner& psi);

// The invertible interchanger between the two orders of fusing
//   (H (x)_B K) (x)_{D' (x)_B E'} (H' (x)_B K')
//     -> (H (x)_{D'} H') (x)_B (K (x)_{E'} K').
// h: D->D' and h2: D'->D'' over A-B; k: E->E' and k2: E'->E'' over B-C.
Intertwiner interchanger(const Sector& h, const Sector& k, const Sector& h2, const Sector& k2);

}  // namespace comalg
