#pragma once

#include "comalg/bimodule.hpp"

namespace comalg {

// Data for fusing a and b over c: an antihomomorphism of c into a, given as a
// homomorphism from opposite(c), and a homomorphism of c into b.
struct FusionInput {
  Algebra a;
  Algebra b;
  Algebra c;
  AlgebraMorphism j_a;  // opposite(c) -> a
  AlgebraMorphism j_b;  // c -> b
};

// The relative commutants act on the balanced carrier by multiplication on
// their own tensor slot (the representation whose image the fusion joins):
// an element of a cap (c^op)' multiplies the left slot, an element of
// c' cap b multiplies the right slot.  Descent to the quotient holds exactly
// on the relative commutants and is checked, not assumed.
struct FusionResult {
  QuotientSpace carrier;          // a (x)_c b
  Algebra end_algebra;            // End of the carrier
  Subalgebra fused;               // (a cap (c^op)') v (c' cap b) inside end_algebra
  Subalgebra commutant_in_a;      // a cap (c^op)'
  Subalgebra commutant_in_b;      // c' cap b
  Matrix left_rep;                // (q*q) x dim(commutant_in_a), flattened actions
  Matrix right_rep;               // (q*q) x dim(commutant_in_b)
};

struct FusionReport {
  std::size_t carrier_dim = 0;
  std::size_t tensor_dim = 0;  // dim of d (x)_b e as an algebra
  std::size_t fused_dim = 0;
  bool image_equals_fused = false;
  bool injective = false;
  bool morphism_ok = false;
  bool ok() const { return image_equals_fused && injective && morphism_ok; }
  std::string summary() const;
};

Subspace morphism_image(const AlgebraMorphism& m);

QuotientSpace balanced_carrier(const FusionInput& in);
FusionResult fusion_algebra(const FusionInput& in);

// The representation rho of d (x)_b e on itself by left multiplication,
// returned as a validated algebra morphism into the endomorphism algebra of
// the balanced carrier.  Requires b commutative with central images.
AlgebraMorphism rho_iso(const Algebra& d, const Algebra& b, const Algebra& e,
                        const AlgebraMorphism& iota_d, const AlgebraMorphism& iota_e);

// Checks that rho is an isomorphism of d (x)_b e onto the fusion d v e
// inside End(d (x)_b e): image equality, injectivity, multiplicativity.
FusionReport verify_fusion_theorem(const Algebra& d, const Algebra& b, const Algebra& e,
                                   const AlgebraMorphism& iota_d, const AlgebraMorphism& iota_e);

// Closure of the span under matrix multiplication inside End(K^n); vectors
// are n x n matrices flattened row-major.  Always contains the identity.
Subspace matrix_algebra_closure(std::size_t n, const Subspace& seeds);

}  // namespace comalg
