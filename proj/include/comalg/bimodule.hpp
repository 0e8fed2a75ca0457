#pragma once

#include "comalg/algebra.hpp"

namespace comalg {

// A D-E bimodule: commuting left D-action and right E-action on K^dim.
// The left action matrices extend to an algebra morphism D -> End, the right
// ones to an antimorphism (module convention x*(e1 e2) = (x*e1)*e2).
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(Algebra left_alg, Algebra right_alg, std::size_t dim,
           std::vector<Matrix> left_action, std::vector<Matrix> right_action);

  const Algebra& left_alg() const { return left_alg_; }
  const Algebra& right_alg() const { return right_alg_; }
  std::size_t dim() const { return dim_; }
  const Matrix& left_basis_action(std::size_t i) const { return left_action_.at(i); }
  const Matrix& right_basis_action(std::size_t j) const { return right_action_.at(j); }

  Matrix left_op(const Vec& d) const;
  Matrix right_op(const Vec& e) const;

  bool operator==(const Bimodule& rhs) const = default;

 private:
  Algebra left_alg_;
  Algebra right_alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix> left_action_;
  std::vector<Matrix> right_action_;
};

struct BimoduleMorphism {
  Bimodule source;
  Bimodule target;
  Matrix matrix;  // target.dim x source.dim
};

Report validate_bimodule(const Bimodule& m);
Bimodule regular_bimodule(const Algebra& d);

// The rank-one free D-E bimodule on D (x) E.
Bimodule free_pair_bimodule(const Algebra& d, const Algebra& e);

// Span of (rho_b x) (x) y - x (x) (lambda_b y) over the action index b and
// basis x, y.  Shared by every balanced tensor construction in the library.
Subspace balancing_relations(std::size_t dim_left, std::size_t dim_right,
                             const std::vector<Matrix>& rho, const std::vector<Matrix>& lambda);

// Tensor product over the shared middle algebra, with the witness quotient.
std::pair<Bimodule, QuotientSpace> tensor_over(const Bimodule& m, const Bimodule& n);

BimoduleMorphism tensor_morphisms_over(const BimoduleMorphism& phi, const BimoduleMorphism& psi);
BimoduleMorphism compose_morphisms(const BimoduleMorphism& psi, const BimoduleMorphism& phi);
BimoduleMorphism identity_bimodule_morphism(const Bimodule& m);
BimoduleMorphism invert_morphism(const BimoduleMorphism& phi);

bool is_intertwiner(const BimoduleMorphism& phi);

// Canonical invertible intertwiner (m (x) n) (x) p -> m (x) (n (x) p).
BimoduleMorphism associator(const Bimodule& m, const Bimodule& n, const Bimodule& p);

// h -> 1 (x) h into regular(D) (x)_D m, and h -> h (x) 1 symmetrically.
BimoduleMorphism left_unitor(const Bimodule& m);
BimoduleMorphism right_unitor(const Bimodule& m);

// All solutions of the intertwiner equations source -> target, flattened
// row-major into K^(target.dim * source.dim).
Subspace intertwiner_space(const Bimodule& source, const Bimodule& target);

// Core of every reassociation map: given the four witness quotients of
// (m n) p and m (n p), composes section/projection chains into the canonical
// matrix.  Verifies that the composite kills the outer source relations.
Matrix reassociation_matrix(std::size_t dm, std::size_t dn, std::size_t dp,
                            const QuotientSpace& q_mn, const QuotientSpace& q_mn_p,
                            const QuotientSpace& q_np, const QuotientSpace& q_m_np);

}  // namespace comalg
