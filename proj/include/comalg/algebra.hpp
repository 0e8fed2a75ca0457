#pragma once

#include "comalg/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace comalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Report-style validation result: empty issue list means valid.
struct Report {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string issue) { issues.push_back(std::move(issue)); }
  std::string joined() const;
};

// Sparse product row: the nonzero coefficients of e_i * e_j in the basis.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// Finite-dimensional unital associative algebra given by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k.  Rows are stored sparsely so that large
// endomorphism algebras stay cheap.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, std::size_t dim, Vec unit);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }

  void set_product(std::size_t i, std::size_t j, const Vec& value);
  void set_product_sparse(std::size_t i, std::size_t j, SparseVec value);
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vec product_vec(std::size_t i, std::size_t j) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  Matrix left_mult_matrix(const Vec& x) const;   // y -> x*y
  Matrix right_mult_matrix(const Vec& x) const;  // y -> y*x
  Matrix basis_left_mult(std::size_t i) const;
  Matrix basis_right_mult(std::size_t i) const;

  // Name is a display label and does not participate in equality.
  bool operator==(const Algebra& rhs) const {
    return dim_ == rhs.dim_ && unit_ == rhs.unit_ && table_ == rhs.table_;
  }

 private:
  std::string name_;
  std::size_t dim_ = 0;
  Vec unit_;
  std::vector<SparseVec> table_;  // dim*dim rows
};

struct Subalgebra {
  Algebra parent;
  Subspace space;
};

struct AlgebraMorphism {
  Algebra source;
  Algebra target;
  Matrix matrix;  // target.dim x source.dim

  Vec apply(const Vec& v) const { return matrix.apply(v); }
  bool operator==(const AlgebraMorphism&) const = default;
};

Report validate_algebra(const Algebra& a);
Algebra opposite(const Algebra& a);
bool is_commutative(const Algebra& a);
// First basis pair (i, j) with e_i e_j != e_j e_i, if any.
std::optional<std::pair<std::size_t, std::size_t>> noncommutative_witness(const Algebra& a);

Subalgebra center(const Algebra& a);
Subalgebra commutant(const Algebra& a, const Subspace& s);
Subalgebra generated_subalgebra(const Algebra& a, const std::vector<Subspace>& parts);

Algebra tensor_algebras(const Algebra& a, const Algebra& b);

// Balanced tensor product of unital algebras over a commutative algebra c
// mapping centrally into both: quotient of a (x) b by the span of
// (x * ja(c_k)) (x) y - x (x) (jb(c_k) * y).  Multiplication descends; the
// witness quotient fixes the basis.
std::pair<Algebra, QuotientSpace> tensor_over_central(const Algebra& a, const Algebra& b,
                                                      const Algebra& c, const AlgebraMorphism& ja,
                                                      const AlgebraMorphism& jb);

Algebra endomorphism_algebra(std::size_t n);
AlgebraMorphism conjugate_endomorphisms(const Matrix& f);

Report check_morphism(const AlgebraMorphism& m);
AlgebraMorphism compose_morphisms(const AlgebraMorphism& g, const AlgebraMorphism& f);
AlgebraMorphism identity_morphism(const Algebra& a);

bool image_in_subspace(const AlgebraMorphism& m, const Subspace& s);

// Fixed small catalog used across tests and generated coherence instances.
Algebra scalar_algebra();           // K
Algebra group_algebra_z2();         // K[g]/(g^2 - 1), basis {e, g}
Algebra dual_number_algebra();      // K[x]/(x^2), basis {1, x}
Algebra upper_triangular_algebra2();  // 2x2 upper triangular, basis {E11, E12, E22}

}  // namespace comalg
