#pragma once

#include "comalg/matrix.hpp"

#include <optional>

namespace comalg {

// A subspace of K^n held in canonical form: the basis rows are the reduced
// row-echelon form of any spanning set, so subspace equality is matrix
// equality.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  // Canonicalizes the spanning rows (drops dependent ones).
  static Subspace from_rows(std::size_t ambient_dim, const std::vector<Vec>& rows);
  static Subspace from_matrix_rows(const Matrix& rows);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the RREF basis; nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& rhs) const {
    return ambient_dim_ == rhs.ambient_dim_ && basis_ == rhs.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_join(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Null space {v : m v = 0} of the column action, canonicalized.
Subspace kernel(const Matrix& m);

// Row space of m, canonicalized.
Subspace row_space(const Matrix& m);

// Explicit quotient K^n / R with a deterministic basis: the coordinates kept
// are the non-pivot columns of the relations' RREF.  projection * section is
// the identity on the quotient and the kernel of projection is exactly R.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace relations;
  std::size_t quotient_dim = 0;
  Matrix projection;  // quotient_dim x ambient_dim
  Matrix section;     // ambient_dim x quotient_dim

  Vec project(const Vec& v) const { return projection.apply(v); }
  Vec lift(const Vec& v) const { return section.apply(v); }
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& relations);

// True when op (a map between the ambient spaces) descends to the quotients,
// i.e. op maps src relations into tgt relations.
bool descends(const Matrix& op, const QuotientSpace& src, const QuotientSpace& tgt);

// The induced map tgt.projection * op * src.section.  Callers are expected to
// have checked descends() when the input is not known canonical.
Matrix induced_map(const Matrix& op, const QuotientSpace& src, const QuotientSpace& tgt);

}  // namespace comalg
