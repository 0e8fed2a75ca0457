#pragma once

#include "comalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace comalg {

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& c) const;
  bool operator==(const Matrix& rhs) const = default;

  Vec apply(const Vec& v) const;  // matrix * column vector

  // Kronecker product: (A kron B)[(i,k),(j,l)] = A(i,j) * B(k,l).
  Matrix kron(const Matrix& rhs) const;

  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  // Canonical reduced row-echelon form: pivots are 1, pivot columns strictly
  // increasing, zeros above and below each pivot.
  std::pair<Matrix, std::vector<std::size_t>> rref() const;
  std::size_t rank() const;
  std::optional<Matrix> inverse() const;  // nullopt when singular or non-square

  // As a flat vector, row-major.
  const std::vector<Rational>& flat() const { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, Vec data);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const Matrix& m);  // "row a,b,c\n" per row

}  // namespace comalg
