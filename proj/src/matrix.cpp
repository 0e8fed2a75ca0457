#include "comalg/matrix.hpp"

#include <stdexcept>

namespace comalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged row");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

Vec Matrix::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs.at(k, j);
        if (b == 0) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply: length mismatch");
  Vec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (a != 0 && v[j] != 0) out[i] += a * v[j];
    }
  return out;
}

Matrix Matrix::kron(const Matrix& rhs) const {
  Matrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t l = 0; l < rhs.cols_; ++l) {
          const Rational& b = rhs.at(k, l);
          if (b == 0) continue;
          out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = a * b;
        }
    }
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix out(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) out.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) out.at(top.rows_ + i, j) = bottom.at(i, j);
  return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix out(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) out.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, left.cols_ + j) = right.at(i, j);
  }
  return out;
}

std::pair<Matrix, std::vector<std::size_t>> Matrix::rref() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < rows_ && m.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows_) continue;
    if (pivot_row != lead)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(lead, j), m.at(pivot_row, j));
    const Rational inv = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < cols_; ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead) continue;
      const Rational factor = m.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().second.size(); }

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto [r, pivots] = hstack(*this, identity(rows_)).rref();
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix inv(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, Vec data) {
  if (data.size() != rows * cols) throw std::invalid_argument("from_flat: size mismatch");
  Matrix m(rows, cols);
  m.data_ = std::move(data);
  return m;
}

std::string to_string(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "row ";
    s += to_string(m.row(i));
    s += '\n';
  }
  return s;
}

}  // namespace comalg
