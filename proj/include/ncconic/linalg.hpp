#pragma once

#include <optional>
#include <vector>

#include "ncconic/scalar.hpp"

namespace ncconic {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void append_row(const Vec& r);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                    // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};

// Reduced row echelon form; pivots are leftmost nonzero columns, rows in pivot order.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column, free entry 1.
std::vector<Vec> kernel(const Matrix& m);
// Some x with m x = b, or nothing.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
Scalar det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Reduce v against an echelon basis; returns the remainder.
Vec reduce_against(const Echelon& e, Vec v);
bool is_zero(const Vec& v);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);

}  // namespace ncconic
