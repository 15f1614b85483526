#pragma once

#include <cstddef>
#include <vector>

#include "gorjdt/field.hpp"

namespace gorjdt {

using Vec = std::vector<Coeff>;

// Dense exact matrix over a Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coeff& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Matrix transpose() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// Fraction-free elimination over Q, modular elimination over F_p.
std::size_t rank(const Matrix& m);
std::size_t rank_of_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);

// Reduced row echelon form of the row space; pivots are the leftmost nonzero columns.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};
Echelon row_echelon(Field field, std::size_t cols, const std::vector<Vec>& rows);

// Basis of { v : v * m = 0 }.
std::vector<Vec> left_kernel(const Matrix& m);

// Reduce v against an echelon basis; returns the remainder.
Vec reduce(const Field& field, const Echelon& e, Vec v);
bool is_zero(const Vec& v);

}  // namespace gorjdt
