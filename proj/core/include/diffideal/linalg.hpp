#pragma once

#include "diffideal/rational.hpp"

#include <cstddef>
#include <vector>

namespace diffideal {

/// Dense matrix over Q, row-major.
class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
EchelonForm row_reduce(RationalMatrix m);

/// Basis of {v : M v = 0}, one vector per free column, in column order.
std::vector<std::vector<BigRational>> nullspace(const RationalMatrix& m);

/// Scales a nonzero rational vector to coprime integers whose first nonzero
/// entry is positive.
std::vector<BigInteger> primitive_integer_vector(const std::vector<BigRational>& v);

} // namespace diffideal
