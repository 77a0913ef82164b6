#pragma once

#include <string>
#include <vector>

#include "rquant/rat.hpp"

namespace rquant {

/// Dense matrix over Q, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(std::vector<std::vector<Rat>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transposed() const;
  RatMatrix operator-() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& c, const RatMatrix& a);
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  bool operator==(const RatMatrix& o) const = default;
  bool is_zero() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form computed in place; returns the pivot column of
/// each nonzero row, in order. Zero rows are removed from the matrix.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Inverse of a square matrix; throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace rquant
