#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bvtorus/rational.hpp"

namespace bvtorus {

/// Dense row-major matrix over Q. Small sizes only (sl_2 modules, gl_{r+1}, rank tests).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  Rational trace() const;

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& c) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> row_reduce();
  std::size_t rank() const;

  /// Solves A x = b; nullopt when inconsistent. When underdetermined returns the
  /// solution with free variables set to zero.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A B - B A
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace bvtorus
