#include "bvtorus/linalg.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace bvtorus {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& diag) {
  RationalMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const { return *this + o.scaled(-1); }

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
      }
    }
  }
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

std::vector<std::size_t> RationalMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    }
    const Rational inv = (*this)(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, col).is_zero()) continue;
      const Rational factor = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= factor * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.row_reduce().size();
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  const auto pivots = aug.row_reduce();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace bvtorus
