#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace bvtorus {

/// Exponent vector n in Z^r of the Laurent monomial z^n = z_1^{n_1} ... z_r^{n_r}.
/// Doubles as the H_1(T^r; Z) grading of polyvector fields.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// The zero index of the given rank.
  explicit MultiIndex(std::size_t rank) : exps_(rank, 0) {}
  MultiIndex(std::initializer_list<std::int64_t> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {}

  /// Unit vector e_i with 1-based i.
  static MultiIndex unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return exps_.size(); }
  std::int64_t operator[](std::size_t k) const { return exps_[k]; }
  /// 1-based component access, matching the z_1..z_r coordinate names.
  std::int64_t coord(std::size_t i) const { return exps_.at(i - 1); }
  std::span<const std::int64_t> exponents() const { return exps_; }

  bool is_zero() const;
  /// max_i |n_i|
  std::int64_t sup_norm() const;
  std::int64_t sum() const;

  /// Throws std::invalid_argument on rank mismatch.
  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex operator-() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::int64_t> exps_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& n);

/// All indices of the given rank with sup-norm at most `bound`, in lexicographic order.
std::vector<MultiIndex> indices_in_box(std::size_t rank, std::int64_t bound);

void require_same_rank(std::size_t a, std::size_t b);

}  // namespace bvtorus
