#include "bvtorus/multi_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bvtorus {

void require_same_rank(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

MultiIndex MultiIndex::unit(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank) throw std::out_of_range("unit index out of range");
  MultiIndex n(rank);
  n.exps_[i - 1] = 1;
  return n;
}

bool MultiIndex::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t MultiIndex::sup_norm() const {
  std::int64_t m = 0;
  for (auto e : exps_) m = std::max(m, std::abs(e));
  return m;
}

std::int64_t MultiIndex::sum() const {
  std::int64_t s = 0;
  for (auto e : exps_) s += e;
  return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_rank(rank(), other.rank());
  MultiIndex out = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] += other.exps_[k];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const { return *this + (-other); }

MultiIndex MultiIndex::operator-() const {
  MultiIndex out = *this;
  for (auto& e : out.exps_) e = -e;
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& n) {
  os << '(';
  for (std::size_t k = 0; k < n.rank(); ++k) os << (k ? "," : "") << n[k];
  return os << ')';
}

std::vector<MultiIndex> indices_in_box(std::size_t rank, std::int64_t bound) {
  std::vector<MultiIndex> out;
  std::vector<std::int64_t> cur(rank, -bound);
  if (bound < 0) return out;
  while (true) {
    out.emplace_back(cur);
    std::size_t k = rank;
    while (k > 0) {
      --k;
      if (cur[k] < bound) {
        ++cur[k];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(k) + 1, cur.end(), -bound);
        break;
      }
      if (k == 0) return out;
    }
    if (rank == 0) return out;
  }
}

}  // namespace bvtorus
