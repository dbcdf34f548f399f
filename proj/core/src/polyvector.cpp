#include "bvtorus/polyvector.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bvtorus {

std::pair<int, WedgeMonomial> WedgeMonomial::from_sequence(std::vector<int> indices) {
  // Bubble sort keeps track of the transposition count directly.
  int sign = 1;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
      if (indices[j] == indices[j + 1]) return {0, WedgeMonomial{}};
      if (indices[j] > indices[j + 1]) {
        std::swap(indices[j], indices[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < indices.size(); ++j) {
    if (indices[j] == indices[j + 1]) return {0, WedgeMonomial{}};
  }
  WedgeMonomial w;
  w.indices_ = std::move(indices);
  return {sign, w};
}

WedgeMonomial WedgeMonomial::sorted(std::vector<int> indices) {
  for (std::size_t j = 0; j + 1 < indices.size(); ++j) {
    if (indices[j] >= indices[j + 1]) throw std::invalid_argument("wedge indices must be strictly increasing");
  }
  WedgeMonomial w;
  w.indices_ = std::move(indices);
  return w;
}

bool WedgeMonomial::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

WedgeMonomial WedgeMonomial::without_position(std::size_t pos) const {
  WedgeMonomial w = *this;
  w.indices_.erase(w.indices_.begin() + static_cast<std::ptrdiff_t>(pos));
  return w;
}

std::pair<int, WedgeMonomial> wedge_monomials(const WedgeMonomial& s, const WedgeMonomial& t) {
  std::vector<int> seq = s.indices();
  seq.insert(seq.end(), t.indices().begin(), t.indices().end());
  return WedgeMonomial::from_sequence(std::move(seq));
}

PolyVector PolyVector::monomial(const MultiIndex& exp, std::vector<int> wedge, const Rational& c) {
  for (int i : wedge) {
    if (i < 1 || static_cast<std::size_t>(i) > exp.rank()) throw std::out_of_range("theta index out of range");
  }
  PolyVector p(exp.rank());
  auto [sign, w] = WedgeMonomial::from_sequence(std::move(wedge));
  if (sign != 0) p.add_term(exp, w, c * Rational(sign));
  return p;
}

PolyVector PolyVector::from_laurent(const LaurentPoly& f) {
  PolyVector p(f.rank());
  for (const auto& [exp, c] : f.terms()) p.terms_.emplace(PolyTermKey{exp, WedgeMonomial{}}, c);
  return p;
}

PolyVector PolyVector::theta(std::size_t rank, int i) { return monomial(MultiIndex(rank), {i}); }

PolyVector PolyVector::xi(const MultiIndex& n, int i) { return monomial(n, {i}); }

Rational PolyVector::coeff(const MultiIndex& exp, const WedgeMonomial& wedge) const {
  const auto it = terms_.find(PolyTermKey{exp, wedge});
  return it == terms_.end() ? Rational{} : it->second;
}

void PolyVector::add_term(const MultiIndex& exp, const WedgeMonomial& wedge, const Rational& c) {
  require_same_rank(rank_, exp.rank());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(PolyTermKey{exp, wedge}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<std::size_t> PolyVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t d = terms_.begin()->first.wedge.degree();
  for (const auto& [key, c] : terms_) {
    if (key.wedge.degree() != d) return std::nullopt;
  }
  return d;
}

bool PolyVector::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

std::size_t PolyVector::max_degree() const {
  std::size_t d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.wedge.degree());
  return d;
}

PolyVector PolyVector::homogeneous_part(std::size_t k) const {
  PolyVector out(rank_);
  for (const auto& [key, c] : terms_) {
    if (key.wedge.degree() == k) out.terms_.emplace(key, c);
  }
  return out;
}

LaurentPoly PolyVector::function_part() const {
  LaurentPoly f(rank_);
  for (const auto& [key, c] : terms_) {
    if (key.wedge.degree() == 0) f.add_term(key.exp, c);
  }
  return f;
}

std::vector<MultiIndex> PolyVector::gradings() const {
  std::set<MultiIndex> s;
  for (const auto& [key, c] : terms_) s.insert(key.exp);
  return {s.begin(), s.end()};
}

PolyVector PolyVector::scaled(const Rational& c) const {
  PolyVector out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [key, a] : terms_) out.terms_.emplace(key, a * c);
  return out;
}

PolyVector add(const PolyVector& a, const PolyVector& b) {
  require_same_rank(a.rank(), b.rank());
  PolyVector out = a;
  for (const auto& [key, c] : b.terms()) out.add_term(key.exp, key.wedge, c);
  return out;
}

PolyVector sub(const PolyVector& a, const PolyVector& b) { return add(a, b.scaled(-1)); }

PolyVector wedge(const PolyVector& a, const PolyVector& b) {
  require_same_rank(a.rank(), b.rank());
  PolyVector out(a.rank());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      auto [sign, w] = wedge_monomials(ka.wedge, kb.wedge);
      if (sign == 0) continue;
      out.add_term(ka.exp + kb.exp, w, ca * cb * Rational(sign));
    }
  }
  return out;
}

PolyVector bv_delta(const PolyVector& a) {
  PolyVector out(a.rank());
  for (const auto& [key, c] : a.terms()) {
    const auto& idx = key.wedge.indices();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const std::int64_t n_i = key.exp.coord(static_cast<std::size_t>(idx[j]));
      if (n_i == 0) continue;
      const Rational sign = (j % 2 == 0) ? 1 : -1;
      out.add_term(key.exp, key.wedge.without_position(j), c * sign * Rational(n_i));
    }
  }
  return out;
}

namespace {

PolyVector bracket_homogeneous(const PolyVector& a, std::size_t deg_a, const PolyVector& b) {
  const PolyVector sign_term = wedge(a, bv_delta(b));
  PolyVector out = bv_delta(wedge(a, b)) - wedge(bv_delta(a), b);
  return deg_a % 2 == 0 ? out - sign_term : out + sign_term;
}

}  // namespace

PolyVector gerstenhaber_bracket(const PolyVector& a, const PolyVector& b) {
  require_same_rank(a.rank(), b.rank());
  PolyVector out(a.rank());
  for (std::size_t k = 0; k <= a.max_degree(); ++k) {
    const PolyVector part = a.homogeneous_part(k);
    if (part.is_zero()) continue;
    out = out + bracket_homogeneous(part, k, b);
  }
  return out;
}

}  // namespace bvtorus
