#include "bvtorus/laurent.hpp"

#include <stdexcept>

namespace bvtorus {

LaurentPoly LaurentPoly::monomial(const MultiIndex& exp, const Rational& coeff) {
  LaurentPoly p(exp.rank());
  p.add_term(exp, coeff);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Rational& c) {
  return monomial(MultiIndex(rank), c);
}

Rational LaurentPoly::coeff(const MultiIndex& exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Rational{} : it->second;
}

std::set<MultiIndex> LaurentPoly::support() const {
  std::set<MultiIndex> s;
  for (const auto& [exp, c] : terms_) s.insert(exp);
  return s;
}

void LaurentPoly::add_term(const MultiIndex& exp, const Rational& c) {
  require_same_rank(rank_, exp.rank());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [exp, a] : terms_) out.terms_.emplace(exp, a * c);
  return out;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_rank(p.rank(), q.rank());
  LaurentPoly out = p;
  for (const auto& [exp, c] : q.terms()) out.add_term(exp, c);
  return out;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q.scaled(-1)); }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_rank(p.rank(), q.rank());
  LaurentPoly out(p.rank());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) out.add_term(a + b, ca * cb);
  }
  return out;
}

LaurentPoly invert_monomial(const LaurentPoly& p) {
  if (!p.is_monomial()) {
    throw std::domain_error("only nonzero monomials are invertible in the Laurent ring");
  }
  const auto& [exp, c] = *p.terms().begin();
  return LaurentPoly::monomial(-exp, c.inverse());
}

}  // namespace bvtorus
