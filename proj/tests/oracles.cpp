#include "oracles.hpp"

#include <functional>

namespace bvtorus::oracle {

std::vector<std::int64_t> schoolbook_mul(const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<std::int64_t> out(p.size() + q.size() - 1, 0);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) out[a + b] += p[a] * q[b];
  }
  return out;
}

PolyVector degree_one_bracket_closed_form(const MultiIndex& n, int i, const MultiIndex& m, int j) {
  const MultiIndex s = n + m;
  PolyVector out(n.rank());
  out.add_term(s, WedgeMonomial::sorted({j}), Rational(m.coord(static_cast<std::size_t>(i))));
  out.add_term(s, WedgeMonomial::sorted({i}), Rational(-n.coord(static_cast<std::size_t>(j))));
  return out;
}

namespace {

// X(f) for X = sum c z^n theta_i, theta_i = z_i d/dz_i.
LaurentPoly derive(const PolyVector& x, const LaurentPoly& f) {
  LaurentPoly out(f.rank());
  for (const auto& [key, c] : x.terms()) {
    const std::size_t i = static_cast<std::size_t>(key.wedge.indices().at(0));
    for (const auto& [m, d] : f.terms()) out.add_term(key.exp + m, c * d * Rational(m.coord(i)));
  }
  return out;
}

}  // namespace

PolyVector derivation_bracket(const PolyVector& x, const PolyVector& y) {
  const std::size_t r = x.rank();
  PolyVector out(r);
  for (std::size_t k = 1; k <= r; ++k) {
    const LaurentPoly zk = LaurentPoly::monomial(MultiIndex::unit(r, k));
    const LaurentPoly value = derive(x, derive(y, zk)) - derive(y, derive(x, zk));
    const LaurentPoly coeff = value * LaurentPoly::monomial(-MultiIndex::unit(r, k));
    for (const auto& [exp, c] : coeff.terms()) out.add_term(exp, WedgeMonomial::sorted({static_cast<int>(k)}), c);
  }
  return out;
}

PolyVector restriction_by_quotient_rule(std::size_t rank, std::size_t i, std::size_t j) {
  // w_0 = 1, w_i = z_i as Laurent monomials.
  auto w = [rank](std::size_t idx) {
    return idx == 0 ? LaurentPoly::constant(rank, 1) : LaurentPoly::monomial(MultiIndex::unit(rank, idx));
  };
  PolyVector out(rank);
  for (std::size_t k = 1; k <= rank; ++k) {
    LaurentPoly xk(rank);
    if (j == k) xk = xk + w(i);
    if (j == 0) xk = xk - w(i) * w(k);
    const LaurentPoly coeff = xk * LaurentPoly::monomial(-MultiIndex::unit(rank, k));
    for (const auto& [exp, c] : coeff.terms()) out.add_term(exp, WedgeMonomial::sorted({static_cast<int>(k)}), c);
  }
  return out;
}

PolyVector contraction_by_hand(const MultiIndex& n, const std::vector<int>& sorted_wedge) {
  PolyVector out(n.rank());
  for (std::size_t pos = 0; pos < sorted_wedge.size(); ++pos) {
    std::vector<int> rest;
    for (std::size_t q = 0; q < sorted_wedge.size(); ++q) {
      if (q != pos) rest.push_back(sorted_wedge[q]);
    }
    const std::int64_t sign = pos % 2 == 0 ? 1 : -1;
    out.add_term(n, WedgeMonomial::sorted(rest), Rational(sign * n.coord(static_cast<std::size_t>(sorted_wedge[pos]))));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> brute_force_sl2_products(std::int64_t n, std::int64_t bound) {
  const auto d = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> a(static_cast<std::size_t>(n), -bound), b(static_cast<std::size_t>(n), -bound);
  std::vector<std::int64_t*> digits;
  for (auto& x : a) digits.push_back(&x);
  for (auto& x : b) digits.push_back(&x);
  while (true) {
    // [e,f] on x_k: e f x_k - f e x_k = a_{k-1} b_k - a_k b_{k+1} (b stored with offset: b[k-1] = b_k).
    bool ok = true;
    for (std::size_t k = 0; k < d && ok; ++k) {
      const std::int64_t ef = k > 0 ? a[k - 1] * b[k - 1] : 0;
      const std::int64_t fe = k + 1 < d ? a[k] * b[k] : 0;
      ok = ef - fe == -n + 2 * static_cast<std::int64_t>(k);
    }
    if (ok) {
      std::vector<std::int64_t> products;
      for (std::size_t k = 0; k + 1 < d; ++k) products.push_back(a[k] * b[k]);
      found.push_back(std::move(products));
    }
    std::size_t pos = 0;
    while (pos < digits.size() && *digits[pos] == bound) *digits[pos++] = -bound;
    if (pos == digits.size()) break;
    ++*digits[pos];
  }
  return found;
}

std::vector<std::size_t> invariant_coordinate_subspaces(const std::vector<const RationalMatrix*>& ops) {
  const std::size_t d = ops.front()->rows();
  std::vector<std::size_t> dims;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    bool invariant = true;
    for (const auto* op : ops) {
      for (std::size_t col = 0; col < d && invariant; ++col) {
        if (!(mask >> col & 1U)) continue;
        for (std::size_t row = 0; row < d; ++row) {
          if (!(*op)(row, col).is_zero() && !(mask >> row & 1U)) invariant = false;
        }
      }
    }
    if (invariant) dims.push_back(static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return dims;
}

}  // namespace bvtorus::oracle
