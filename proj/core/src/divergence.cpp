// Divergence model of the BV operator. Polyvectors are pushed to logarithmic
// differential forms z^n dlog z_T by contraction with the volume form
// Omega = dlog z_1 ^ ... ^ dlog z_r, differentiated, and pulled back.

#include <algorithm>
#include <map>
#include <vector>

#include "bvtorus/polyvector.hpp"

namespace bvtorus {

namespace {

// z^n dlog z_{t_1} ^ ... ^ dlog z_{t_m}, t strictly increasing.
struct LogFormKey {
  MultiIndex exp;
  std::vector<int> dlogs;
  friend auto operator<=>(const LogFormKey&, const LogFormKey&) = default;
};
using LogForm = std::map<LogFormKey, Rational>;

void accumulate(LogForm& form, LogFormKey key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = form.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) form.erase(it);
  }
}

std::vector<int> complement(const std::vector<int>& s, std::size_t rank) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(rank); ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

// Sign of the permutation putting the concatenation (s, t) into increasing order.
int shuffle_sign(const std::vector<int>& s, const std::vector<int>& t) {
  int inversions = 0;
  for (int a : s) {
    for (int b : t) {
      if (a > b) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// iota_Omega(z^n theta_S) = sign(S, S^c) z^n dlog z_{S^c}: contracting theta_S
// into Omega after reordering Omega so the S-factors come first.
LogForm contract_volume(const PolyVector& a) {
  LogForm out;
  for (const auto& [key, c] : a.terms()) {
    const auto& s = key.wedge.indices();
    auto rest = complement(s, a.rank());
    const int sign = shuffle_sign(s, rest);
    accumulate(out, LogFormKey{key.exp, std::move(rest)}, c * Rational(sign));
  }
  return out;
}

// d(z^n dlog z_T) = sum_{j not in T} n_j z^n dlog z_j ^ dlog z_T
LogForm de_rham(const LogForm& form, std::size_t rank) {
  LogForm out;
  for (const auto& [key, c] : form) {
    for (int j = 1; j <= static_cast<int>(rank); ++j) {
      const std::int64_t n_j = key.exp.coord(static_cast<std::size_t>(j));
      if (n_j == 0 || std::binary_search(key.dlogs.begin(), key.dlogs.end(), j)) continue;
      const int sign = shuffle_sign({j}, key.dlogs);
      std::vector<int> t = key.dlogs;
      t.insert(std::lower_bound(t.begin(), t.end(), j), j);
      accumulate(out, LogFormKey{key.exp, std::move(t)}, c * Rational(n_j) * Rational(sign));
    }
  }
  return out;
}

PolyVector inverse_contract_volume(const LogForm& form, std::size_t rank) {
  PolyVector out(rank);
  for (const auto& [key, c] : form) {
    auto s = complement(key.dlogs, rank);
    const int sign = shuffle_sign(s, key.dlogs);
    out.add_term(key.exp, WedgeMonomial::sorted(std::move(s)), c * Rational(sign));
  }
  return out;
}

}  // namespace

PolyVector bv_delta_divergence(const PolyVector& a) {
  PolyVector out(a.rank());
  for (std::size_t k = 0; k <= a.max_degree(); ++k) {
    const PolyVector part = a.homogeneous_part(k);
    if (part.is_zero()) continue;
    const PolyVector div = inverse_contract_volume(de_rham(contract_volume(part), a.rank()), a.rank());
    out = out + (k % 2 == 1 ? div : div.scaled(-1));
  }
  return out;
}

}  // namespace bvtorus
