#include "bvtorus/densityrep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bvtorus {

WeightWindow::WeightWindow(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw std::invalid_argument("weight window requires lo <= hi");
}

namespace {

void require_rank_one(const LaurentPoly& p) {
  if (p.rank() != 1) throw std::invalid_argument("density representations are defined for rank 1");
}

LaurentPoly z_power(std::int64_t j) { return LaurentPoly::monomial(MultiIndex{j}); }

// Maps z^j |-> z^{j+m}.
LaurentPoly shift(const LaurentPoly& p, std::int64_t m) {
  LaurentPoly out(1);
  for (const auto& [exp, c] : p.terms()) out.add_term(MultiIndex{exp[0] + m}, c);
  return out;
}

}  // namespace

LaurentPoly rho_apply(const DensityRepSpec& spec, std::int64_t i, const LaurentPoly& p) {
  require_rank_one(p);
  LaurentPoly out(1);
  for (const auto& [exp, c] : p.terms()) {
    const std::int64_t j = exp[0];
    out.add_term(MultiIndex{i + j}, c * (Rational(j) + spec.alpha * Rational(i) + spec.beta));
  }
  return out;
}

LaurentPoly rho_apply(const DensityRepSpec& spec, const VectorField& x, const LaurentPoly& p) {
  if (x.rank() != 1) throw std::invalid_argument("density representations are defined for rank 1");
  LaurentPoly out(1);
  for (const auto& [key, c] : x.value().terms()) out = out + rho_apply(spec, key.exp[0], p).scaled(c);
  return out;
}

bool verify_lie_action(const DensityRepSpec& spec, const WeightWindow& window, std::int64_t max_index) {
  for (std::int64_t j = window.lo(); j <= window.hi(); ++j) {
    const LaurentPoly v = z_power(j);
    for (std::int64_t n = -max_index; n <= max_index; ++n) {
      for (std::int64_t m = -max_index; m <= max_index; ++m) {
        const VectorField br = witt_bracket(VectorField::xi(n), VectorField::xi(m));
        const LaurentPoly lhs = rho_apply(spec, br, v);
        const LaurentPoly rhs =
            rho_apply(spec, n, rho_apply(spec, m, v)) - rho_apply(spec, m, rho_apply(spec, n, v));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Rational weight_of(const DensityRepSpec& spec, std::int64_t j) { return Rational(j) + spec.beta; }

FiniteSl2Module::FiniteSl2Module(std::vector<std::int64_t> basis_labels, RationalMatrix e, RationalMatrix h,
                                 RationalMatrix f)
    : labels_(std::move(basis_labels)), e_(std::move(e)), h_(std::move(h)), f_(std::move(f)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw std::invalid_argument("sl2 module must be nonzero");
  for (const auto* m : {&e_, &h_, &f_}) {
    if (m->rows() != d || m->cols() != d) throw std::invalid_argument("sl2 module matrices must be dim x dim");
  }
  if (commutator(h_, e_) != e_.scaled(2)) throw std::invalid_argument("sl2 module: [h,e] != 2e");
  if (commutator(h_, f_) != f_.scaled(-2)) throw std::invalid_argument("sl2 module: [h,f] != -2f");
  if (commutator(e_, f_) != h_) throw std::invalid_argument("sl2 module: [e,f] != h");
  if (!h_.is_diagonal()) throw std::invalid_argument("sl2 module: h must be diagonal");
  std::multiset<std::int64_t> spec;
  for (std::size_t k = 0; k < d; ++k) {
    if (!h_(k, k).is_integer()) throw std::invalid_argument("sl2 module: h eigenvalues must be integers");
    spec.insert(h_(k, k).to_integer());
  }
  for (auto w : spec) {
    if (spec.count(w) != spec.count(-w)) throw std::invalid_argument("sl2 module: h spectrum not symmetric");
  }
  const std::set<std::int64_t> distinct(spec.begin(), spec.end());
  for (auto it = distinct.begin(); std::next(it) != distinct.end(); ++it) {
    if (*std::next(it) - *it != 2) throw std::invalid_argument("sl2 module: h spectrum must step by 2");
  }
}

std::vector<std::int64_t> FiniteSl2Module::h_spectrum() const {
  std::vector<std::int64_t> s;
  for (std::size_t k = 0; k < dim(); ++k) s.push_back(h_(k, k).to_integer());
  std::sort(s.begin(), s.end());
  return s;
}

RationalMatrix FiniteSl2Module::casimir() const { return e_ * f_ + f_ * e_ + (h_ * h_).scaled(Rational(1, 2)); }

std::optional<FiniteSl2Module> extract_finite_sl2_submodule(const DensityRepSpec& spec) {
  // The lowest vector is killed by rho(xi_{-1}): j - alpha + beta = 0.
  // The highest vector is killed by rho(xi_1): j + alpha + beta = 0.
  const Rational low = spec.alpha - spec.beta;
  const Rational high = -spec.alpha - spec.beta;
  if (!low.is_integer() || !high.is_integer() || high < low) return std::nullopt;
  const std::int64_t j0 = low.to_integer();
  const std::int64_t j1 = high.to_integer();
  if (!rho_apply(spec, -1, z_power(j0)).is_zero() || !rho_apply(spec, 1, z_power(j1)).is_zero()) {
    return std::nullopt;
  }

  const std::size_t d = static_cast<std::size_t>(j1 - j0 + 1);
  std::vector<std::int64_t> labels;
  RationalMatrix e(d, d), h(d, d), f(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::int64_t j = j0 + static_cast<std::int64_t>(k);
    labels.push_back(j);
    const LaurentPoly v = z_power(j);
    const LaurentPoly ev = rho_apply(spec, 1, v);
    const LaurentPoly hv = rho_apply(spec, 0, v).scaled(2);
    const LaurentPoly fv = rho_apply(spec, -1, v).scaled(-1);
    // Closure: every image must stay inside the span of the basis.
    for (const auto* img : {&ev, &hv, &fv}) {
      for (const auto& [exp, c] : img->terms()) {
        if (exp[0] < j0 || exp[0] > j1) return std::nullopt;
        (void)c;
      }
    }
    if (k + 1 < d) e(k + 1, k) = ev.coeff(MultiIndex{j + 1});
    h(k, k) = hv.coeff(MultiIndex{j});
    if (k > 0) f(k - 1, k) = fv.coeff(MultiIndex{j - 1});
  }
  return FiniteSl2Module(std::move(labels), std::move(e), std::move(h), std::move(f));
}

bool check_irreducible(const FiniteSl2Module& m) {
  const std::size_t d = m.dim();
  std::vector<std::size_t> order(d);
  for (std::size_t k = 0; k < d; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&m](std::size_t a, std::size_t b) { return m.h()(a, a) < m.h()(b, b); });
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const std::size_t lo = order[k];
    const std::size_t hi = order[k + 1];
    // One-dimensional weight spaces.
    if (m.h()(lo, lo) == m.h()(hi, hi)) return false;
    if (m.e()(hi, lo).is_zero() || m.f()(lo, hi).is_zero()) return false;
  }
  return true;
}

namespace {

// Dimension of the smallest e,h,f-invariant subspace containing v.
std::size_t closure_dimension(const FiniteSl2Module& m, const std::vector<Rational>& v) {
  const std::size_t d = m.dim();
  std::vector<std::vector<Rational>> spanning{v};
  std::size_t current = 1;
  std::size_t processed = 0;
  while (processed < spanning.size()) {
    const std::vector<Rational> w = spanning[processed++];
    for (const auto* op : {&m.e(), &m.h(), &m.f()}) {
      auto image = op->apply(w);
      spanning.push_back(std::move(image));
      RationalMatrix rows(spanning.size(), d);
      for (std::size_t r = 0; r < spanning.size(); ++r) {
        for (std::size_t c = 0; c < d; ++c) rows(r, c) = spanning[r][c];
      }
      const std::size_t rk = rows.rank();
      if (rk == current) {
        spanning.pop_back();
      } else {
        current = rk;
      }
    }
  }
  return current;
}

}  // namespace

bool irreducible_by_closure(const FiniteSl2Module& m) {
  const std::size_t d = m.dim();
  if (d > 6) throw std::invalid_argument("closure oracle limited to dim <= 6");
  std::vector<int> digits(d, -1);
  while (true) {
    std::vector<Rational> v(d);
    bool nonzero = false;
    for (std::size_t k = 0; k < d; ++k) {
      v[k] = digits[k];
      nonzero = nonzero || digits[k] != 0;
    }
    if (nonzero && closure_dimension(m, v) != d) return false;
    std::size_t k = 0;
    while (k < d && digits[k] == 1) digits[k++] = -1;
    if (k == d) break;
    ++digits[k];
  }
  return true;
}

bool shift_isomorphism_check(const Rational& alpha, const Rational& beta, const Rational& m,
                             const WeightWindow& window, std::int64_t max_index) {
  if (!m.is_integer()) throw std::invalid_argument("shift must be an integer");
  const std::int64_t s = m.to_integer();
  const DensityRepSpec source{alpha, beta + m};
  const DensityRepSpec target{alpha, beta};
  for (std::int64_t j = window.lo(); j <= window.hi(); ++j) {
    const LaurentPoly v = z_power(j);
    for (std::int64_t i = -max_index; i <= max_index; ++i) {
      if (shift(rho_apply(source, i, v), s) != rho_apply(target, i, shift(v, s))) return false;
    }
  }
  return true;
}

}  // namespace bvtorus
