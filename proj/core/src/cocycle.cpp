#include "bvtorus/cocycle.hpp"

#include <stdexcept>
#include <string>

#include "bvtorus/text_format.hpp"

namespace bvtorus {

namespace {

// Splits on commas outside (), [].
std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

CE1Cochain CE1Cochain::parse(std::string_view text, std::size_t rank) {
  CE1Cochain c;
  c.rank = rank;
  for (auto part : split_top_level(text)) {
    part = trim(part);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("cochain field without '=': " + std::string(part));
    const auto key = trim(part.substr(0, eq));
    const auto value = trim(part.substr(eq + 1));
    if (key == "alpha") {
      c.alpha = Rational::parse(value);
    } else if (key == "beta") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
        throw std::invalid_argument("beta must be a bracketed list");
      }
      c.betas.clear();
      const auto inner = trim(value.substr(1, value.size() - 2));
      if (!inner.empty()) {
        for (auto item : split_top_level(inner)) c.betas.push_back(Rational::parse(trim(item)));
      }
      if (!c.betas.empty() && c.betas.size() != rank) {
        throw std::invalid_argument("beta list length must equal the rank");
      }
    } else if (key == "g") {
      LaurentPoly g = parse_laurent(value, rank);
      c.exact_part = g.is_zero() ? std::nullopt : std::optional<LaurentPoly>(std::move(g));
    } else {
      throw std::invalid_argument("unknown cochain field '" + std::string(key) + "'");
    }
  }
  return c;
}

LaurentPoly act_on_function(const VectorField& x, const LaurentPoly& f) {
  return gerstenhaber_bracket(x.value(), PolyVector::from_laurent(f)).function_part();
}

LaurentPoly evaluate(const CE1Cochain& c, const VectorField& x) {
  require_same_rank(c.rank, x.rank());
  LaurentPoly out = bv_delta(x.value()).function_part().scaled(c.alpha);
  for (std::size_t i = 1; i <= c.rank; ++i) {
    const Rational b = c.beta(i);
    if (b.is_zero()) continue;
    const LaurentPoly zi = LaurentPoly::monomial(MultiIndex::unit(c.rank, i));
    out = out + (invert_monomial(zi) * act_on_function(x, zi)).scaled(b);
  }
  if (c.exact_part) out = out + act_on_function(x, *c.exact_part);
  return out;
}

LaurentPoly ce_differential(const Cochain& psi, const VectorField& x, const VectorField& y) {
  require_same_rank(x.rank(), y.rank());
  return psi(witt_bracket(x, y)) - act_on_function(x, psi(y)) + act_on_function(y, psi(x));
}

LaurentPoly ce_differential_check(const CE1Cochain& c, const VectorField& x, const VectorField& y) {
  return ce_differential([&c](const VectorField& v) { return evaluate(c, v); }, x, y);
}

std::vector<VectorField> witt_basis_window(std::size_t rank, std::int64_t window) {
  std::vector<VectorField> basis;
  for (const auto& n : indices_in_box(rank, window)) {
    for (std::size_t i = 1; i <= rank; ++i) basis.push_back(VectorField::xi(n, static_cast<int>(i)));
  }
  return basis;
}

bool is_cocycle_on_window(const Cochain& psi, std::size_t rank, std::int64_t window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  const auto basis = witt_basis_window(rank, window);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!ce_differential(psi, x, y).is_zero()) return false;
    }
  }
  return true;
}

bool is_cocycle_on_window(const CE1Cochain& c, std::int64_t window) {
  return is_cocycle_on_window([&c](const VectorField& v) { return evaluate(c, v); }, c.rank, window);
}

}  // namespace bvtorus
