#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bvtorus/laurent.hpp"
#include "bvtorus/polyvector.hpp"

namespace bvtorus {

/// Thrown by the polynomial parsers; `position()` is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace ignored):
///   expr   := [sign] term (sign term)*
///   term   := factor ('*' factor)*
///   factor := rational | z^(n1,...,nr) | z^n | zi[^n] | z | wedge
///   wedge  := theta (('^' | '∧') theta)*,  theta := ti | θi | t | θ
/// The bare forms `z`, `z^n`, `t`, `θ` are only accepted for rank 1. Factors are
/// multiplied with the graded product.
PolyVector parse_polyvector(std::string_view text, std::size_t rank);
/// As parse_polyvector, rejecting any term of nonzero degree.
LaurentPoly parse_laurent(std::string_view text, std::size_t rank);

enum class Notation {
  kMachine,  // 3/2*z1^-2*z2^3*t1^t3
  kPretty,   // 3/2*z1^-2*z2^3*θ1∧θ3
};

/// Canonical rendering in lexicographic term order; the zero element prints as "0".
std::string format(const PolyVector& p, Notation notation = Notation::kMachine);
std::string format(const LaurentPoly& p, Notation notation = Notation::kMachine);

}  // namespace bvtorus
