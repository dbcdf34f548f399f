#include "bvtorus/text_format.hpp"

#include <cctype>
#include <sstream>

namespace bvtorus {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

constexpr std::string_view kTheta = "\xCE\xB8";   // θ
constexpr std::string_view kWedge = "\xE2\x88\xA7";  // ∧

class Parser {
 public:
  Parser(std::string_view text, std::size_t rank) : text_(text), rank_(rank) {
    if (rank == 0) throw std::invalid_argument("rank must be positive");
  }

  PolyVector parse() {
    PolyVector out(rank_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance(1);
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out = out + parse_term().scaled(sign);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  void advance(std::size_t n) { pos_ += n; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance(1);
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance(1);
    skip_ws();
  }

  bool digit_ahead() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') advance(1);
    if (!digit_ahead()) fail("expected integer");
    while (digit_ahead()) advance(1);
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  std::size_t parse_var_index() {
    const std::size_t start = pos_;
    if (!digit_ahead()) {
      if (rank_ != 1) fail("variable index required when rank > 1");
      return 1;
    }
    std::size_t idx = 0;
    while (digit_ahead()) {
      idx = idx * 10 + static_cast<std::size_t>(peek() - '0');
      advance(1);
    }
    if (idx < 1 || idx > rank_) {
      pos_ = start;
      fail("variable index out of range");
    }
    return idx;
  }

  PolyVector parse_term() {
    PolyVector acc = PolyVector::from_laurent(LaurentPoly::constant(rank_, 1));
    while (true) {
      skip_ws();
      acc = wedge(acc, parse_factor());
      skip_ws();
      if (peek() != '*') break;
      advance(1);
    }
    return acc;
  }

  PolyVector parse_factor() {
    if (digit_ahead()) return parse_coefficient();
    if (peek() == 'z') return parse_z();
    if (peek() == 't' || starts_with(kTheta)) return parse_wedge();
    fail("unexpected character");
  }

  PolyVector parse_coefficient() {
    const std::size_t start = pos_;
    while (digit_ahead()) advance(1);
    if (peek() == '/') {
      advance(1);
      if (!digit_ahead()) fail("expected denominator");
      while (digit_ahead()) advance(1);
    }
    Rational q;
    try {
      q = Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
    return PolyVector::from_laurent(LaurentPoly::constant(rank_, q));
  }

  PolyVector parse_z() {
    advance(1);  // 'z'
    MultiIndex exp(rank_);
    if (digit_ahead()) {
      const std::size_t i = parse_var_index();
      std::int64_t e = 1;
      if (peek() == '^') {
        advance(1);
        e = parse_int();
      }
      std::vector<std::int64_t> v(rank_, 0);
      v[i - 1] = e;
      exp = MultiIndex(std::move(v));
    } else if (peek() == '^') {
      advance(1);
      skip_ws();
      if (peek() == '(') {
        advance(1);
        std::vector<std::int64_t> v;
        v.push_back(parse_int());
        skip_ws();
        while (peek() == ',') {
          advance(1);
          v.push_back(parse_int());
          skip_ws();
        }
        if (v.size() != rank_) fail("exponent vector length does not match rank");
        expect(')');
        exp = MultiIndex(std::move(v));
      } else {
        if (rank_ != 1) fail("scalar exponent on bare z requires rank 1");
        exp = MultiIndex{parse_int()};
      }
    } else {
      if (rank_ != 1) fail("bare z requires rank 1");
      exp = MultiIndex{1};
    }
    return PolyVector::from_laurent(LaurentPoly::monomial(exp));
  }

  PolyVector parse_theta() {
    if (peek() == 't') {
      advance(1);
    } else if (starts_with(kTheta)) {
      advance(kTheta.size());
    } else {
      fail("expected theta");
    }
    const std::size_t i = parse_var_index();
    return PolyVector::theta(rank_, static_cast<int>(i));
  }

  PolyVector parse_wedge() {
    PolyVector acc = parse_theta();
    while (true) {
      skip_ws();
      if (peek() == '^') {
        advance(1);
      } else if (starts_with(kWedge)) {
        advance(kWedge.size());
      } else {
        break;
      }
      skip_ws();
      acc = wedge(acc, parse_theta());
    }
    return acc;
  }

  std::string_view text_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const MultiIndex& exp, const WedgeMonomial& w, Notation notation) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t k = 0; k < exp.rank(); ++k) {
    if (exp[k] == 0) continue;
    os << (any ? "*" : "") << 'z' << (k + 1) << '^' << exp[k];
    any = true;
  }
  const std::string_view theta = notation == Notation::kPretty ? kTheta : std::string_view{"t"};
  const std::string_view wedge_sym = notation == Notation::kPretty ? kWedge : std::string_view{"^"};
  for (std::size_t k = 0; k < w.degree(); ++k) {
    os << (k == 0 ? (any ? "*" : "") : std::string(wedge_sym)) << theta << w.indices()[k];
  }
  return os.str();
}

std::string render_terms(const PolyVector::TermMap& terms, Notation notation) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const std::string mono = render_monomial(key.exp, key.wedge, notation);
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    std::string body;
    if (mono.empty()) {
      body = mag.to_string();
    } else if (mag == Rational(1)) {
      body = mono;
    } else {
      body = mag.to_string() + "*" + mono;
    }
    if (first) {
      out += (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace

PolyVector parse_polyvector(std::string_view text, std::size_t rank) { return Parser(text, rank).parse(); }

LaurentPoly parse_laurent(std::string_view text, std::size_t rank) {
  const PolyVector p = parse_polyvector(text, rank);
  if (p.max_degree() != 0) throw ParseError("expected a Laurent polynomial (no theta factors)", 0);
  return p.function_part();
}

std::string format(const PolyVector& p, Notation notation) { return render_terms(p.terms(), notation); }

std::string format(const LaurentPoly& p, Notation notation) {
  return format(PolyVector::from_laurent(p), notation);
}

}  // namespace bvtorus
