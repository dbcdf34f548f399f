#include "json_format.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bvtorus::cli {

namespace {

Json exponents(const MultiIndex& n) {
  Json arr = Json::array();
  for (auto e : n.exponents()) arr.push_back(e);
  return arr;
}

MultiIndex read_exponents(const Json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) throw std::invalid_argument("\"exp\" must be an array of length rank");
  std::vector<std::int64_t> v;
  for (const auto& e : j) v.push_back(e.get<std::int64_t>());
  return MultiIndex(std::move(v));
}

Rational read_coeff(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("\"coeff\" must be a string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [exp, c] : p.terms()) arr.push_back({{"coeff", c.to_string()}, {"exp", exponents(exp)}});
  return arr;
}

Json to_json(const PolyVector& p) {
  Json arr = Json::array();
  for (const auto& [key, c] : p.terms()) {
    arr.push_back({{"coeff", c.to_string()}, {"exp", exponents(key.exp)}, {"wedge", key.wedge.indices()}});
  }
  return arr;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LaurentPoly p(rank);
  for (const auto& term : j) p.add_term(read_exponents(term.at("exp"), rank), read_coeff(term.at("coeff")));
  return p;
}

PolyVector polyvector_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw std::invalid_argument("polyvector JSON must be an array");
  PolyVector p(rank);
  for (const auto& term : j) {
    std::vector<int> wedge = term.contains("wedge") ? term.at("wedge").get<std::vector<int>>() : std::vector<int>{};
    p = p + PolyVector::monomial(read_exponents(term.at("exp"), rank), std::move(wedge), read_coeff(term.at("coeff")));
  }
  return p;
}

}  // namespace bvtorus::cli
