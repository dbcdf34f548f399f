#pragma once

#include <cstddef>

#include <json.hpp>

#include "bvtorus/laurent.hpp"
#include "bvtorus/linalg.hpp"
#include "bvtorus/polyvector.hpp"

namespace bvtorus::cli {

using Json = nlohmann::ordered_json;

/// [{"coeff": "p/q", "exp": [n1, ..., nr]}, ...] in canonical term order.
Json to_json(const LaurentPoly& p);
/// [{"coeff": "p/q", "exp": [...], "wedge": [i1, ...]}, ...]
Json to_json(const PolyVector& p);
/// Rows of "p/q" strings.
Json to_json(const RationalMatrix& m);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
LaurentPoly laurent_from_json(const Json& j, std::size_t rank);
PolyVector polyvector_from_json(const Json& j, std::size_t rank);

}  // namespace bvtorus::cli
