#pragma once

#include "polytess/constructions.hpp"
#include "polytess/decomposition.hpp"
#include "polytess/rational.hpp"
#include "polytess/verification.hpp"

#include <json.hpp>

namespace polytess {

// Rationals travel as ["num", "den"] decimal strings so no integer width is
// assumed on the other end.
nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json vector_json(const RatVec& v);
RatVec vector_from_json(const nlohmann::json& j);

nlohmann::json polytope_json(const VPolytope& p);
nlohmann::json chain_json(const SimplexChain& c);
nlohmann::json report_json(const TessellationReport& r);
nlohmann::json report_json(const TilingReport& r);
nlohmann::json estimate_json(const MCEstimate& e);

}  // namespace polytess
