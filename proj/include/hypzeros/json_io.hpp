#pragma once

#include <optional>

#include <json.hpp>

#include "hypzeros/closedform.hpp"
#include "hypzeros/oracle.hpp"
#include "hypzeros/ratpoly.hpp"
#include "hypzeros/regions.hpp"
#include "hypzeros/sturm.hpp"

namespace hypzeros {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings and polynomials are arrays of them, constant
// term first.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const RatPoly& p);
RatPoly ratpoly_from_json(const Json& j);

Json to_json(const SequenceTrace& t);
SequenceTrace trace_from_json(const Json& j);

Json to_json(const CrosscheckReport& r);
Json to_json(const RegionLabel& l);
Json to_json(const ZeroReport& r);
/// {"status":"NotCovered"} when the prediction is empty.
Json prediction_to_json(const std::optional<ZeroReport>& r);
Json to_json(const RootSet& r);

}  // namespace hypzeros
