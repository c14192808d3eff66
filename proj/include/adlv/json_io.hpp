#pragma once

// JSON views of reports and classes. Rationals are "p/q" strings.

#include <json.hpp>

#include "adlv/classes.hpp"
#include "adlv/demazure.hpp"
#include "adlv/dimension.hpp"

namespace adlv {

using Json = nlohmann::json;

Json to_json(const classes::BGInvariant& inv);
classes::BGInvariant invariant_from_json(const Json& j, int rank);
Json to_json(const demazure::IncrementTrace& trace);
Json to_json(const AffineWeylGroup& g, const classes::StraightClass& c);
Json to_json(const AffineWeylGroup& g, const DimReport& r);

}  // namespace adlv
