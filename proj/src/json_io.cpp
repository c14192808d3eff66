#include "adlv/json_io.hpp"

#include "adlv/error.hpp"

namespace adlv {

Json to_json(const classes::BGInvariant& inv) {
  Json nu = Json::array();
  for (const auto& q : inv.nu.nu.coords) nu.push_back(to_string(q));
  return {{"kappa", inv.kappa.label}, {"nu", nu}};
}

classes::BGInvariant invariant_from_json(const Json& j, int rank) {
  if (!j.is_object() || !j.contains("kappa") || !j.contains("nu") || !j["kappa"].is_number_integer() ||
      !j["nu"].is_array()) {
    throw ParseError("malformed invariant " + j.dump());
  }
  if (j["nu"].size() != static_cast<std::size_t>(rank)) throw ParseError("Newton point has wrong dimension");
  classes::BGInvariant inv;
  inv.kappa.label = j["kappa"].get<int>();
  for (const auto& c : j["nu"]) {
    if (!c.is_string()) throw ParseError("Newton coordinate must be a \"p/q\" string");
    inv.nu.nu.coords.push_back(parse_rational(c.get<std::string>()));
  }
  return inv;
}

Json to_json(const demazure::IncrementTrace& trace) {
  Json j{{"increments", trace.increments}, {"window", trace.window}, {"periodic", trace.periodic}};
  j["stabilized_at"] = trace.stabilized_at ? Json(*trace.stabilized_at) : Json(nullptr);
  j["limit"] = trace.limit ? Json(to_string(*trace.limit)) : Json(nullptr);
  return j;
}

Json to_json(const AffineWeylGroup& g, const classes::StraightClass& c) {
  Json j = to_json(c.invariant);
  j["min_length"] = c.min_length;
  j["representative"] = g.format(c.representative);
  return j;
}

Json to_json(const AffineWeylGroup& g, const DimReport& r) {
  Json j{{"element", g.format(r.w)},
         {"length", r.length_w},
         {"generic_invariant", to_json(r.generic_invariant)},
         {"bruhat_invariant", to_json(r.bruhat_invariant)},
         {"len_Ow", r.len_Ow},
         {"dim", r.dim_reduction},
         {"dim_reduction", r.dim_reduction},
         {"dim_bruhat", r.dim_bruhat},
         {"agree", r.agree}};
  j["dim_demazure"] = r.dim_demazure ? Json(*r.dim_demazure) : Json(nullptr);
  j["demazure"] = to_json(r.trace);
  return j;
}

}  // namespace adlv
