#include "adlv/atlas.hpp"

#include <algorithm>
#include <fstream>

#include "adlv/error.hpp"

namespace adlv {

Atlas build_atlas(const AffineWeylGroup& g, const GroupAuto& sigma, int max_len) {
  return {g.config_string(), g.format_auto(sigma), max_len, classes::straight_classes_upto(g, max_len, sigma)};
}

Json atlas_to_json(const AffineWeylGroup& g, const Atlas& atlas) {
  Json records = Json::array();
  for (const auto& c : atlas.classes) records.push_back(to_json(g, c));
  return {{"schema_version", kAtlasSchemaVersion},
          {"cartan", atlas.cartan_config},
          {"sigma", atlas.sigma},
          {"max_len", atlas.max_len},
          {"classes", records}};
}

void save_atlas(const AffineWeylGroup& g, const Atlas& atlas, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write atlas to " + path);
  out << atlas_to_json(g, atlas).dump(2) << '\n';
  if (!out) throw ConfigError("failed writing atlas to " + path);
}

LoadedAtlas atlas_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema_version")) throw ParseError("atlas has no schema_version");
  if (j["schema_version"] != kAtlasSchemaVersion) {
    throw ParseError("atlas schema_version " + j["schema_version"].dump() + " is not " +
                     std::to_string(kAtlasSchemaVersion));
  }
  for (const char* key : {"cartan", "sigma", "max_len", "classes"}) {
    if (!j.contains(key)) throw ParseError(std::string("atlas is missing '") + key + "'");
  }
  LoadedAtlas out;
  out.group = std::make_unique<AffineWeylGroup>(cartan::parse_cartan_config(j["cartan"].get<std::string>()));
  const auto& g = *out.group;
  out.sigma = g.parse_auto(j["sigma"].get<std::string>());
  out.atlas.cartan_config = g.config_string();
  out.atlas.sigma = g.format_auto(out.sigma);
  out.atlas.max_len = j["max_len"].get<int>();

  for (const auto& rec : j["classes"]) {
    classes::StraightClass c;
    c.invariant = invariant_from_json(rec, g.rank());
    if (!rec.contains("min_length") || !rec["min_length"].is_number_integer() || !rec.contains("representative") ||
        !rec["representative"].is_string()) {
      throw ParseError("malformed atlas record " + rec.dump());
    }
    c.min_length = rec["min_length"].get<int>();
    c.representative = g.parse(rec["representative"].get<std::string>());
    const Rational expected = classes::newton_length(g.roots(), c.invariant.nu);
    if (Rational(c.min_length) != expected) {
      throw VerificationError("atlas record " + classes::to_string(c.invariant) + " has min_length " +
                              std::to_string(c.min_length) + " but <nu, 2rho> = " + to_string(expected));
    }
    if (g.length(c.representative) != c.min_length) {
      throw VerificationError("atlas representative " + g.format(c.representative) + " does not have length " +
                              std::to_string(c.min_length));
    }
    out.atlas.classes.push_back(std::move(c));
  }
  return out;
}

LoadedAtlas load_atlas(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read atlas " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("atlas " + path + " is not valid JSON: " + e.what());
  }
  return atlas_from_json(j);
}

bool atlas_equal(const Atlas& a, const Atlas& b) {
  if (a.cartan_config != b.cartan_config || a.sigma != b.sigma || a.max_len != b.max_len ||
      a.classes.size() != b.classes.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const auto &x = a.classes[i], &y = b.classes[i];
    if (!(x.invariant == y.invariant) || x.min_length != y.min_length || !(x.representative == y.representative)) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> verify_atlas(const LoadedAtlas& loaded) {
  const auto& g = *loaded.group;
  std::vector<std::string> diffs;
  for (const auto& c : loaded.atlas.classes) {
    if (!(classes::class_invariant(g, c.representative, loaded.sigma) == c.invariant)) {
      diffs.push_back("representative " + g.format(c.representative) + " does not have invariant " +
                      classes::to_string(c.invariant));
    }
  }
  const Atlas fresh = build_atlas(g, loaded.sigma, loaded.atlas.max_len);
  auto describe = [](const classes::StraightClass& c) {
    return classes::to_string(c.invariant) + ";min_length=" + std::to_string(c.min_length);
  };
  for (const auto& c : fresh.classes) {
    auto it = std::find_if(loaded.atlas.classes.begin(), loaded.atlas.classes.end(),
                           [&](const auto& d) { return d.invariant == c.invariant && d.min_length == c.min_length; });
    if (it == loaded.atlas.classes.end()) diffs.push_back("missing class " + describe(c));
  }
  for (const auto& c : loaded.atlas.classes) {
    auto it = std::find_if(fresh.classes.begin(), fresh.classes.end(),
                           [&](const auto& d) { return d.invariant == c.invariant && d.min_length == c.min_length; });
    if (it == fresh.classes.end()) diffs.push_back("unexpected class " + describe(c));
  }
  return diffs;
}

}  // namespace adlv
