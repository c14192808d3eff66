#pragma once

// Versioned JSON cache of straight-class atlases.
//
// {
//   "schema_version": 1,
//   "cartan": "type=A1;lattice=coroot",
//   "sigma": "id",
//   "max_len": 6,
//   "classes": [{"kappa": 0, "nu": ["1/1"], "min_length": 2, "representative": "s0 s1"}, ...]
// }

#include <memory>
#include <string>
#include <vector>

#include "adlv/classes.hpp"
#include "adlv/json_io.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

inline constexpr int kAtlasSchemaVersion = 1;

struct Atlas {
  std::string cartan_config;
  std::string sigma;
  int max_len = 0;
  std::vector<classes::StraightClass> classes;
};

Atlas build_atlas(const AffineWeylGroup& g, const GroupAuto& sigma, int max_len);

Json atlas_to_json(const AffineWeylGroup& g, const Atlas& atlas);
void save_atlas(const AffineWeylGroup& g, const Atlas& atlas, const std::string& path);

struct LoadedAtlas {
  std::unique_ptr<AffineWeylGroup> group;
  GroupAuto sigma;
  Atlas atlas;
};

/// Validates schema_version and each record (min_length = <nu, 2rho>, and the
/// representative has that length). Throws ParseError or VerificationError.
LoadedAtlas atlas_from_json(const Json& j);
LoadedAtlas load_atlas(const std::string& path);

/// Same classes (invariant, min_length, representative) in the same order.
bool atlas_equal(const Atlas& a, const Atlas& b);

/// Differences between a loaded atlas and a fresh computation; empty when
/// they agree.
std::vector<std::string> verify_atlas(const LoadedAtlas& loaded);

}  // namespace adlv
