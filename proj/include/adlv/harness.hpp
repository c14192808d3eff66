#pragma once

// Exhaustive enumeration harness: runs a set of checks on every element of
// length <= max_len and reports one JSON record per element.

#include <cstddef>
#include <string>
#include <vector>

#include "adlv/classes.hpp"
#include "adlv/demazure.hpp"
#include "adlv/json_io.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

enum class Check { main, bruhat, hecke, all };

Check parse_check(const std::string& text);
std::string to_string(Check c);

struct HarnessOptions {
  int max_len = 0;
  Check check = Check::main;
  int horizon = demazure::kDefaultHorizon;
  int workers = 1;
  classes::SearchOptions search;
};

struct ElementResult {
  std::string element;
  Json record;
  std::vector<std::string> failures;
  bool resource_error = false;
};

struct HarnessResult {
  std::vector<ElementResult> results;  // enumeration order
  std::size_t failures = 0;            // elements with at least one failure
  std::size_t resource_errors = 0;
  Json summary;
};

/// Checks for a single element. Never throws for mathematical failures;
/// those are recorded in failures.
ElementResult check_element(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                            const HarnessOptions& opts);

HarnessResult run_harness(const AffineWeylGroup& g, const GroupAuto& sigma, const HarnessOptions& opts);

}  // namespace adlv
