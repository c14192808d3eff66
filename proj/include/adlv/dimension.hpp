#pragma once

// dim X_w(b_w) by three routes:
//   reduction  l(w) - l(O_w), O_w from the minimal-length recursion
//   bruhat     l(w) - <nu, 2rho> for the maximum of {[x] : x <= w}
//   demazure   l(w) - lim l(w^{*sigma,n}) / n

#include <optional>

#include "adlv/classes.hpp"
#include "adlv/demazure.hpp"
#include "adlv/error.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

using weyl::AffineWeylGroup;
using weyl::ExtAffElt;
using weyl::GroupAuto;

struct DimReport {
  ExtAffElt w;
  int length_w = 0;
  classes::BGInvariant generic_invariant;  // reduction route
  classes::BGInvariant bruhat_invariant;
  int len_Ow = 0;
  int dim_reduction = 0;
  int dim_bruhat = 0;
  std::optional<int> dim_demazure;
  demazure::IncrementTrace trace;
  bool agree = false;
};

struct DimOptions {
  int horizon = demazure::kDefaultHorizon;
  classes::SearchOptions search;
  /// Throw RouteMismatch when the routes disagree.
  bool fatal_mismatch = true;
};

class RouteMismatch : public VerificationError {
 public:
  explicit RouteMismatch(DimReport report);
  const DimReport& report() const { return report_; }

 private:
  DimReport report_;
};

DimReport dim_generic(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                      const DimOptions& opts = {});

/// w = x tau with x in W_aff, tau in Omega; theta = Ad(tau) o sigma.
struct WaffReduction {
  ExtAffElt x;
  ExtAffElt tau;
  GroupAuto theta;
};

WaffReduction reduce_to_waff(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma);

}  // namespace adlv
