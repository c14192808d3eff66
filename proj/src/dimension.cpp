#include "adlv/dimension.hpp"

namespace adlv {

RouteMismatch::RouteMismatch(DimReport report)
    : VerificationError("dimension routes disagree: reduction=" + std::to_string(report.dim_reduction) +
                        " bruhat=" + std::to_string(report.dim_bruhat) + " demazure=" +
                        (report.dim_demazure ? std::to_string(*report.dim_demazure) : std::string("unset"))),
      report_(std::move(report)) {}

DimReport dim_generic(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                      const DimOptions& opts) {
  const auto& rs = g.roots();
  DimReport r;
  r.w = w;
  r.length_w = g.length(w);

  r.generic_invariant = classes::generic_invariant(g, w, sigma, opts.search);
  const Rational len_o = classes::newton_length(rs, r.generic_invariant.nu);
  r.len_Ow = static_cast<int>(len_o.numerator() / len_o.denominator());
  r.dim_reduction = r.length_w - r.len_Ow;

  r.bruhat_invariant = classes::generic_invariant_bruhat(g, w, sigma);
  const Rational len_b = classes::newton_length(rs, r.bruhat_invariant.nu);
  r.dim_bruhat = r.length_w - static_cast<int>(len_b.numerator() / len_b.denominator());

  r.trace = demazure::dem_limit(g, w, sigma, opts.horizon);
  if (r.trace.limit && is_integral(*r.trace.limit)) {
    r.dim_demazure = r.length_w - static_cast<int>(r.trace.limit->numerator());
  }

  const bool exact_routes = is_integral(len_o) && is_integral(len_b) && r.dim_reduction == r.dim_bruhat;
  const bool demazure_ok = r.trace.limit ? (r.dim_demazure && *r.dim_demazure == r.dim_reduction) : true;
  r.agree = exact_routes && demazure_ok && r.dim_reduction >= 0;
  if (!r.agree && opts.fatal_mismatch) throw RouteMismatch(r);
  return r;
}

WaffReduction reduce_to_waff(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma) {
  const std::size_t k = g.omega_index(w);
  GroupAuto ad_tau = g.identity_auto();
  ad_tau.inner = k;
  return {g.waff_part(w), g.omega_elements()[k], g.compose(ad_tau, sigma)};
}

}  // namespace adlv
