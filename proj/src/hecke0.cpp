#include "adlv/hecke0.hpp"

#include <algorithm>

#include "adlv/demazure.hpp"

namespace adlv::hecke0 {

SignedElement t_product(const AffineWeylGroup& g, const ExtAffElt& x, const ExtAffElt& y) {
  ExtAffElt z = demazure::dem_prod(g, x, y);
  const int drop = g.length(x) + g.length(y) - g.length(z);
  return {drop % 2 == 0 ? 1 : -1, std::move(z)};
}

CocenterImage cocenter_image(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                             const classes::SearchOptions& opts) {
  CocenterImage out{1, w, {}};
  while (auto d = classes::find_descent(g, out.rep, sigma, opts)) {
    out.rep = g.left_mul_simple(d->simple, d->w_prime);
    out.sign = -out.sign;
  }
  out.class_invariant = classes::class_invariant(g, out.rep, sigma);
  return out;
}

bool tilde_equivalent(const AffineWeylGroup& g, const ExtAffElt& a, const ExtAffElt& b, const GroupAuto& sigma,
                      std::size_t cap) {
  const int len = g.length(a);
  if (g.length(b) != len) return false;
  const auto component = classes::level_component(g, a, sigma, cap);
  for (const auto& tau : g.omega_elements()) {
    ExtAffElt candidate = classes::sigma_conjugate(g, tau, b, sigma);
    if (std::find(component.begin(), component.end(), candidate) != component.end()) return true;
  }
  return false;
}

}  // namespace adlv::hecke0
