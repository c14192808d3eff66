#pragma once

// The 0-Hecke algebra H_0 of W~ on the basis {t_w}: t_w t_w' = t_{ww'} when
// lengths add, t_s^2 = -t_s. Only images of single basis elements in the
// sigma-cocenter are computed; the cocenter is never materialized.

#include <cstddef>

#include "adlv/classes.hpp"
#include "adlv/weyl.hpp"

namespace adlv::hecke0 {

using weyl::AffineWeylGroup;
using weyl::ExtAffElt;
using weyl::GroupAuto;

struct SignedElement {
  int sign = 1;
  ExtAffElt element;
};

/// t_x t_y = (-1)^{l(x)+l(y)-l(x*y)} t_{x*y}.
SignedElement t_product(const AffineWeylGroup& g, const ExtAffElt& x, const ExtAffElt& y);

/// Image of t_w in the sigma-cocenter: sign times t_Sigma for the class of
/// the minimal-length element rep.
struct CocenterImage {
  int sign = 1;
  ExtAffElt rep;
  classes::BGInvariant class_invariant;
};

/// Follows t_w == t_{w'} = t_s t_{sw'} == t_{sw'} t_{sigma(s)} = -t_{sw'} down to
/// a minimal-length element.
CocenterImage cocenter_image(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                             const classes::SearchOptions& opts = {});

/// Bounded check of a ~sigma-equivalence b: a is reachable from
/// tau b sigma(tau)^{-1} by length-preserving moves for some tau in Omega.
/// Throws ResourceError when a component exceeds cap.
bool tilde_equivalent(const AffineWeylGroup& g, const ExtAffElt& a, const ExtAffElt& b, const GroupAuto& sigma,
                      std::size_t cap = 100'000);

}  // namespace adlv::hecke0
