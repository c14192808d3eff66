#pragma once

// The 0-Hecke (Demazure) monoid structure on W~ and sigma-twisted Demazure
// powers.

#include <optional>
#include <vector>

#include "adlv/rational.hpp"
#include "adlv/weyl.hpp"

namespace adlv::demazure {

using weyl::AffineWeylGroup;
using weyl::ExtAffElt;
using weyl::GroupAuto;

/// a * b, folding a reduced word of b (then its Omega part) into a from
/// the right: acc <- acc s whenever that is longer.
ExtAffElt dem_prod(const AffineWeylGroup& g, const ExtAffElt& a, const ExtAffElt& b);

/// a * b, folding a reduced word of a into Omega(a) b from the left.
ExtAffElt dem_prod_left_fold(const AffineWeylGroup& g, const ExtAffElt& a, const ExtAffElt& b);

/// w * sigma(w) * ... * sigma^{n-1}(w), n >= 1.
ExtAffElt dem_twisted_power(const AffineWeylGroup& g, const ExtAffElt& w, int n, const GroupAuto& sigma);

/// lengths[n-1] = l(w^{*sigma,n}); increments[n-1] = lengths[n] - lengths[n-1].
struct IncrementTrace {
  std::vector<int> lengths;
  std::vector<int> increments;
  std::optional<int> stabilized_at;  // 1-based n_0
  std::optional<Rational> limit;
  /// Set when the limit came from the period-d fallback rather than an
  /// eventually constant increment.
  bool periodic = false;
  int window = 0;
};

inline constexpr int kDefaultHorizon = 200;

/// Computes Demazure powers until the increment has been constant for
/// max(3d, 6) consecutive steps (d = order of sigma on the affine diagram)
/// or until horizon_max powers were computed. Without stabilization the
/// limit is left unset. Throws ConfigError if horizon_max < 4d.
IncrementTrace dem_limit(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                         int horizon_max = kDefaultHorizon);

/// l(w^{*sigma,n}) for n = 1..count.
std::vector<int> dem_power_lengths(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                                   int count);

}  // namespace adlv::demazure
