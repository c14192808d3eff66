#pragma once

// sigma-conjugacy combinatorics on W~: Newton points and Kottwitz classes,
// reduction to minimal length, straightness, straight classes keyed by
// their (kappa, nu) invariant, and the generic class O_w.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adlv/cartan.hpp"
#include "adlv/rational.hpp"
#include "adlv/weyl.hpp"

namespace adlv::classes {

using weyl::AffineWeylGroup;
using weyl::ExtAffElt;
using weyl::GroupAuto;

struct NewtonPoint {
  cartan::CoweightVec nu;  // dominant, simple-coroot basis
  bool operator==(const NewtonPoint&) const = default;
};

/// Class in Omega_sigma = Omega / {w sigma(w)^{-1}}, named by the smallest
/// Omega label in the coset (0 for the trivial class).
struct KottwitzClass {
  int label = 0;
  bool operator==(const KottwitzClass&) const = default;
};

struct BGInvariant {
  KottwitzClass kappa;
  NewtonPoint nu;
  bool operator==(const BGInvariant&) const = default;
};

/// kappa equal and nu <= nu' in the dominance order.
bool bg_leq(const cartan::RootSystem& rs, const BGInvariant& a, const BGInvariant& b);
/// Canonical text, e.g. "kappa=1;nu=[1/2]".
std::string to_string(const BGInvariant& inv);
/// Strict weak order used for sorting atlases.
bool invariant_less(const BGInvariant& a, const BGInvariant& b);

struct StraightClass {
  BGInvariant invariant;
  int min_length = 0;
  ExtAffElt representative;
};

/// <nu, 2 rho>; integral for every Newton point of W~.
Rational newton_length(const cartan::RootSystem& rs, const NewtonPoint& nu);

/// Label of the Omega_sigma coset for each Omega index.
std::vector<int> kottwitz_labels(const AffineWeylGroup& g, const GroupAuto& sigma);

struct InvariantDetail {
  BGInvariant invariant;
  int m = 1;                        // w^{sigma,m} = t^mu and sigma^m = id
  std::vector<std::int64_t> mu;     // pairings <mu, alpha_j>
};

InvariantDetail class_invariant_detail(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma);
BGInvariant class_invariant(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma);

/// x w sigma(x)^{-1}.
ExtAffElt sigma_conjugate(const AffineWeylGroup& g, const ExtAffElt& x, const ExtAffElt& w,
                          const GroupAuto& sigma);

enum class TieBreak { lexicographic, reverse };

struct SearchOptions {
  std::size_t visited_cap = 1'000'000;
  TieBreak tie_break = TieBreak::lexicographic;
};

/// One move y -> s y sigma(s).
struct ReductionMove {
  int simple = 0;
  ExtAffElt result;
  int length = 0;
};

struct Reduction {
  ExtAffElt w_min;
  std::vector<ReductionMove> path;
};

/// A w' reached from w by length-preserving moves (path) together with a
/// simple s such that s w' sigma(s) is shorter.
struct Descent {
  ExtAffElt w_prime;
  int simple = 0;
  std::vector<ReductionMove> path;
};

/// Searches the length-preserving sigma-conjugation component of w for a
/// strictly length-decreasing move. nullopt certifies that w has minimal
/// length in its sigma-conjugacy class. Throws ResourceError past the cap.
std::optional<Descent> find_descent(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                                    const SearchOptions& opts = {});

/// All elements reachable from w by length-preserving moves (w first).
std::vector<ExtAffElt> level_component(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                                       std::size_t cap = 100'000);

Reduction reduce_min(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                     const SearchOptions& opts = {});

bool is_min_length(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                   const SearchOptions& opts = {});

/// l(w) = <nu_w, 2 rho>.
bool is_straight(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma);
/// l(w^{sigma,n}) = n l(w) for n = 1..n_max.
bool is_straight_by_powers(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma, int n_max);

/// One class per invariant among sigma-straight elements of length <= max_len,
/// sorted by (min_length, kappa, nu).
std::vector<StraightClass> straight_classes_upto(const AffineWeylGroup& g, int max_len, const GroupAuto& sigma);

/// The straight class with the given invariant, with a deterministic
/// minimal-length representative. Memoized per (group, sigma, invariant).
StraightClass straight_class_for(const AffineWeylGroup& g, const BGInvariant& inv, const GroupAuto& sigma);

/// O <=_sigma w: some x <= w is a minimal-length (straight) member of O.
bool preceq(const AffineWeylGroup& g, const StraightClass& o, const ExtAffElt& w, const GroupAuto& sigma);

/// O_w by the reduction recursion.
StraightClass generic_class(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                            const SearchOptions& opts = {});
/// The invariant of O_w only (no representative search).
BGInvariant generic_invariant(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                              const SearchOptions& opts = {});

/// The unique maximum of {[x] : x <= w}. Throws VerificationError if the
/// maximum is not unique.
StraightClass generic_class_bruhat(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma);
BGInvariant generic_invariant_bruhat(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma);

}  // namespace adlv::classes
