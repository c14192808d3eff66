#pragma once

// Root data for irreducible finite types and the coweight lattices used to
// build extended affine Weyl groups.
//
// Coordinates:
//   roots      integer vectors in the basis of simple roots
//   coroots    integer vectors in the basis of simple coroots
//   coweights  rational vectors in the basis of simple coroots (CoweightVec)
//
// The Cartan matrix follows Bourbaki: cartan(i, j) = <alpha_i^vee, alpha_j>.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adlv/rational.hpp"

namespace adlv::cartan {

enum class Lattice { coroot, coweight };

std::string to_string(Lattice lattice);

using RootVec = std::vector<int>;

struct CoweightVec {
  RationalVec coords;  // simple-coroot basis

  std::size_t size() const { return coords.size(); }
  bool operator==(const CoweightVec&) const = default;

  static CoweightVec zero(int rank) { return {RationalVec(rank, Rational(0))}; }
  CoweightVec operator+(const CoweightVec& o) const;
  CoweightVec operator-(const CoweightVec& o) const;
  CoweightVec operator/(const Rational& d) const;
};

struct CartanDatum {
  char family = 'A';
  int rank = 1;
  std::vector<int> matrix;  // row-major rank x rank
  Lattice lattice = Lattice::coroot;

  int operator()(int i, int j) const { return matrix[i * rank + j]; }
  /// "A2", "G2", ...
  std::string type_label() const;
  /// "type=A2;lattice=coweight"
  std::string config_string() const;
};

class RootSystem {
 public:
  explicit RootSystem(const CartanDatum& datum);

  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  /// Positive roots ordered by height, simple roots first.
  const std::vector<RootVec>& positive_roots() const { return positive_roots_; }
  /// positive_coroots()[k] is the coroot of positive_roots()[k].
  const std::vector<RootVec>& positive_coroots() const { return positive_coroots_; }
  RootVec simple_root(int i) const;
  RootVec simple_coroot(int i) const;
  const RootVec& highest_root() const { return positive_roots_[highest_]; }
  const RootVec& highest_coroot() const { return positive_coroots_[highest_]; }
  /// Sum of the positive roots.
  const RootVec& two_rho() const { return two_rho_; }
  /// Nodes whose coefficient in the highest root is 1 (minuscule coweights).
  const std::vector<int>& minuscule_nodes() const { return minuscule_; }

  CoweightVec fundamental_coweight(int i) const;
  CoweightVec coroot_as_coweight(const RootVec& coroot) const;

  /// <v, alpha> for alpha in the root lattice (simple-root coordinates).
  Rational pair(const CoweightVec& v, const RootVec& alpha) const;
  /// (<v, alpha_1>, ..., <v, alpha_r>).
  RationalVec simple_pairings(const CoweightVec& v) const;
  /// Inverse of simple_pairings.
  CoweightVec from_simple_pairings(const RationalVec& pairings) const;

  CoweightVec reflect(const CoweightVec& v, int i) const;
  bool is_dominant(const CoweightVec& v) const;
  bool is_root(const RootVec& alpha) const;

 private:
  void check_dimension(std::size_t n) const;

  int rank_;
  std::vector<int> cartan_;
  std::vector<RootVec> positive_roots_;
  std::vector<RootVec> positive_coroots_;
  std::size_t highest_ = 0;
  RootVec two_rho_;
  std::vector<int> minuscule_;
  std::vector<Rational> inverse_transpose_;  // (C^T)^{-1}, row-major
};

struct Cartan {
  CartanDatum datum;
  RootSystem roots;
};

/// Throws ConfigError for an invalid (family, rank).
Cartan build_cartan(char family, int rank, Lattice lattice);

/// Parses "type=<family><rank>;lattice=<coroot|coweight>". The lattice
/// clause is optional and defaults to coroot.
Cartan parse_cartan_config(std::string_view config);

/// Number of positive roots of an irreducible type.
std::size_t expected_positive_root_count(char family, int rank);

/// The dominant element of the W_0-orbit of v, together with a word
/// i_1 ... i_k such that s_{i_1} ... s_{i_k} maps v to it.
std::pair<CoweightVec, std::vector<int>> dominant_rep(const RootSystem& rs,
                                                      const CoweightVec& v);

/// Dominance order on dominant coweights: v2 - v1 is a non-negative
/// combination of simple coroots. Throws ConfigError if an input is not
/// dominant.
bool dominance_leq(const RootSystem& rs, const CoweightVec& v1, const CoweightVec& v2);

}  // namespace adlv::cartan
