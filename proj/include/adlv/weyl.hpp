#pragma once

// The extended affine Weyl group W~ = X x| W_0 = W_aff x| Omega.
//
// An element t^lambda u is stored structurally: lambda by its pairings
// <lambda, alpha_j> with the simple roots (integers, since X lies in the
// coweight lattice) and u by its integer matrix on those same coordinates.
// Words over the affine simple reflections are derived views.
//
// The affine node is s_0 = t^{theta^vee} s_theta with theta the highest
// root; Omega generators pi_k = t^{omega_k^vee} u_k are indexed by minuscule
// nodes k.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "adlv/cartan.hpp"

namespace adlv::weyl {

class ExtAffElt {
 public:
  using Storage = boost::container::small_vector<std::int32_t, 20>;

  ExtAffElt() = default;
  static ExtAffElt identity(int rank);

  int rank() const { return rank_; }
  /// <lambda, alpha_j>, 0-based j.
  std::int32_t lambda(int j) const { return data_[j]; }
  std::int32_t& lambda(int j) { return data_[j]; }
  /// Entry (i, j) of the finite part acting on pairing coordinates.
  std::int32_t fin(int i, int j) const { return data_[rank_ + i * rank_ + j]; }
  std::int32_t& fin(int i, int j) { return data_[rank_ + i * rank_ + j]; }

  bool has_trivial_finite_part() const;
  bool is_identity() const;

  const Storage& raw() const { return data_; }
  std::size_t hash() const;

  bool operator==(const ExtAffElt& o) const { return data_ == o.data_; }
  bool operator<(const ExtAffElt& o) const { return data_ < o.data_; }

 private:
  std::uint8_t rank_ = 0;
  Storage data_;
};

struct ExtAffEltHash {
  std::size_t operator()(const ExtAffElt& w) const { return w.hash(); }
};

/// sigma = Ad(tau) o delta with delta a finite diagram automorphism and tau
/// in Omega. Every supported automorphism has a unique such form.
struct GroupAuto {
  std::vector<int> delta;  // delta[i] = image of finite node i (0-based)
  std::size_t inner = 0;   // index into AffineWeylGroup::omega_elements()

  bool operator==(const GroupAuto&) const = default;
};

/// Reduced word of the W_aff-part plus the Omega label (0 = trivial), with
/// w = s_{letters[0]} ... s_{letters[k-1]} * pi_{omega}.
struct Word {
  std::vector<int> letters;
  int omega = 0;

  bool operator==(const Word&) const = default;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(cartan::Cartan cartan);

  AffineWeylGroup(const AffineWeylGroup&) = delete;
  AffineWeylGroup& operator=(const AffineWeylGroup&) = delete;

  const cartan::Cartan& cartan() const { return cartan_; }
  const cartan::RootSystem& roots() const { return cartan_.roots; }
  int rank() const { return rank_; }
  cartan::Lattice lattice() const { return cartan_.datum.lattice; }
  std::string config_string() const { return cartan_.datum.config_string(); }

  // Group law.
  ExtAffElt identity() const { return ExtAffElt::identity(rank_); }
  ExtAffElt simple_refl(int i) const;
  ExtAffElt omega_gen(int label) const;
  ExtAffElt mul(const ExtAffElt& a, const ExtAffElt& b) const;
  ExtAffElt inv(const ExtAffElt& w) const;
  ExtAffElt left_mul_simple(int i, const ExtAffElt& w) const;
  ExtAffElt right_mul_simple(const ExtAffElt& w, int i) const;
  /// Translation by sum_i coords[i] * (basis vector i of the lattice).
  ExtAffElt translation(const std::vector<std::int64_t>& lattice_coords) const;
  /// Translation by a coweight; throws ConfigError if it is not in X.
  ExtAffElt translation(const cartan::CoweightVec& v) const;

  /// Iwahori-Matsumoto length.
  int length(const ExtAffElt& w) const;
  bool is_left_descent(int i, const ExtAffElt& w) const;
  bool is_right_descent(const ExtAffElt& w, int i) const;

  // Translation and finite parts.
  cartan::CoweightVec translation_part(const ExtAffElt& w) const;
  /// Coordinates of lambda in the lattice basis (only meaningful if in X).
  std::vector<std::int64_t> lattice_coords(const ExtAffElt& w) const;
  /// Reduced word (1-based finite nodes) of the finite part u.
  std::vector<int> finite_word(const ExtAffElt& w) const;

  // Omega.
  const std::vector<ExtAffElt>& omega_elements() const { return omega_; }
  /// omega_labels()[k] is the node label of omega_elements()[k]; 0 for e.
  const std::vector<int>& omega_labels() const { return omega_labels_; }
  std::size_t omega_index(const ExtAffElt& w) const;
  std::size_t omega_index_of_label(int label) const;
  /// x with w = x * omega(w), x in W_aff.
  ExtAffElt waff_part(const ExtAffElt& w) const;
  const ExtAffElt& omega_inverse(std::size_t index) const { return omega_inv_[index]; }

  // Words.
  Word as_word(const ExtAffElt& w) const;
  ExtAffElt from_word(const std::vector<int>& letters, int omega_label = 0) const;
  ExtAffElt from_word(const Word& word) const { return from_word(word.letters, word.omega); }

  // Automorphisms.
  GroupAuto identity_auto() const;
  /// delta given 1-based; throws ConfigError unless it preserves the Cartan matrix.
  GroupAuto diagram_auto(const std::vector<int>& perm_one_based) const;
  GroupAuto inner_auto(int omega_label) const;
  /// a o b.
  GroupAuto compose(const GroupAuto& a, const GroupAuto& b) const;
  GroupAuto power(const GroupAuto& a, int n) const;
  bool is_identity(const GroupAuto& a) const { return a == identity_auto(); }
  ExtAffElt apply_auto(const GroupAuto& sigma, const ExtAffElt& w) const;
  /// p with sigma(s_i) = s_{p[i]}, i in 0..rank.
  std::vector<int> affine_permutation(const GroupAuto& sigma) const;
  /// Order of sigma as an automorphism of W~.
  int order(const GroupAuto& sigma) const;
  /// Order of the permutation sigma induces on the affine Dynkin diagram.
  int affine_diagram_order(const GroupAuto& sigma) const;

  /// w sigma(w) ... sigma^{n-1}(w), n >= 1.
  ExtAffElt twisted_power(const ExtAffElt& w, int n, const GroupAuto& sigma) const;

  // Bruhat order.
  bool bruhat_leq(const ExtAffElt& a, const ExtAffElt& b) const;
  /// {x : x <= w}, sorted by (length, discovery order).
  std::vector<ExtAffElt> bruhat_interval(const ExtAffElt& w) const;
  /// Same, using the supplied reduced word of w's W_aff-part.
  std::vector<ExtAffElt> bruhat_interval(const ExtAffElt& w, const std::vector<int>& reduced_word) const;

  // Enumeration.
  /// All x in W_aff with l(x) = len, in deterministic BFS order. Cached; safe
  /// to call concurrently.
  const std::vector<ExtAffElt>& waff_layer(int len) const;
  /// All w in W~ with l(w) <= max_len: by length, then Omega, then layer order.
  std::vector<ExtAffElt> elements_upto(int max_len) const;

  // Text forms.
  std::string format(const ExtAffElt& w) const;
  /// Element grammar: whitespace-separated e, s<i>, pi<k>, t[c1,...,cr],
  /// multiplied left to right.
  ExtAffElt parse(std::string_view text) const;
  std::string format_auto(const GroupAuto& sigma) const;
  /// "id", "swap(i,j)", "perm(p1,...,pr)", "ad:pi<k>", joined by '*'
  /// (composition, rightmost applied first).
  GroupAuto parse_auto(std::string_view text) const;

 private:
  bool in_coroot_lattice(const std::vector<std::int64_t>& pairings) const;
  bool in_lattice(const std::vector<std::int64_t>& pairings) const;
  int root_sign_after_inverse(const ExtAffElt& w, const cartan::RootVec& alpha) const;
  ExtAffElt apply_delta(const std::vector<int>& delta, const ExtAffElt& w) const;

  cartan::Cartan cartan_;
  int rank_;
  std::vector<ExtAffElt> simple_;
  std::vector<int> theta_;         // highest root, simple-root coords
  std::vector<ExtAffElt> omega_;   // omega_[0] = e
  std::vector<ExtAffElt> omega_inv_;
  std::vector<int> omega_labels_;
  std::vector<std::int64_t> coroot_adj_;  // adj(C^T), for Q^vee membership
  std::int64_t coroot_det_ = 1;

  mutable std::mutex layer_mutex_;
  mutable std::deque<std::vector<ExtAffElt>> layers_;
};

}  // namespace adlv::weyl
