#include "adlv/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "adlv/error.hpp"

namespace adlv::weyl {

using cartan::CoweightVec;
using cartan::Lattice;

// ---------------------------------------------------------------------------
// ExtAffElt

ExtAffElt ExtAffElt::identity(int rank) {
  ExtAffElt w;
  w.rank_ = static_cast<std::uint8_t>(rank);
  w.data_.assign(rank + rank * rank, 0);
  for (int i = 0; i < rank; ++i) w.fin(i, i) = 1;
  return w;
}

bool ExtAffElt::has_trivial_finite_part() const {
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (fin(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool ExtAffElt::is_identity() const {
  for (int i = 0; i < rank_; ++i) {
    if (lambda(i) != 0) return false;
  }
  return has_trivial_finite_part();
}

std::size_t ExtAffElt::hash() const { return boost::hash_range(data_.begin(), data_.end()); }

// ---------------------------------------------------------------------------
// Construction

namespace {

// Finite part only: left multiplication by the finite simple reflection
// s_i acting on pairing coordinates, (s_i mu)_j = mu_j - C[i][j] mu_i.
void finite_left_reflect(const cartan::RootSystem& rs, int i, ExtAffElt& w) {
  const int r = rs.rank();
  for (int j = 0; j < r; ++j) {
    const int c = rs.cartan(i, j);
    if (j == i || c == 0) continue;
    for (int k = 0; k < r; ++k) w.fin(j, k) -= c * w.fin(i, k);
  }
  for (int k = 0; k < r; ++k) w.fin(i, k) = -w.fin(i, k);
}

ExtAffElt finite_product(const ExtAffElt& a, const ExtAffElt& b) {
  const int r = a.rank();
  ExtAffElt out = ExtAffElt::identity(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::int32_t s = 0;
      for (int k = 0; k < r; ++k) s += a.fin(i, k) * b.fin(k, j);
      out.fin(i, j) = s;
    }
  }
  return out;
}

// Row sums of the finite part: the sign of sum_j a_j rowsum_j is the sign
// of u^{-1} alpha for the root alpha = sum_j a_j alpha_j.
boost::container::small_vector<std::int32_t, 8> row_sums(const ExtAffElt& w) {
  const int r = w.rank();
  boost::container::small_vector<std::int32_t, 8> rs(r, 0);
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) rs[j] += w.fin(j, k);
  }
  return rs;
}

// Longest element of the parabolic subgroup on `nodes` (0-based).
ExtAffElt longest_element(const cartan::RootSystem& rs, const std::vector<int>& nodes) {
  ExtAffElt u = ExtAffElt::identity(rs.rank());
  for (bool grew = true; grew;) {
    grew = false;
    auto sums = row_sums(u);
    for (int i : nodes) {
      if (sums[i] > 0) {  // u^{-1} alpha_i > 0, so s_i u is longer
        finite_left_reflect(rs, i, u);
        grew = true;
        break;
      }
    }
  }
  return u;
}

}  // namespace

AffineWeylGroup::AffineWeylGroup(cartan::Cartan cartan)
    : cartan_(std::move(cartan)), rank_(cartan_.datum.rank) {
  const auto& rs = cartan_.roots;
  const int r = rank_;
  theta_ = rs.highest_root();

  // Q^vee membership: adj(C^T) lambda = 0 mod det(C^T).
  {
    std::vector<Rational> inv(r * r);
    for (int j = 0; j < r; ++j) {
      RationalVec e(r, Rational(0));
      e[j] = 1;
      auto col = rs.from_simple_pairings(e);
      for (int i = 0; i < r; ++i) inv[i * r + j] = col.coords[i];
    }
    std::int64_t den = 1;
    for (const auto& q : inv) den = std::lcm(den, q.denominator());
    coroot_det_ = den;
    coroot_adj_.resize(r * r);
    for (int k = 0; k < r * r; ++k) coroot_adj_[k] = (inv[k] * den).numerator();
  }

  // Simple reflections s_0, ..., s_r.
  simple_.push_back(identity());
  {
    ExtAffElt& s0 = simple_.back();
    const auto& coroot = rs.highest_coroot();
    std::vector<std::int32_t> theta_vee(r, 0);
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) theta_vee[j] += coroot[k] * rs.cartan(k, j);
    }
    for (int j = 0; j < r; ++j) {
      s0.lambda(j) = theta_vee[j];
      for (int k = 0; k < r; ++k) s0.fin(j, k) = (j == k ? 1 : 0) - theta_vee[j] * theta_[k];
    }
  }
  for (int i = 0; i < r; ++i) {
    ExtAffElt s = identity();
    finite_left_reflect(rs, i, s);
    simple_.push_back(s);
  }

  // Omega.
  omega_.push_back(identity());
  omega_labels_.push_back(0);
  if (lattice() == Lattice::coweight) {
    std::vector<int> all(r);
    std::iota(all.begin(), all.end(), 0);
    const ExtAffElt w0 = longest_element(rs, all);
    for (int label : rs.minuscule_nodes()) {
      std::vector<int> others;
      for (int i = 0; i < r; ++i) {
        if (i != label - 1) others.push_back(i);
      }
      ExtAffElt pi = finite_product(longest_element(rs, others), w0);
      for (int j = 0; j < r; ++j) pi.lambda(j) = (j == label - 1) ? 1 : 0;
      if (length(pi) != 0) throw VerificationError("Omega generator has positive length");
      omega_.push_back(pi);
      omega_labels_.push_back(label);
    }
  }
  for (const auto& tau : omega_) omega_inv_.push_back(inv(tau));
}

ExtAffElt AffineWeylGroup::simple_refl(int i) const {
  if (i < 0 || i > rank_) throw ConfigError("invalid simple reflection index " + std::to_string(i));
  return simple_[i];
}

ExtAffElt AffineWeylGroup::omega_gen(int label) const {
  return omega_[omega_index_of_label(label)];
}

std::size_t AffineWeylGroup::omega_index_of_label(int label) const {
  auto it = std::find(omega_labels_.begin(), omega_labels_.end(), label);
  if (it == omega_labels_.end()) {
    throw ConfigError("invalid Omega generator pi" + std::to_string(label) + " for " + config_string());
  }
  return static_cast<std::size_t>(it - omega_labels_.begin());
}

// ---------------------------------------------------------------------------
// Group law

ExtAffElt AffineWeylGroup::mul(const ExtAffElt& a, const ExtAffElt& b) const {
  const int r = rank_;
  ExtAffElt out = finite_product(a, b);
  for (int i = 0; i < r; ++i) {
    std::int32_t s = a.lambda(i);
    for (int k = 0; k < r; ++k) s += a.fin(i, k) * b.lambda(k);
    out.lambda(i) = s;
  }
  return out;
}

ExtAffElt AffineWeylGroup::inv(const ExtAffElt& w) const {
  // u^{-1} from a reduced word of u, then t^{-u^{-1} lambda} u^{-1}.
  auto word = finite_word(w);
  ExtAffElt u_inv = identity();
  for (int i : word) finite_left_reflect(roots(), i - 1, u_inv);
  ExtAffElt out = u_inv;
  for (int i = 0; i < rank_; ++i) {
    std::int32_t s = 0;
    for (int k = 0; k < rank_; ++k) s += u_inv.fin(i, k) * w.lambda(k);
    out.lambda(i) = -s;
  }
  return out;
}

ExtAffElt AffineWeylGroup::left_mul_simple(int i, const ExtAffElt& w) const {
  return mul(simple_refl(i), w);
}

ExtAffElt AffineWeylGroup::right_mul_simple(const ExtAffElt& w, int i) const {
  return mul(w, simple_refl(i));
}

ExtAffElt AffineWeylGroup::translation(const std::vector<std::int64_t>& coords) const {
  if (coords.size() != static_cast<std::size_t>(rank_)) {
    throw ConfigError("translation needs " + std::to_string(rank_) + " coordinates");
  }
  ExtAffElt t = identity();
  for (int j = 0; j < rank_; ++j) {
    std::int64_t p = 0;
    if (lattice() == Lattice::coroot) {
      for (int i = 0; i < rank_; ++i) p += coords[i] * roots().cartan(i, j);
    } else {
      p = coords[j];
    }
    t.lambda(j) = static_cast<std::int32_t>(p);
  }
  return t;
}

ExtAffElt AffineWeylGroup::translation(const CoweightVec& v) const {
  auto p = roots().simple_pairings(v);
  std::vector<std::int64_t> pairings;
  for (const auto& q : p) {
    if (!is_integral(q)) throw ConfigError("coweight is not in the lattice");
    pairings.push_back(q.numerator());
  }
  if (!in_lattice(pairings)) throw ConfigError("coweight is not in the lattice");
  ExtAffElt t = identity();
  for (int j = 0; j < rank_; ++j) t.lambda(j) = static_cast<std::int32_t>(pairings[j]);
  return t;
}

bool AffineWeylGroup::in_coroot_lattice(const std::vector<std::int64_t>& pairings) const {
  for (int i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += coroot_adj_[i * rank_ + j] * pairings[j];
    if (s % coroot_det_ != 0) return false;
  }
  return true;
}

bool AffineWeylGroup::in_lattice(const std::vector<std::int64_t>& pairings) const {
  return lattice() == Lattice::coweight || in_coroot_lattice(pairings);
}

// ---------------------------------------------------------------------------
// Length and descents

int AffineWeylGroup::length(const ExtAffElt& w) const {
  // l(t^lambda u) = sum_{a>0, u^{-1}a>0} |<lambda,a>| + sum_{a>0, u^{-1}a<0} |<lambda,a> - 1|
  const auto sums = row_sums(w);
  int len = 0;
  for (const auto& a : roots().positive_roots()) {
    std::int64_t p = 0, s = 0;
    for (int j = 0; j < rank_; ++j) {
      if (a[j] == 0) continue;
      p += static_cast<std::int64_t>(a[j]) * w.lambda(j);
      s += static_cast<std::int64_t>(a[j]) * sums[j];
    }
    len += static_cast<int>(s > 0 ? std::llabs(p) : std::llabs(p - 1));
  }
  return len;
}

bool AffineWeylGroup::is_left_descent(int i, const ExtAffElt& w) const {
  // l(s_i w) < l(w) iff w^{-1}(a_i) < 0, with
  // w^{-1}(alpha + k delta) = u^{-1} alpha + (k + <lambda, alpha>) delta.
  const auto sums = row_sums(w);
  if (i == 0) {
    std::int64_t q = 0, s = 0;
    for (int j = 0; j < rank_; ++j) {
      q += static_cast<std::int64_t>(theta_[j]) * w.lambda(j);
      s += static_cast<std::int64_t>(theta_[j]) * sums[j];
    }
    return q > 1 || (q == 1 && s > 0);
  }
  const int j = i - 1;
  return w.lambda(j) < 0 || (w.lambda(j) == 0 && sums[j] < 0);
}

bool AffineWeylGroup::is_right_descent(const ExtAffElt& w, int i) const {
  return length(right_mul_simple(w, i)) < length(w);
}

// ---------------------------------------------------------------------------
// Parts

CoweightVec AffineWeylGroup::translation_part(const ExtAffElt& w) const {
  RationalVec p(rank_);
  for (int j = 0; j < rank_; ++j) p[j] = w.lambda(j);
  return roots().from_simple_pairings(p);
}

std::vector<std::int64_t> AffineWeylGroup::lattice_coords(const ExtAffElt& w) const {
  std::vector<std::int64_t> out(rank_);
  if (lattice() == Lattice::coweight) {
    for (int j = 0; j < rank_; ++j) out[j] = w.lambda(j);
    return out;
  }
  auto v = translation_part(w);
  for (int j = 0; j < rank_; ++j) out[j] = v.coords[j].numerator() / v.coords[j].denominator();
  return out;
}

std::vector<int> AffineWeylGroup::finite_word(const ExtAffElt& w) const {
  ExtAffElt u = w;
  std::vector<int> word;
  for (;;) {
    auto sums = row_sums(u);
    int i = 0;
    while (i < rank_ && sums[i] >= 0) ++i;
    if (i == rank_) break;
    finite_left_reflect(roots(), i, u);
    word.push_back(i + 1);
  }
  return word;
}

std::size_t AffineWeylGroup::omega_index(const ExtAffElt& w) const {
  std::vector<std::int64_t> diff(rank_);
  for (std::size_t k = 0; k < omega_.size(); ++k) {
    for (int j = 0; j < rank_; ++j) diff[j] = static_cast<std::int64_t>(w.lambda(j)) - omega_[k].lambda(j);
    if (in_coroot_lattice(diff)) return k;
  }
  throw VerificationError("element " + format(w) + " has no Omega component");
}

ExtAffElt AffineWeylGroup::waff_part(const ExtAffElt& w) const {
  std::size_t k = omega_index(w);
  return k == 0 ? w : mul(w, omega_inv_[k]);
}

// ---------------------------------------------------------------------------
// Words

Word AffineWeylGroup::as_word(const ExtAffElt& w) const {
  std::size_t k = omega_index(w);
  ExtAffElt x = k == 0 ? w : mul(w, omega_inv_[k]);
  Word word;
  word.omega = omega_labels_[k];
  for (;;) {
    int i = 0;
    while (i <= rank_ && !is_left_descent(i, x)) ++i;
    if (i > rank_) break;
    x = mul(simple_[i], x);
    word.letters.push_back(i);
  }
  return word;
}

ExtAffElt AffineWeylGroup::from_word(const std::vector<int>& letters, int omega_label) const {
  ExtAffElt w = identity();
  for (int i : letters) w = mul(w, simple_refl(i));
  if (omega_label != 0) w = mul(w, omega_gen(omega_label));
  return w;
}

// ---------------------------------------------------------------------------
// Automorphisms

GroupAuto AffineWeylGroup::identity_auto() const {
  GroupAuto a;
  a.delta.resize(rank_);
  std::iota(a.delta.begin(), a.delta.end(), 0);
  return a;
}

GroupAuto AffineWeylGroup::diagram_auto(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(rank_)) {
    throw ConfigError("diagram automorphism needs " + std::to_string(rank_) + " entries");
  }
  GroupAuto a;
  std::vector<bool> hit(rank_, false);
  for (int p : perm) {
    if (p < 1 || p > rank_ || hit[p - 1]) throw ConfigError("diagram automorphism is not a permutation");
    hit[p - 1] = true;
    a.delta.push_back(p - 1);
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (roots().cartan(i, j) != roots().cartan(a.delta[i], a.delta[j])) {
        throw ConfigError("permutation does not preserve the Cartan matrix");
      }
    }
  }
  return a;
}

GroupAuto AffineWeylGroup::inner_auto(int omega_label) const {
  GroupAuto a = identity_auto();
  a.inner = omega_index_of_label(omega_label);
  return a;
}

ExtAffElt AffineWeylGroup::apply_delta(const std::vector<int>& delta, const ExtAffElt& w) const {
  ExtAffElt out = identity();
  for (int i = 0; i < rank_; ++i) {
    out.lambda(delta[i]) = w.lambda(i);
    for (int j = 0; j < rank_; ++j) out.fin(delta[i], delta[j]) = w.fin(i, j);
  }
  return out;
}

GroupAuto AffineWeylGroup::compose(const GroupAuto& a, const GroupAuto& b) const {
  // Ad(ta) da Ad(tb) db = Ad(ta da(tb)) da db
  GroupAuto c;
  c.delta.resize(rank_);
  for (int i = 0; i < rank_; ++i) c.delta[i] = a.delta[b.delta[i]];
  c.inner = omega_index(mul(omega_[a.inner], apply_delta(a.delta, omega_[b.inner])));
  return c;
}

GroupAuto AffineWeylGroup::power(const GroupAuto& a, int n) const {
  GroupAuto p = identity_auto();
  for (int k = 0; k < n; ++k) p = compose(a, p);
  return p;
}

ExtAffElt AffineWeylGroup::apply_auto(const GroupAuto& sigma, const ExtAffElt& w) const {
  ExtAffElt out = apply_delta(sigma.delta, w);
  if (sigma.inner != 0) out = mul(mul(omega_[sigma.inner], out), omega_inv_[sigma.inner]);
  return out;
}

std::vector<int> AffineWeylGroup::affine_permutation(const GroupAuto& sigma) const {
  std::vector<int> p(rank_ + 1);
  for (int i = 0; i <= rank_; ++i) {
    auto image = apply_auto(sigma, simple_[i]);
    auto it = std::find(simple_.begin(), simple_.end(), image);
    if (it == simple_.end()) throw ConfigError("automorphism does not permute simple reflections");
    p[i] = static_cast<int>(it - simple_.begin());
  }
  return p;
}

int AffineWeylGroup::order(const GroupAuto& sigma) const {
  GroupAuto p = sigma;
  int n = 1;
  while (!is_identity(p)) {
    p = compose(sigma, p);
    ++n;
  }
  return n;
}

int AffineWeylGroup::affine_diagram_order(const GroupAuto& sigma) const {
  auto p = affine_permutation(sigma);
  int ord = 1;
  for (int i = 0; i <= rank_; ++i) {
    int len = 1;
    for (int j = p[i]; j != i; j = p[j]) ++len;
    ord = std::lcm(ord, len);
  }
  return ord;
}

ExtAffElt AffineWeylGroup::twisted_power(const ExtAffElt& w, int n, const GroupAuto& sigma) const {
  if (n < 1) throw ConfigError("twisted power needs n >= 1");
  ExtAffElt acc = w, factor = w;
  for (int k = 1; k < n; ++k) {
    factor = apply_auto(sigma, factor);
    acc = mul(acc, factor);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Bruhat order

bool AffineWeylGroup::bruhat_leq(const ExtAffElt& a, const ExtAffElt& b) const {
  const std::size_t ka = omega_index(a), kb = omega_index(b);
  if (ka != kb) return false;
  const ExtAffElt xa = ka == 0 ? a : mul(a, omega_inv_[ka]);
  const ExtAffElt xb = kb == 0 ? b : mul(b, omega_inv_[kb]);
  const int la = length(xa);
  if (la > length(xb)) return false;
  if (xa.is_identity()) return true;

  // Products of reduced subwords of one reduced word of xb, pruned by length.
  std::vector<std::pair<ExtAffElt, int>> reached{{identity(), 0}};
  std::unordered_set<ExtAffElt, ExtAffEltHash> seen{identity()};
  for (int s : as_word(xb).letters) {
    const std::size_t n = reached.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (reached[k].second >= la) continue;
      ExtAffElt z = mul(reached[k].first, simple_[s]);
      const int lz = length(z);
      if (lz <= reached[k].second) continue;
      if (z == xa) return true;
      if (seen.insert(z).second) reached.emplace_back(std::move(z), lz);
    }
  }
  return false;
}

std::vector<ExtAffElt> AffineWeylGroup::bruhat_interval(const ExtAffElt& w) const {
  return bruhat_interval(w, as_word(w).letters);
}

std::vector<ExtAffElt> AffineWeylGroup::bruhat_interval(const ExtAffElt& w,
                                                        const std::vector<int>& reduced_word) const {
  const std::size_t k = omega_index(w);
  std::vector<std::pair<ExtAffElt, int>> reached{{identity(), 0}};
  std::unordered_set<ExtAffElt, ExtAffEltHash> seen{identity()};
  for (int s : reduced_word) {
    const std::size_t n = reached.size();
    for (std::size_t j = 0; j < n; ++j) {
      ExtAffElt z = mul(reached[j].first, simple_refl(s));
      const int lz = length(z);
      if (lz <= reached[j].second) continue;
      if (seen.insert(z).second) reached.emplace_back(std::move(z), lz);
    }
  }
  std::stable_sort(reached.begin(), reached.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<ExtAffElt> out;
  out.reserve(reached.size());
  for (auto& [x, len] : reached) out.push_back(k == 0 ? std::move(x) : mul(x, omega_[k]));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

const std::vector<ExtAffElt>& AffineWeylGroup::waff_layer(int len) const {
  std::lock_guard<std::mutex> lock(layer_mutex_);
  if (layers_.empty()) layers_.push_back({identity()});
  while (static_cast<int>(layers_.size()) <= len) {
    const auto& prev = layers_.back();
    const int next_len = static_cast<int>(layers_.size());
    std::vector<ExtAffElt> next;
    std::unordered_set<ExtAffElt, ExtAffEltHash> seen;
    for (const auto& y : prev) {
      for (int i = 0; i <= rank_; ++i) {
        ExtAffElt z = mul(y, simple_[i]);
        if (length(z) == next_len && seen.insert(z).second) next.push_back(std::move(z));
      }
    }
    layers_.push_back(std::move(next));
  }
  return layers_[len];
}

std::vector<ExtAffElt> AffineWeylGroup::elements_upto(int max_len) const {
  std::vector<ExtAffElt> out;
  for (int len = 0; len <= max_len; ++len) {
    const auto& layer = waff_layer(len);
    for (std::size_t k = 0; k < omega_.size(); ++k) {
      for (const auto& x : layer) out.push_back(k == 0 ? x : mul(x, omega_[k]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text forms

std::string AffineWeylGroup::format(const ExtAffElt& w) const {
  Word word = as_word(w);
  std::string out;
  for (int i : word.letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(i);
  }
  if (word.omega != 0) {
    if (!out.empty()) out += ' ';
    out += "pi" + std::to_string(word.omega);
  }
  return out.empty() ? "e" : out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }
  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) fail("expected an integer");
    return value;
  }
  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Out-of-range generators in element text are reported as parse errors.
template <class F>
ExtAffElt generator(Scanner& sc, F make) {
  try {
    return make();
  } catch (const ConfigError& e) {
    sc.fail(e.what());
  }
}

}  // namespace

ExtAffElt AffineWeylGroup::parse(std::string_view text) const {
  Scanner sc(text);
  ExtAffElt w = identity();
  if (sc.done()) sc.fail("empty element");
  while (!sc.done()) {
    if (sc.consume("pi")) {
      if (!sc.at_digit()) sc.fail("expected Omega label");
      const auto label = sc.integer();
      w = mul(w, generator(sc, [&] { return omega_gen(static_cast<int>(label)); }));
    } else if (sc.consume("s")) {
      if (!sc.at_digit()) sc.fail("expected simple reflection index");
      const auto i = sc.integer();
      w = mul(w, generator(sc, [&] { return simple_refl(static_cast<int>(i)); }));
    } else if (sc.consume("t")) {
      sc.expect("[");
      std::vector<std::int64_t> coords;
      if (!sc.consume("]")) {
        do coords.push_back(sc.integer());
        while (sc.consume(","));
        sc.expect("]");
      }
      w = mul(w, generator(sc, [&] { return translation(coords); }));
    } else if (sc.consume("e")) {
      // identity
    } else {
      sc.fail("unexpected token");
    }
  }
  return w;
}

std::string AffineWeylGroup::format_auto(const GroupAuto& sigma) const {
  if (is_identity(sigma)) return "id";
  std::string out;
  if (sigma.inner != 0) out = "ad:pi" + std::to_string(omega_labels_[sigma.inner]);
  if (sigma.delta != identity_auto().delta) {
    if (!out.empty()) out += '*';
    out += "perm(";
    for (int i = 0; i < rank_; ++i) {
      if (i) out += ',';
      out += std::to_string(sigma.delta[i] + 1);
    }
    out += ')';
  }
  return out;
}

GroupAuto AffineWeylGroup::parse_auto(std::string_view text) const {
  Scanner sc(text);
  GroupAuto result = identity_auto();
  if (sc.done()) sc.fail("empty automorphism");
  for (;;) {
    GroupAuto factor = identity_auto();
    if (sc.consume("id")) {
    } else if (sc.consume("swap")) {
      sc.expect("(");
      int i = static_cast<int>(sc.integer());
      sc.expect(",");
      int j = static_cast<int>(sc.integer());
      sc.expect(")");
      if (i < 1 || i > rank_ || j < 1 || j > rank_) sc.fail("swap index out of range");
      std::vector<int> perm(rank_);
      std::iota(perm.begin(), perm.end(), 1);
      std::swap(perm[i - 1], perm[j - 1]);
      factor = diagram_auto(perm);
    } else if (sc.consume("perm")) {
      sc.expect("(");
      std::vector<int> perm;
      do perm.push_back(static_cast<int>(sc.integer()));
      while (sc.consume(","));
      sc.expect(")");
      factor = diagram_auto(perm);
    } else if (sc.consume("ad:pi")) {
      factor = inner_auto(static_cast<int>(sc.integer()));
    } else {
      sc.fail("unknown automorphism factor");
    }
    result = compose(result, factor);
    if (sc.done()) break;
    sc.expect("*");
  }
  return result;
}

}  // namespace adlv::weyl
