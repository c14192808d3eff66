#include "adlv/classes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "adlv/error.hpp"

namespace adlv::classes {

bool bg_leq(const cartan::RootSystem& rs, const BGInvariant& a, const BGInvariant& b) {
  return a.kappa == b.kappa && cartan::dominance_leq(rs, a.nu.nu, b.nu.nu);
}

std::string to_string(const BGInvariant& inv) {
  std::string out = "kappa=" + std::to_string(inv.kappa.label) + ";nu=[";
  for (std::size_t i = 0; i < inv.nu.nu.size(); ++i) {
    if (i) out += ',';
    out += adlv::to_string(inv.nu.nu.coords[i]);
  }
  return out + "]";
}

bool invariant_less(const BGInvariant& a, const BGInvariant& b) {
  if (a.kappa.label != b.kappa.label) return a.kappa.label < b.kappa.label;
  return std::lexicographical_compare(a.nu.nu.coords.begin(), a.nu.nu.coords.end(), b.nu.nu.coords.begin(),
                                      b.nu.nu.coords.end());
}

Rational newton_length(const cartan::RootSystem& rs, const NewtonPoint& nu) {
  return rs.pair(nu.nu, rs.two_rho());
}

std::vector<int> kottwitz_labels(const AffineWeylGroup& g, const GroupAuto& sigma) {
  const auto& omega = g.omega_elements();
  const std::size_t n = omega.size();
  if (n == 1) return {0};
  auto index_of_product = [&](std::size_t i, std::size_t j) { return g.omega_index(g.mul(omega[i], omega[j])); };

  // H = <w sigma(w)^{-1}>
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i) {
    ExtAffElt image_inv = g.inv(g.apply_auto(sigma, omega[i]));
    gens.push_back(g.omega_index(g.mul(omega[i], image_inv)));
  }
  std::vector<bool> in_h(n, false);
  std::vector<std::size_t> h{0};
  in_h[0] = true;
  for (std::size_t head = 0; head < h.size(); ++head) {
    for (std::size_t gen : gens) {
      std::size_t k = index_of_product(h[head], gen);
      if (!in_h[k]) {
        in_h[k] = true;
        h.push_back(k);
      }
    }
  }

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    int best = g.omega_labels()[i];
    for (std::size_t k : h) best = std::min(best, g.omega_labels()[index_of_product(i, k)]);
    labels[i] = best;
  }
  return labels;
}

InvariantDetail class_invariant_detail(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma) {
  const auto& rs = g.roots();
  const int r = g.rank();

  // Smallest m with w^{sigma,m} a translation and sigma^m = id. Bounded by
  // |W_0| times the order of the diagram part.
  ExtAffElt power = w, factor = w;
  GroupAuto sigma_m = sigma;
  int m = 1;
  while (!(power.has_trivial_finite_part() && g.is_identity(sigma_m))) {
    factor = g.apply_auto(sigma, factor);
    power = g.mul(power, factor);
    sigma_m = g.compose(sigma, sigma_m);
    if (++m > 1'000'000) throw ResourceError("twisted power never became a translation");
  }

  InvariantDetail out;
  out.m = m;
  out.mu.resize(r);
  for (int j = 0; j < r; ++j) out.mu[j] = power.lambda(j);

  std::vector<std::int64_t> dom = out.mu;
  for (;;) {
    int i = 0;
    while (i < r && dom[i] >= 0) ++i;
    if (i == r) break;
    const std::int64_t p = dom[i];
    for (int j = 0; j < r; ++j) dom[j] -= rs.cartan(i, j) * p;
  }
  RationalVec pairings(r);
  for (int j = 0; j < r; ++j) pairings[j] = Rational(dom[j], m);
  out.invariant.nu.nu = rs.from_simple_pairings(pairings);
  out.invariant.kappa.label = kottwitz_labels(g, sigma)[g.omega_index(w)];
  return out;
}

BGInvariant class_invariant(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma) {
  return class_invariant_detail(g, w, sigma).invariant;
}

ExtAffElt sigma_conjugate(const AffineWeylGroup& g, const ExtAffElt& x, const ExtAffElt& w,
                          const GroupAuto& sigma) {
  return g.mul(g.mul(x, w), g.inv(g.apply_auto(sigma, x)));
}

// ---------------------------------------------------------------------------
// Minimal length reduction

namespace {

std::vector<int> move_order(const AffineWeylGroup& g, TieBreak tie) {
  std::vector<int> order(g.rank() + 1);
  std::iota(order.begin(), order.end(), 0);
  if (tie == TieBreak::reverse) std::reverse(order.begin(), order.end());
  return order;
}

struct SearchNode {
  ExtAffElt element;
  std::ptrdiff_t parent;
  int move;
};

std::vector<ReductionMove> path_to(const std::vector<SearchNode>& nodes, std::ptrdiff_t idx, int len) {
  std::vector<ReductionMove> path;
  for (; nodes[idx].parent >= 0; idx = nodes[idx].parent) {
    path.push_back({nodes[idx].move, nodes[idx].element, len});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<Descent> find_descent(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                                    const SearchOptions& opts) {
  const auto perm = g.affine_permutation(sigma);
  const auto order = move_order(g, opts.tie_break);
  const int len = g.length(w);

  std::vector<SearchNode> nodes{{w, -1, -1}};
  std::unordered_set<ExtAffElt, weyl::ExtAffEltHash> visited{w};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (int s : order) {
      ExtAffElt z = g.right_mul_simple(g.left_mul_simple(s, nodes[head].element), perm[s]);
      const int lz = g.length(z);
      if (lz < len) {
        return Descent{nodes[head].element, s, path_to(nodes, static_cast<std::ptrdiff_t>(head), len)};
      }
      if (lz == len && visited.insert(z).second) {
        if (nodes.size() >= opts.visited_cap) {
          throw ResourceError("sigma-conjugation search exceeded " + std::to_string(opts.visited_cap) +
                              " elements");
        }
        nodes.push_back({std::move(z), static_cast<std::ptrdiff_t>(head), s});
      }
    }
  }
  return std::nullopt;
}

std::vector<ExtAffElt> level_component(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                                       std::size_t cap) {
  const auto perm = g.affine_permutation(sigma);
  const int len = g.length(w);
  std::vector<ExtAffElt> out{w};
  std::unordered_set<ExtAffElt, weyl::ExtAffEltHash> visited{w};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s = 0; s <= g.rank(); ++s) {
      ExtAffElt z = g.right_mul_simple(g.left_mul_simple(s, out[head]), perm[s]);
      if (g.length(z) == len && visited.insert(z).second) {
        if (out.size() >= cap) throw ResourceError("level component exceeded " + std::to_string(cap) + " elements");
        out.push_back(std::move(z));
      }
    }
  }
  return out;
}

Reduction reduce_min(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                     const SearchOptions& opts) {
  const auto perm = g.affine_permutation(sigma);
  Reduction out{w, {}};
  while (auto d = find_descent(g, out.w_min, sigma, opts)) {
    out.path.insert(out.path.end(), d->path.begin(), d->path.end());
    ExtAffElt z = g.right_mul_simple(g.left_mul_simple(d->simple, d->w_prime), perm[d->simple]);
    const int lz = g.length(z);
    out.path.push_back({d->simple, z, lz});
    out.w_min = std::move(z);
  }
  return out;
}

bool is_min_length(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                   const SearchOptions& opts) {
  return !find_descent(g, w, sigma, opts).has_value();
}

// ---------------------------------------------------------------------------
// Straightness

bool is_straight(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma) {
  return Rational(g.length(w)) == newton_length(g.roots(), class_invariant(g, w, sigma).nu);
}

bool is_straight_by_powers(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma, int n_max) {
  const int len = g.length(w);
  ExtAffElt power = w, factor = w;
  for (int n = 2; n <= n_max; ++n) {
    factor = g.apply_auto(sigma, factor);
    power = g.mul(power, factor);
    if (g.length(power) != n * len) return false;
  }
  return true;
}

std::vector<StraightClass> straight_classes_upto(const AffineWeylGroup& g, int max_len, const GroupAuto& sigma) {
  std::vector<StraightClass> out;
  for (const auto& w : g.elements_upto(max_len)) {
    const BGInvariant inv = class_invariant(g, w, sigma);
    const int len = g.length(w);
    if (Rational(len) != newton_length(g.roots(), inv.nu)) continue;
    auto same = [&](const StraightClass& c) { return c.invariant == inv; };
    if (std::none_of(out.begin(), out.end(), same)) out.push_back({inv, len, w});
  }
  std::stable_sort(out.begin(), out.end(), [](const StraightClass& a, const StraightClass& b) {
    if (a.min_length != b.min_length) return a.min_length < b.min_length;
    return invariant_less(a.invariant, b.invariant);
  });
  return out;
}

StraightClass straight_class_for(const AffineWeylGroup& g, const BGInvariant& inv, const GroupAuto& sigma) {
  static std::mutex cache_mutex;
  static std::map<std::string, StraightClass> cache;
  const std::string key = g.config_string() + "|" + g.format_auto(sigma) + "|" + to_string(inv);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const Rational len = newton_length(g.roots(), inv.nu);
  if (!is_integral(len) || len < 0) {
    throw VerificationError("invariant " + to_string(inv) + " has non-integral <nu, 2rho>");
  }
  const int min_length = static_cast<int>(len.numerator());
  const auto labels = kottwitz_labels(g, sigma);
  const auto& layer = g.waff_layer(min_length);
  std::optional<StraightClass> found;
  for (std::size_t k = 0; k < labels.size() && !found; ++k) {
    if (labels[k] != inv.kappa.label) continue;
    for (const auto& x : layer) {
      ExtAffElt w = k == 0 ? x : g.mul(x, g.omega_elements()[k]);
      if (class_invariant(g, w, sigma) == inv) {
        found = StraightClass{inv, min_length, std::move(w)};
        break;
      }
    }
  }
  if (!found) throw VerificationError("no straight element with invariant " + to_string(inv));

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, *found).first->second;
}

bool preceq(const AffineWeylGroup& g, const StraightClass& o, const ExtAffElt& w, const GroupAuto& sigma) {
  for (const auto& x : g.bruhat_interval(w)) {
    if (g.length(x) != o.min_length) continue;
    if (class_invariant(g, x, sigma) == o.invariant) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Generic class

BGInvariant generic_invariant(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                              const SearchOptions& opts) {
  ExtAffElt cur = w;
  while (auto d = find_descent(g, cur, sigma, opts)) {
    cur = g.left_mul_simple(d->simple, d->w_prime);
  }
  return class_invariant(g, cur, sigma);
}

StraightClass generic_class(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                            const SearchOptions& opts) {
  return straight_class_for(g, generic_invariant(g, w, sigma, opts), sigma);
}

BGInvariant generic_invariant_bruhat(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma) {
  std::vector<BGInvariant> seen;
  for (const auto& x : g.bruhat_interval(w)) {
    BGInvariant inv = class_invariant(g, x, sigma);
    if (std::find(seen.begin(), seen.end(), inv) == seen.end()) seen.push_back(std::move(inv));
  }
  std::vector<const BGInvariant*> maxima;
  for (const auto& c : seen) {
    bool above_all = std::all_of(seen.begin(), seen.end(),
                                 [&](const BGInvariant& d) { return bg_leq(g.roots(), d, c); });
    if (above_all) maxima.push_back(&c);
  }
  if (maxima.size() != 1) {
    throw VerificationError("no unique maximum among Bruhat-interval invariants of " + g.format(w));
  }
  return *maxima.front();
}

StraightClass generic_class_bruhat(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma) {
  return straight_class_for(g, generic_invariant_bruhat(g, w, sigma), sigma);
}

}  // namespace adlv::classes
