#include "adlv/demazure.hpp"

#include <algorithm>
#include <numeric>

#include "adlv/error.hpp"

namespace adlv::demazure {

ExtAffElt dem_prod(const AffineWeylGroup& g, const ExtAffElt& a, const ExtAffElt& b) {
  const weyl::Word word = g.as_word(b);
  ExtAffElt acc = a;
  int len = g.length(acc);
  for (int s : word.letters) {
    ExtAffElt next = g.right_mul_simple(acc, s);
    const int next_len = g.length(next);
    if (next_len > len) {
      acc = std::move(next);
      len = next_len;
    }
  }
  if (word.omega != 0) acc = g.mul(acc, g.omega_gen(word.omega));
  return acc;
}

ExtAffElt dem_prod_left_fold(const AffineWeylGroup& g, const ExtAffElt& a, const ExtAffElt& b) {
  const weyl::Word word = g.as_word(a);
  ExtAffElt acc = word.omega != 0 ? g.mul(g.omega_gen(word.omega), b) : b;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (!g.is_left_descent(*it, acc)) acc = g.left_mul_simple(*it, acc);
  }
  return acc;
}

ExtAffElt dem_twisted_power(const AffineWeylGroup& g, const ExtAffElt& w, int n, const GroupAuto& sigma) {
  if (n < 1) throw ConfigError("Demazure power needs n >= 1");
  ExtAffElt acc = w, factor = w;
  for (int k = 1; k < n; ++k) {
    factor = g.apply_auto(sigma, factor);
    acc = dem_prod(g, acc, factor);
  }
  return acc;
}

std::vector<int> dem_power_lengths(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                                   int count) {
  std::vector<int> out;
  if (count < 1) return out;
  ExtAffElt acc = w, factor = w;
  out.push_back(g.length(acc));
  for (int k = 1; k < count; ++k) {
    factor = g.apply_auto(sigma, factor);
    acc = dem_prod(g, acc, factor);
    out.push_back(g.length(acc));
  }
  return out;
}

namespace {

// Period-d fallback: earliest n0 after which increments repeat with period
// d, provided at least window + d increments follow it.
void try_periodic(IncrementTrace& trace, int d) {
  const auto& inc = trace.increments;
  const int count = static_cast<int>(inc.size());
  int start = count - d;
  while (start > 0 && inc[start - 1] == inc[start - 1 + d]) --start;
  if (start < 0 || count - start < trace.window + d) return;
  const int sum = std::accumulate(inc.begin() + start, inc.begin() + start + d, 0);
  trace.stabilized_at = start + 1;
  trace.limit = Rational(sum, d);
  trace.periodic = true;
}

}  // namespace

IncrementTrace dem_limit(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma, int horizon_max) {
  const int d = g.affine_diagram_order(sigma);
  if (horizon_max < 4 * d) {
    throw ConfigError("horizon " + std::to_string(horizon_max) + " is below 4 * diagram order " +
                      std::to_string(d));
  }
  IncrementTrace trace;
  trace.window = std::max(3 * d, 6);

  ExtAffElt acc = w, factor = w;
  trace.lengths.push_back(g.length(acc));
  int run_start = 0;  // 0-based index of the current constant run
  for (int n = 1; n < horizon_max; ++n) {
    factor = g.apply_auto(sigma, factor);
    acc = dem_prod(g, acc, factor);
    trace.lengths.push_back(g.length(acc));
    const int idx = static_cast<int>(trace.increments.size());
    trace.increments.push_back(trace.lengths[n] - trace.lengths[n - 1]);
    if (idx > 0 && trace.increments[idx] != trace.increments[idx - 1]) run_start = idx;
    if (idx - run_start + 1 >= trace.window) {
      trace.stabilized_at = run_start + 1;
      trace.limit = Rational(trace.increments[idx]);
      return trace;
    }
  }
  try_periodic(trace, d);
  return trace;
}

}  // namespace adlv::demazure
