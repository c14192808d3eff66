#include "adlv/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "adlv/dimension.hpp"
#include "adlv/error.hpp"
#include "adlv/hecke0.hpp"

namespace adlv {

Check parse_check(const std::string& text) {
  if (text == "main") return Check::main;
  if (text == "bruhat") return Check::bruhat;
  if (text == "hecke") return Check::hecke;
  if (text == "all") return Check::all;
  throw ConfigError("unknown check '" + text + "' (expected main, bruhat, hecke or all)");
}

std::string to_string(Check c) {
  switch (c) {
    case Check::main: return "main";
    case Check::bruhat: return "bruhat";
    case Check::hecke: return "hecke";
    case Check::all: return "all";
  }
  return "main";
}

namespace {

void check_stabilization(const DimReport& r, std::vector<std::string>& failures) {
  const auto& t = r.trace;
  if (!t.stabilized_at || t.periodic) {
    failures.push_back("demazure increments did not stabilize");
    return;
  }
  const int n0 = *t.stabilized_at;
  if (n0 > 50) failures.push_back("demazure increments stabilized late, n0 = " + std::to_string(n0));
  if (*t.limit != Rational(r.len_Ow)) {
    failures.push_back("demazure increment " + to_string(*t.limit) + " != l(O_w) = " + std::to_string(r.len_Ow));
    return;
  }
  const long bound = std::labs(t.lengths[n0 - 1] - static_cast<long>(n0) * r.len_Ow);
  for (std::size_t n = n0; n <= t.lengths.size(); ++n) {
    if (std::labs(t.lengths[n - 1] - static_cast<long>(n) * r.len_Ow) > bound) {
      failures.push_back("deviation at n = " + std::to_string(n) + " exceeds its value at stabilization");
      return;
    }
  }
}

void check_main(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma, const HarnessOptions& opts,
                Json& rec, std::vector<std::string>& failures) {
  DimOptions dopts;
  dopts.horizon = opts.horizon;
  dopts.search = opts.search;
  dopts.fatal_mismatch = false;
  const DimReport r = dim_generic(g, w, sigma, dopts);
  rec["dim"] = to_json(g, r);
  if (!r.agree) failures.push_back("dimension routes disagree");
  check_stabilization(r, failures);
}

void check_bruhat(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma, const HarnessOptions& opts,
                  Json& rec, std::vector<std::string>& failures) {
  const auto gen = classes::generic_invariant(g, w, sigma, opts.search);
  const auto bru = classes::generic_invariant_bruhat(g, w, sigma);
  rec["bruhat_invariant"] = to_json(bru);
  if (!(gen == bru)) failures.push_back("reduction and bruhat invariants differ");
  const auto o = classes::straight_class_for(g, gen, sigma);
  if (!classes::preceq(g, o, w, sigma)) failures.push_back("O_w is not below w");
}

void check_hecke(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma, const HarnessOptions& opts,
                 Json& rec, std::vector<std::string>& failures) {
  const auto gen = classes::generic_invariant(g, w, sigma, opts.search);
  auto lex_opts = opts.search, rev_opts = opts.search;
  lex_opts.tie_break = classes::TieBreak::lexicographic;
  rev_opts.tie_break = classes::TieBreak::reverse;
  const auto a = hecke0::cocenter_image(g, w, sigma, lex_opts);
  const auto b = hecke0::cocenter_image(g, w, sigma, rev_opts);
  rec["cocenter"] = {{"sign", a.sign}, {"rep", g.format(a.rep)}};

  if (!(classes::class_invariant(g, a.rep, sigma) == gen)) failures.push_back("cocenter class differs from O_w");
  const int expected_sign = (g.length(w) - g.length(a.rep)) % 2 == 0 ? 1 : -1;
  if (a.sign != expected_sign) failures.push_back("cocenter sign is not (-1)^(l(w)-l(Sigma_w))");
  if (a.sign != b.sign || !(a.class_invariant == b.class_invariant) || g.length(a.rep) != g.length(b.rep) ||
      !hecke0::tilde_equivalent(g, a.rep, b.rep, sigma)) {
    failures.push_back("cocenter image depends on the tie-break");
  }
}

void check_straightness(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma, Json& rec,
                        std::vector<std::string>& failures) {
  const auto detail = classes::class_invariant_detail(g, w, sigma);
  const bool by_length = classes::is_straight(g, w, sigma);
  const bool by_powers = classes::is_straight_by_powers(g, w, sigma, 2 * detail.m);
  rec["straight"] = by_length;
  if (by_length != by_powers) failures.push_back("straightness criteria disagree");
}

}  // namespace

ElementResult check_element(const AffineWeylGroup& g, const ExtAffElt& w, const GroupAuto& sigma,
                            const HarnessOptions& opts) {
  ElementResult out;
  out.element = g.format(w);
  Json rec{{"element", out.element}, {"length", g.length(w)}};
  try {
    rec["invariant"] = to_json(classes::class_invariant(g, w, sigma));
    const bool all = opts.check == Check::all;
    if (all || opts.check == Check::main) check_main(g, w, sigma, opts, rec, out.failures);
    if (all || opts.check == Check::bruhat) check_bruhat(g, w, sigma, opts, rec, out.failures);
    if (all || opts.check == Check::hecke) check_hecke(g, w, sigma, opts, rec, out.failures);
    if (all) check_straightness(g, w, sigma, rec, out.failures);
  } catch (const ResourceError& e) {
    out.resource_error = true;
    out.failures.push_back(std::string("resource cap: ") + e.what());
  } catch (const Error& e) {
    out.failures.push_back(e.what());
  }
  rec["failures"] = out.failures;
  out.record = std::move(rec);
  return out;
}

HarnessResult run_harness(const AffineWeylGroup& g, const GroupAuto& sigma, const HarnessOptions& opts) {
  if (opts.max_len < 0) throw ConfigError("max-len must be non-negative");
  if (opts.workers < 1) throw ConfigError("workers must be positive");
  const auto elements = g.elements_upto(opts.max_len);

  HarnessResult out;
  out.results.resize(elements.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < elements.size(); i = next++) {
      out.results[i] = check_element(g, elements[i], sigma, opts);
    }
  };
  const int n_threads = std::min<int>(opts.workers, std::max<std::size_t>(elements.size(), 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& r : out.results) {
    if (!r.failures.empty()) ++out.failures;
    if (r.resource_error) ++out.resource_errors;
  }
  out.summary = {{"summary", true},
                 {"cartan", g.config_string()},
                 {"sigma", g.format_auto(sigma)},
                 {"max_len", opts.max_len},
                 {"check", to_string(opts.check)},
                 {"elements", elements.size()},
                 {"failures", out.failures},
                 {"resource_errors", out.resource_errors}};
  return out;
}

}  // namespace adlv
