// Command-line front end: eval, dim, newton, straight-classes, enumerate, verify.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "adlv/atlas.hpp"
#include "adlv/dimension.hpp"
#include "adlv/error.hpp"
#include "adlv/harness.hpp"
#include "adlv/json_io.hpp"

namespace {

using namespace adlv;

struct Common {
  std::string type = "A1";
  std::string lattice = "coroot";
  std::string config;
  std::string sigma = "id";
  std::string format = "jsonl";
  int horizon = demazure::kDefaultHorizon;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--type", c.type, "Cartan type, e.g. A2, C2, G2")->capture_default_str();
  cmd->add_option("--lattice", c.lattice, "coroot or coweight")->capture_default_str();
  cmd->add_option("--config", c.config, "full configuration, e.g. \"type=A2;lattice=coweight\"");
  cmd->add_option("--sigma", c.sigma, "id, swap(i,j), perm(...), ad:pi<k>, joined by '*'")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"jsonl", "table"}))
      ->capture_default_str();
  cmd->add_option("--horizon", c.horizon, "cap on Demazure powers")->capture_default_str();
}

std::unique_ptr<AffineWeylGroup> make_group(const Common& c) {
  const std::string cfg = c.config.empty() ? "type=" + c.type + ";lattice=" + c.lattice : c.config;
  return std::make_unique<AffineWeylGroup>(cartan::parse_cartan_config(cfg));
}

bool table(const Common& c) { return c.format == "table"; }

std::string nu_text(const Json& inv) {
  std::string out = "[";
  for (std::size_t i = 0; i < inv["nu"].size(); ++i) out += (i ? "," : "") + inv["nu"][i].get<std::string>();
  return out + "]";
}

void print_row(const std::vector<std::pair<std::string, int>>& cols) {
  for (const auto& [text, width] : cols) std::cout << std::left << std::setw(width) << text << ' ';
  std::cout << '\n';
}

int run_eval(const Common& c, const std::string& text) {
  const auto g = make_group(c);
  const auto w = g->parse(text);
  const auto word = g->as_word(w);
  Json letters = word.letters;
  Json out{{"element", g->format(w)},
           {"length", g->length(w)},
           {"reduced_word", letters},
           {"omega", word.omega},
           {"translation", g->lattice_coords(w)},
           {"finite_word", g->finite_word(w)}};
  if (table(c)) {
    print_row({{"element", 24}, {"length", 6}, {"omega", 5}});
    print_row({{out["element"], 24}, {std::to_string(g->length(w)), 6}, {std::to_string(word.omega), 5}});
  } else {
    std::cout << out.dump() << '\n';
  }
  return 0;
}

int run_dim(const Common& c, const std::string& text) {
  const auto g = make_group(c);
  const auto sigma = g->parse_auto(c.sigma);
  DimOptions opts;
  opts.horizon = c.horizon;
  const auto r = dim_generic(*g, g->parse(text), sigma, opts);
  const Json j = to_json(*g, r);
  if (table(c)) {
    print_row({{"element", 24}, {"length", 6}, {"l(O_w)", 6}, {"dim", 4}, {"nu", 16}, {"kappa", 5}, {"agree", 5}});
    print_row({{j["element"], 24},
               {std::to_string(r.length_w), 6},
               {std::to_string(r.len_Ow), 6},
               {std::to_string(r.dim_reduction), 4},
               {nu_text(j["generic_invariant"]), 16},
               {std::to_string(r.generic_invariant.kappa.label), 5},
               {r.agree ? "yes" : "no", 5}});
  } else {
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int run_newton(const Common& c, const std::string& text) {
  const auto g = make_group(c);
  const auto sigma = g->parse_auto(c.sigma);
  const auto w = g->parse(text);
  const auto d = classes::class_invariant_detail(*g, w, sigma);
  Json j = to_json(d.invariant);
  j["element"] = g->format(w);
  j["m"] = d.m;
  j["straight"] = classes::is_straight(*g, w, sigma);
  if (table(c)) {
    print_row({{"element", 24}, {"nu", 16}, {"kappa", 5}, {"m", 3}});
    print_row({{j["element"], 24}, {nu_text(j), 16}, {std::to_string(d.invariant.kappa.label), 5},
               {std::to_string(d.m), 3}});
  } else {
    std::cout << j.dump() << '\n';
  }
  return 0;
}

void print_atlas(const AffineWeylGroup& g, const Atlas& atlas, bool as_table) {
  if (as_table) print_row({{"min_length", 10}, {"kappa", 5}, {"nu", 16}, {"representative", 24}});
  for (const auto& cls : atlas.classes) {
    const Json j = to_json(g, cls);
    if (as_table) {
      print_row({{std::to_string(cls.min_length), 10}, {std::to_string(cls.invariant.kappa.label), 5},
                 {nu_text(j), 16}, {j["representative"], 24}});
    } else {
      std::cout << j.dump() << '\n';
    }
  }
}

int run_straight(const Common& c, int max_len, const std::string& cache) {
  const auto g = make_group(c);
  const auto sigma = g->parse_auto(c.sigma);
  const Atlas atlas = build_atlas(*g, sigma, max_len);
  if (!cache.empty()) save_atlas(*g, atlas, cache);
  print_atlas(*g, atlas, table(c));
  return 0;
}

int run_enumerate(const Common& c, int max_len, const std::string& check, int workers, const std::string& cache) {
  const auto g = make_group(c);
  const auto sigma = g->parse_auto(c.sigma);
  HarnessOptions opts;
  opts.max_len = max_len;
  opts.check = parse_check(check);
  opts.horizon = c.horizon;
  opts.workers = workers;
  const auto res = run_harness(*g, sigma, opts);
  if (table(c)) {
    print_row({{"element", 24}, {"length", 6}, {"kappa", 5}, {"nu", 16}, {"status", 6}});
    for (const auto& r : res.results) {
      print_row({{r.element, 24}, {std::to_string(r.record["length"].get<int>()), 6},
                 {std::to_string(r.record["invariant"]["kappa"].get<int>()), 5}, {nu_text(r.record["invariant"]), 16},
                 {r.failures.empty() ? "ok" : "FAIL", 6}});
      for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    }
    std::cout << res.summary["elements"] << " elements, " << res.failures << " failures\n";
  } else {
    for (const auto& r : res.results) std::cout << r.record.dump() << '\n';
    std::cout << res.summary.dump() << '\n';
  }
  if (!cache.empty()) save_atlas(*g, build_atlas(*g, sigma, max_len), cache);
  if (res.resource_errors) return ResourceError("").exit_code();
  if (res.failures) return VerificationError("").exit_code();
  return 0;
}

int run_verify(const Common& c, const std::string& cache) {
  const auto loaded = load_atlas(cache);
  const auto diffs = verify_atlas(loaded);
  Json j{{"atlas", cache},
         {"cartan", loaded.atlas.cartan_config},
         {"sigma", loaded.atlas.sigma},
         {"max_len", loaded.atlas.max_len},
         {"classes", loaded.atlas.classes.size()},
         {"differences", diffs},
         {"ok", diffs.empty()}};
  if (table(c)) {
    std::cout << cache << ": " << loaded.atlas.classes.size() << " classes, "
              << (diffs.empty() ? "consistent" : "INCONSISTENT") << '\n';
    for (const auto& d : diffs) std::cout << "    " << d << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
  return diffs.empty() ? 0 : VerificationError("").exit_code();
}

void print_error(const std::string& kind, const std::string& message) {
  std::cout.flush();
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of affine Deligne-Lusztig varieties for generic Newton points"};
  app.require_subcommand(1);

  Common common;
  std::string element, check = "main", cache;
  int max_len = 6, workers = 1;

  auto* eval = app.add_subcommand("eval", "length, reduced word and Omega part of an element");
  auto* dim = app.add_subcommand("dim", "dim X_w(b_w) by all three routes");
  auto* newton = app.add_subcommand("newton", "Newton point and Kottwitz class of an element");
  auto* straight = app.add_subcommand("straight-classes", "atlas of straight classes up to a length");
  auto* enumerate = app.add_subcommand("enumerate", "run checks on every element up to a length");
  auto* verify = app.add_subcommand("verify", "replay a cached atlas against fresh computation");

  for (auto* cmd : {eval, dim, newton, straight, enumerate, verify}) add_common(cmd, common);
  for (auto* cmd : {eval, dim, newton}) cmd->add_option("element", element, "element, e.g. \"s1 s0 s1\"")->required();
  for (auto* cmd : {straight, enumerate}) {
    cmd->add_option("--max-len", max_len, "maximal length")->capture_default_str();
    cmd->add_option("--cache", cache, "write the straight-class atlas to this path");
  }
  enumerate->add_option("--check", check, "main, bruhat, hecke or all")->capture_default_str();
  enumerate->add_option("--workers", workers, "worker threads")->capture_default_str();
  verify->add_option("--cache", cache, "atlas to replay")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("parse", e.what());
    return 2;
  }

  try {
    if (*eval) return run_eval(common, element);
    if (*dim) return run_dim(common, element);
    if (*newton) return run_newton(common, element);
    if (*straight) return run_straight(common, max_len, cache);
    if (*enumerate) return run_enumerate(common, max_len, check, workers, cache);
    if (*verify) return run_verify(common, cache);
  } catch (const RouteMismatch& e) {
    print_error(e.kind(), e.what());
    std::cerr << to_json(*make_group(common), e.report()).dump() << '\n';
    return e.exit_code();
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return e.exit_code();
  } catch (const Json::exception& e) {
    print_error("parse", e.what());
    return 2;
  }
  return 0;
}
