#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "adlv/atlas.hpp"
#include "adlv/dimension.hpp"
#include "adlv/error.hpp"
#include "adlv/harness.hpp"
#include "adlv/json_io.hpp"
#include "oracles.hpp"

using namespace adlv;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("adlv_test_" + name)).string();
}

std::string dump_lines(const HarnessResult& r) {
  std::string out;
  for (const auto& e : r.results) out += e.record.dump() + '\n';
  return out + r.summary.dump() + '\n';
}

}  // namespace

TEST_CASE("dimension examples") {
  auto g = oracle::group("type=A1;lattice=coroot");
  const auto id = g->identity_auto();
  auto r = dim_generic(*g, g->parse("s0 s1"), id);
  CHECK(r.agree);
  CHECK(r.dim_reduction == 0);
  CHECK(r.dim_bruhat == 0);
  CHECK(r.dim_demazure == 0);

  r = dim_generic(*g, g->simple_refl(1), id);
  CHECK(r.agree);
  CHECK(r.length_w == 1);
  CHECK(r.len_Ow == 0);
  CHECK(r.dim_reduction == 1);
  CHECK(r.dim_demazure == 1);

  r = dim_generic(*g, g->parse("s1 s0 s1"), id);
  CHECK(r.agree);
  CHECK(r.length_w == 3);
  CHECK(r.len_Ow == 2);
  CHECK(r.dim_reduction == 1);
  CHECK(r.dim_bruhat == 1);
  CHECK(r.dim_demazure == 1);

  const Json j = to_json(*g, r);
  CHECK(j["dim"] == 1);
  CHECK(j["agree"] == true);
  CHECK(j["generic_invariant"]["nu"][0] == "1/1");

  RouteMismatch err(r);
  CHECK(err.exit_code() == 3);
  CHECK(err.report().w == r.w);
}

TEST_CASE("straight elements have dimension zero") {
  for (const char* cfg : {"type=A2;lattice=coweight", "type=C2;lattice=coroot"}) {
    auto g = oracle::group(cfg);
    const auto id = g->identity_auto();
    for (const auto& w : g->elements_upto(6)) {
      const auto r = dim_generic(*g, w, id);
      CHECK(r.dim_reduction >= 0);
      if (classes::is_straight(*g, w, id)) CHECK(r.dim_reduction == 0);
    }
  }
}

TEST_CASE("reduction to the affine Weyl group") {
  auto h = oracle::group("type=A1;lattice=coweight");
  const auto id = h->identity_auto();
  const auto pi = h->omega_gen(1);

  auto red = reduce_to_waff(*h, h->parse("s0 s1"), id);
  CHECK(red.x == h->parse("s0 s1"));
  CHECK(red.tau == h->identity());
  CHECK(red.theta == id);

  red = reduce_to_waff(*h, pi, id);
  CHECK(red.x == h->identity());
  CHECK(red.tau == pi);
  CHECK(red.theta == h->compose(h->inner_auto(1), id));

  const auto w = h->mul(h->simple_refl(1), pi);
  red = reduce_to_waff(*h, w, id);
  CHECK(red.x == h->simple_refl(1));
  CHECK(red.tau == pi);
  const auto lw = demazure::dem_limit(*h, w, id), lx = demazure::dem_limit(*h, red.x, red.theta);
  REQUIRE(lw.limit);
  REQUIRE(lx.limit);
  CHECK(*lw.limit == *lx.limit);
}

TEST_CASE("transport of limits and classes to the affine Weyl group") {
  std::mt19937 rng(31);
  for (const char* cfg : {"type=A1;lattice=coweight", "type=A2;lattice=coweight"}) {
    auto g = oracle::group(cfg);
    for (const char* sig : {"id", "swap(1,2)"}) {
      if (g->rank() == 1 && std::string(sig) != "id") continue;
      const auto sigma = g->parse_auto(sig);
      std::size_t nontrivial = 0;
      for (const auto& w : g->elements_upto(6)) {
        if (g->omega_index(w) == 0) continue;
        ++nontrivial;
        const auto red = reduce_to_waff(*g, w, sigma);
        CHECK(g->omega_index(red.x) == 0);
        CHECK(g->length(red.tau) == 0);
        CHECK(g->mul(red.x, red.tau) == w);
        const auto lw = demazure::dem_limit(*g, w, sigma), lx = demazure::dem_limit(*g, red.x, red.theta);
        REQUIRE(lw.limit);
        REQUIRE(lx.limit);
        CHECK(*lw.limit == *lx.limit);
        const auto ow = classes::generic_invariant(*g, w, sigma), ox = classes::generic_invariant(*g, red.x, red.theta);
        CHECK(classes::newton_length(g->roots(), ow.nu) == classes::newton_length(g->roots(), ox.nu));
        for (int k = 0; k < 5; ++k) {
          const auto xp = oracle::random_element(*g, 1 + k, rng, false);
          for (int n = 1; n <= 6; ++n) {
            CHECK(g->length(g->twisted_power(g->mul(xp, red.tau), n, sigma)) ==
                  g->length(g->twisted_power(xp, n, red.theta)));
          }
        }
      }
      CHECK(nontrivial > 0);
    }
  }
}

TEST_CASE("atlas save and load") {
  auto g = oracle::group("type=A1;lattice=coroot");
  const auto id = g->identity_auto();
  const Atlas atlas = build_atlas(*g, id, 6);
  REQUIRE(atlas.classes.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(atlas.classes[k].invariant.nu.nu.coords == RationalVec{Rational(k)});
    CHECK(atlas.classes[k].min_length == 2 * k);
  }

  const auto path = temp_path("atlas.json");
  save_atlas(*g, atlas, path);
  const auto loaded = load_atlas(path);
  CHECK(atlas_equal(loaded.atlas, atlas));
  CHECK(loaded.sigma == id);
  CHECK(verify_atlas(loaded).empty());

  Json j = atlas_to_json(*g, atlas);
  CHECK(j["classes"][1]["nu"][0] == "1/1");

  Json bad = j;
  bad["classes"][2]["min_length"] = bad["classes"][2]["min_length"].get<int>() + 1;
  CHECK_THROWS_AS(atlas_from_json(bad), VerificationError);

  bad = j;
  bad["schema_version"] = kAtlasSchemaVersion + 1;
  CHECK_THROWS_AS(atlas_from_json(bad), ParseError);

  bad = j;
  bad["classes"][1]["representative"] = "s0";
  CHECK_THROWS_AS(atlas_from_json(bad), VerificationError);

  bad = j;
  bad["classes"].erase(3);
  CHECK(verify_atlas(atlas_from_json(bad)).size() == 1);

  bad = j;
  bad["classes"][1]["nu"] = Json::array({1});
  CHECK_THROWS_AS(atlas_from_json(bad), ParseError);

  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_atlas(path), ParseError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_atlas(path), ConfigError);

  auto h = oracle::group("type=A2;lattice=coweight");
  const auto sigma = h->parse_auto("ad:pi1*swap(1,2)");
  const Atlas twisted = build_atlas(*h, sigma, 4);
  const auto reloaded = atlas_from_json(atlas_to_json(*h, twisted));
  CHECK(atlas_equal(reloaded.atlas, twisted));
  CHECK(reloaded.sigma == sigma);
}

TEST_CASE("invariant json round trip") {
  auto g = oracle::group("type=G2;lattice=coroot");
  for (const auto& w : g->elements_upto(5)) {
    const auto inv = classes::class_invariant(*g, w, g->identity_auto());
    CHECK(invariant_from_json(to_json(inv), 2) == inv);
  }
  CHECK_THROWS_AS(invariant_from_json(Json{{"kappa", 0}}, 2), ParseError);
}

TEST_CASE("harness runs are deterministic and clean") {
  auto g = oracle::group("type=A1;lattice=coroot");
  HarnessOptions opts;
  opts.max_len = 10;
  opts.check = Check::all;
  const auto one = run_harness(*g, g->identity_auto(), opts);
  CHECK(one.failures == 0);
  CHECK(one.summary["elements"] == 21);
  opts.workers = 3;
  const auto three = run_harness(*g, g->identity_auto(), opts);
  CHECK(dump_lines(one) == dump_lines(three));

  auto a2 = oracle::group("type=A2;lattice=coroot");
  opts.max_len = 5;
  const auto sigma = a2->parse_auto("swap(1,2)");
  const auto x = run_harness(*a2, sigma, opts);
  opts.workers = 1;
  const auto y = run_harness(*a2, sigma, opts);
  CHECK(x.failures == 0);
  CHECK(dump_lines(x) == dump_lines(y));

  CHECK(parse_check("hecke") == Check::hecke);
  CHECK_THROWS_AS(parse_check("everything"), ConfigError);
  opts.workers = 0;
  CHECK_THROWS_AS(run_harness(*a2, sigma, opts), ConfigError);
}
