#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "adlv/error.hpp"
#include "adlv/weyl.hpp"
#include "oracles.hpp"

using namespace adlv;
using namespace adlv::weyl;

namespace {

const char* const kConfigs[] = {"type=A1;lattice=coroot", "type=A1;lattice=coweight", "type=A2;lattice=coroot",
                                "type=A2;lattice=coweight", "type=B2;lattice=coroot", "type=C2;lattice=coweight",
                                "type=G2;lattice=coroot",   "type=A3;lattice=coweight"};

std::vector<int> word_via_inverse(const AffineWeylGroup& g, const ExtAffElt& w) {
  auto letters = g.as_word(g.inv(g.waff_part(w))).letters;
  std::reverse(letters.begin(), letters.end());
  return letters;
}

}  // namespace

TEST_CASE("group law examples") {
  auto g = oracle::group("type=A1;lattice=coroot");
  const auto s0 = g->simple_refl(0), s1 = g->simple_refl(1);
  const auto t = g->mul(s0, s1);
  CHECK(t == g->translation(std::vector<std::int64_t>{1}));
  CHECK(t.has_trivial_finite_part());
  CHECK(g->mul(t, g->identity()) == t);
  CHECK(g->length(g->identity()) == 0);
  CHECK(g->length(t) == 2);
  CHECK(g->length(s0) == 1);
  CHECK(s0 == g->parse("t[1] s1"));
  CHECK_THROWS_AS(g->simple_refl(2), ConfigError);
  CHECK_THROWS_AS(g->omega_gen(1), ConfigError);

  auto h = oracle::group("type=A1;lattice=coweight");
  const auto pi = h->omega_gen(1);
  CHECK(pi == h->parse("t[1] s1"));
  CHECK(h->length(pi) == 0);
  CHECK(h->mul(pi, pi) == h->identity());
  CHECK(h->omega_elements().size() == 2);
}

TEST_CASE("automorphism examples") {
  auto h = oracle::group("type=A1;lattice=coweight");
  const auto ad = h->inner_auto(1);
  CHECK(h->apply_auto(ad, h->simple_refl(1)) == h->simple_refl(0));
  CHECK(h->apply_auto(ad, h->simple_refl(0)) == h->simple_refl(1));
  CHECK(h->apply_auto(h->identity_auto(), h->simple_refl(1)) == h->simple_refl(1));
  CHECK(h->affine_diagram_order(ad) == 2);
  CHECK(h->order(h->identity_auto()) == 1);

  auto g = oracle::group("type=A2;lattice=coroot");
  const auto swap = g->parse_auto("swap(1,2)");
  CHECK(g->apply_auto(swap, g->simple_refl(1)) == g->simple_refl(2));
  CHECK(g->apply_auto(swap, g->simple_refl(0)) == g->simple_refl(0));
  CHECK(g->order(swap) == 2);
  CHECK(g->format_auto(swap) == "perm(2,1)");
  CHECK(g->parse_auto(g->format_auto(swap)) == swap);

  auto c2 = oracle::group("type=C2;lattice=coroot");
  CHECK_THROWS_AS(c2->parse_auto("swap(1,2)"), ConfigError);
  CHECK_THROWS_AS(g->parse_auto("rot(1)"), ParseError);

  auto a2w = oracle::group("type=A2;lattice=coweight");
  for (const char* text : {"id", "swap(1,2)", "ad:pi1", "ad:pi2", "ad:pi1*swap(1,2)", "swap(1,2)*ad:pi2"}) {
    CAPTURE(text);
    const auto sigma = a2w->parse_auto(text);
    CHECK(a2w->parse_auto(a2w->format_auto(sigma)) == sigma);
    // sigma permutes the affine simple reflections.
    const auto p = a2w->affine_permutation(sigma);
    for (int i = 0; i <= 2; ++i) CHECK(a2w->apply_auto(sigma, a2w->simple_refl(i)) == a2w->simple_refl(p[i]));
    CHECK(a2w->is_identity(a2w->power(sigma, a2w->order(sigma))));
  }
}

TEST_CASE("composition of automorphisms matches composition of maps") {
  auto g = oracle::group("type=A2;lattice=coweight");
  std::mt19937 rng(7);
  const std::vector<GroupAuto> autos = {g->parse_auto("swap(1,2)"), g->inner_auto(1), g->inner_auto(2),
                                        g->parse_auto("ad:pi1*swap(1,2)")};
  for (const auto& a : autos) {
    for (const auto& b : autos) {
      const auto ab = g->compose(a, b);
      for (int k = 0; k < 20; ++k) {
        const auto w = oracle::random_element(*g, 5, rng);
        CHECK(g->apply_auto(ab, w) == g->apply_auto(a, g->apply_auto(b, w)));
      }
    }
  }
}

TEST_CASE("length formula equals Cayley graph distance") {
  for (const char* cfg : kConfigs) {
    CAPTURE(cfg);
    auto g = oracle::group(cfg);
    const int depth = g->rank() >= 3 ? 5 : 6;
    const auto dist = oracle::cayley_distances(*g, depth);
    for (const auto& [w, d] : dist) CHECK(g->length(w) == d);

    // elements_upto lists each element of length <= depth exactly once.
    const auto listed = g->elements_upto(depth);
    CHECK(listed.size() == dist.size());
    CHECK(std::set<ExtAffElt>(listed.begin(), listed.end()).size() == listed.size());
  }
}

TEST_CASE("affine action of words") {
  std::mt19937 rng(11);
  for (const char* cfg : kConfigs) {
    CAPTURE(cfg);
    auto g = oracle::group(cfg);
    std::uniform_int_distribution<int> letter(0, g->rank()), coord(-7, 7);
    for (int k = 0; k < 200; ++k) {
      std::vector<int> word(k % 9);
      for (auto& x : word) x = letter(rng);
      RationalVec p(g->rank());
      for (auto& x : p) x = Rational(coord(rng), 3);
      CHECK(oracle::act_by_word(*g, word, p) == oracle::act_by_element(g->from_word(word), p));
    }
  }
}

TEST_CASE("inverse, words and parsing") {
  std::mt19937 rng(3);
  for (const char* cfg : kConfigs) {
    CAPTURE(cfg);
    auto g = oracle::group(cfg);
    for (const auto& w : g->elements_upto(g->rank() >= 3 ? 4 : 5)) {
      CHECK(g->mul(w, g->inv(w)) == g->identity());
      CHECK(g->length(g->inv(w)) == g->length(w));
      const auto word = g->as_word(w);
      CHECK(static_cast<int>(word.letters.size()) == g->length(w));
      CHECK(g->from_word(word) == w);
      CHECK(g->parse(g->format(w)) == w);
      CHECK(g->mul(g->waff_part(w), g->omega_elements()[g->omega_index(w)]) == w);
    }
    for (int k = 0; k < 50; ++k) {
      const auto a = oracle::random_element(*g, 4, rng), b = oracle::random_element(*g, 4, rng);
      const auto c = oracle::random_element(*g, 3, rng);
      CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      const int lab = g->length(g->mul(a, b));
      CHECK(lab <= g->length(a) + g->length(b));
      // Equality exactly when the concatenated word is reduced, i.e. when its
      // length is the Cayley distance of the product.
      const auto wb = g->as_word(g->mul(g->omega_elements()[g->omega_index(a)], b));
      std::vector<int> cat = g->as_word(g->waff_part(a)).letters;
      cat.insert(cat.end(), wb.letters.begin(), wb.letters.end());
      CHECK((lab == g->length(a) + g->length(b)) == (g->length(g->from_word(cat)) == static_cast<int>(cat.size())));
    }
  }
  auto g = oracle::group("type=A1;lattice=coroot");
  CHECK(g->as_word(g->identity()).letters.empty());
  CHECK(g->from_word({1, 1}) == g->identity());
  const auto t = g->translation(std::vector<std::int64_t>{1});
  CHECK(g->from_word(g->as_word(t)) == t);
  CHECK(g->parse("e") == g->identity());
  CHECK(g->format(g->identity()) == "e");
  CHECK_THROWS_AS(g->parse("s5"), ParseError);
  CHECK_THROWS_AS(g->parse("x1"), ParseError);
  CHECK_THROWS_AS(g->parse("t[1,2]"), ParseError);

  auto h = oracle::group("type=A1;lattice=coweight");
  CHECK(h->parse("t[1] s1") == h->omega_gen(1));
  CHECK(h->format(h->omega_gen(1)) == "pi1");
  CHECK(h->format(h->mul(h->simple_refl(1), h->omega_gen(1))) == "s1 pi1");
}

TEST_CASE("automorphisms preserve length") {
  auto g = oracle::group("type=A2;lattice=coweight");
  for (const char* text : {"id", "swap(1,2)", "ad:pi1", "ad:pi2*swap(1,2)"}) {
    const auto sigma = g->parse_auto(text);
    for (const auto& w : g->elements_upto(5)) CHECK(g->length(g->apply_auto(sigma, w)) == g->length(w));
  }
}

TEST_CASE("twisted powers") {
  auto g = oracle::group("type=A1;lattice=coroot");
  const auto id = g->identity_auto();
  const auto t = g->parse("s0 s1");
  CHECK(g->twisted_power(t, 3, id) == g->translation(std::vector<std::int64_t>{3}));
  CHECK(g->length(g->twisted_power(t, 3, id)) == 6);
  CHECK(g->twisted_power(g->identity(), 5, id) == g->identity());
  CHECK(g->twisted_power(t, 1, id) == t);

  auto a2 = oracle::group("type=A2;lattice=coweight");
  const auto swap = a2->parse_auto("swap(1,2)");
  CHECK(a2->twisted_power(a2->simple_refl(1), 2, swap) == a2->parse("s1 s2"));
  CHECK(a2->length(a2->twisted_power(a2->simple_refl(1), 2, swap)) == 2);

  std::mt19937 rng(5);
  for (const char* text : {"id", "swap(1,2)", "ad:pi1", "ad:pi2*swap(1,2)"}) {
    const auto sigma = a2->parse_auto(text);
    for (int k = 0; k < 30; ++k) {
      const auto w = oracle::random_element(*a2, 4, rng);
      const int m = 1 + k % 3, n = 1 + (k / 3) % 3;
      const auto lhs = a2->twisted_power(w, m + n, sigma);
      const auto rhs =
          a2->mul(a2->twisted_power(w, m, sigma), a2->apply_auto(a2->power(sigma, m), a2->twisted_power(w, n, sigma)));
      CHECK(lhs == rhs);
      CHECK(a2->length(a2->twisted_power(w, m, sigma)) <= m * a2->length(w));
    }
  }
}

TEST_CASE("bruhat examples") {
  auto g = oracle::group("type=A1;lattice=coroot");
  const auto s0 = g->simple_refl(0), s1 = g->simple_refl(1);
  const auto iv = g->bruhat_interval(g->mul(s0, s1));
  CHECK(std::set<ExtAffElt>(iv.begin(), iv.end()) ==
        std::set<ExtAffElt>{g->identity(), s0, s1, g->mul(s0, s1)});
  CHECK_FALSE(g->bruhat_leq(s0, s1));
  CHECK(g->bruhat_leq(g->identity(), s1));

  auto h = oracle::group("type=A1;lattice=coweight");
  const auto pi = h->omega_gen(1);
  const auto w = h->parse("s1 s0 pi1");
  CHECK(h->bruhat_leq(pi, w));
  CHECK_FALSE(h->bruhat_leq(h->identity(), w));
  CHECK_FALSE(h->bruhat_leq(h->simple_refl(1), w));
  CHECK(h->bruhat_leq(h->parse("s1 pi1"), w));
}

TEST_CASE("bruhat order against the descent recursion") {
  for (const char* cfg : {"type=A1;lattice=coweight", "type=A2;lattice=coroot", "type=A2;lattice=coweight",
                          "type=C2;lattice=coroot", "type=G2;lattice=coroot"}) {
    CAPTURE(cfg);
    auto g = oracle::group(cfg);
    oracle::BruhatOracle bo(*g);
    const auto ball = oracle::cayley_distances(*g, 5);
    for (const auto& w : g->elements_upto(5)) {
      auto iv = g->bruhat_interval(w);
      std::sort(iv.begin(), iv.end());
      CHECK(iv == oracle::interval(*g, bo, ball, w));
    }
  }
}

TEST_CASE("bruhat intervals do not depend on the reduced word") {
  for (const char* cfg : {"type=A1;lattice=coroot", "type=A2;lattice=coroot", "type=A2;lattice=coweight"}) {
    auto g = oracle::group(cfg);
    for (const auto& w : g->elements_upto(6)) {
      const auto a = g->as_word(g->waff_part(w)).letters;
      const auto b = word_via_inverse(*g, w);
      CHECK(static_cast<int>(b.size()) == g->length(w));
      auto x = g->bruhat_interval(w, a), y = g->bruhat_interval(w, b);
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      CHECK(x == y);
    }
  }
}

TEST_CASE("bruhat order is a partial order") {
  for (const char* cfg : {"type=A1;lattice=coweight", "type=A2;lattice=coroot", "type=C2;lattice=coroot"}) {
    CAPTURE(cfg);
    auto g = oracle::group(cfg);
    const auto elts = g->elements_upto(6);
    const std::size_t n = elts.size();
    std::vector<char> leq(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = g->bruhat_leq(elts[i], elts[j]);
    }
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bad += !leq[i * n + i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq[i * n + j] && leq[j * n + i]) ++bad;
        if (!leq[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) bad += leq[j * n + k] && !leq[i * n + k];
      }
    }
    CHECK(bad == 0);
  }
}
