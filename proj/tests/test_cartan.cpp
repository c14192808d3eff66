#include <doctest.h>

#include <set>

#include "adlv/cartan.hpp"
#include "adlv/error.hpp"
#include "oracles.hpp"

using namespace adlv;
using namespace adlv::cartan;

namespace {

CoweightVec cv(std::initializer_list<Rational> xs) { return {RationalVec(xs)}; }

// Closure of +-simple roots under all simple reflections, written directly
// from the Cartan matrix.
std::set<RootVec> all_roots_by_orbit(const RootSystem& rs) {
  const int n = rs.rank();
  std::set<RootVec> seen;
  std::vector<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    for (int sgn : {1, -1}) {
      RootVec e(n, 0);
      e[i] = sgn;
      if (seen.insert(e).second) queue.push_back(e);
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int i = 0; i < n; ++i) {
      RootVec r = queue[h];
      int c = 0;
      for (int j = 0; j < n; ++j) c += rs.cartan(i, j) * r[j];
      r[i] -= c;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("root counts match orbit generation") {
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                                   {'C', 2}, {'C', 3}, {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4},
                                                   {'E', 6}, {'E', 7}, {'E', 8}};
  for (auto [family, rank] : types) {
    CAPTURE(family);
    CAPTURE(rank);
    const auto c = build_cartan(family, rank, Lattice::coroot);
    const auto& rs = c.roots;
    const auto orbit = all_roots_by_orbit(rs);
    CHECK(orbit.size() == 2 * rs.positive_roots().size());
    CHECK(rs.positive_roots().size() == expected_positive_root_count(family, rank));
    for (const auto& a : rs.positive_roots()) CHECK(orbit.count(a) == 1);
  }
}

TEST_CASE("small root systems") {
  const auto a1 = build_cartan('A', 1, Lattice::coroot);
  CHECK(a1.roots.positive_roots() == std::vector<RootVec>{{1}});
  CHECK(a1.roots.two_rho() == RootVec{1});
  CHECK(build_cartan('A', 2, Lattice::coroot).roots.positive_roots().size() == 3);
  CHECK(build_cartan('G', 2, Lattice::coroot).roots.positive_roots().size() == 6);
  CHECK(build_cartan('G', 2, Lattice::coroot).roots.highest_root() == RootVec{3, 2});
  CHECK(build_cartan('C', 2, Lattice::coroot).roots.highest_root() == RootVec{2, 1});
  CHECK(build_cartan('B', 2, Lattice::coroot).roots.highest_root() == RootVec{1, 2});
}

TEST_CASE("reflection closure") {
  for (auto [family, rank] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}, {'F', 4}}) {
    const auto c = build_cartan(family, rank, Lattice::coroot);
    const auto& rs = c.roots;
    for (const auto& a : rs.positive_roots()) {
      for (int i = 0; i < rank; ++i) {
        RootVec r = a;
        int k = 0;
        for (int j = 0; j < rank; ++j) k += rs.cartan(i, j) * a[j];
        r[i] -= k;
        RootVec neg = r;
        for (auto& x : neg) x = -x;
        CHECK((rs.is_root(r) || rs.is_root(neg)));
      }
    }
  }
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(build_cartan('A', 0, Lattice::coroot), ConfigError);
  CHECK_THROWS_AS(build_cartan('G', 3, Lattice::coroot), ConfigError);
  CHECK_THROWS_AS(build_cartan('E', 5, Lattice::coroot), ConfigError);
  CHECK_THROWS_AS(build_cartan('X', 2, Lattice::coroot), ConfigError);
  CHECK_THROWS_AS(parse_cartan_config("type=A2;lattice=weird"), ConfigError);
  CHECK(parse_cartan_config("type=A2;lattice=coweight").datum.config_string() == "type=A2;lattice=coweight");
  CHECK(parse_cartan_config("type=C2").datum.lattice == Lattice::coroot);
}

TEST_CASE("pairing examples") {
  const auto a1 = build_cartan('A', 1, Lattice::coroot);
  CHECK(a1.roots.pair(cv({1}), {1}) == Rational(2));
  const auto a2 = build_cartan('A', 2, Lattice::coroot);
  const auto& rs = a2.roots;
  CHECK(rs.pair(cv({1, 0}), {0, 1}) == Rational(-1));
  CHECK(rs.pair(cv({1, 1}), rs.highest_root()) == Rational(2));
  CHECK_THROWS(rs.pair(cv({1}), {1, 0}));
  // Fundamental coweights are dual to the simple roots.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(rs.pair(rs.fundamental_coweight(i), rs.simple_root(j)) == Rational(i == j));
  }
  CHECK(rs.fundamental_coweight(0) == cv({Rational(2, 3), Rational(1, 3)}));
}

TEST_CASE("dominant representatives") {
  const auto a1 = build_cartan('A', 1, Lattice::coroot);
  auto [d, word] = dominant_rep(a1.roots, cv({-1}));
  CHECK(d == cv({1}));
  CHECK(word == std::vector<int>{1});

  auto [same, empty] = dominant_rep(a1.roots, cv({2}));
  CHECK(same == cv({2}));
  CHECK(empty.empty());

  for (char family : {'A', 'C', 'G'}) {
    const auto c = build_cartan(family, 2, Lattice::coroot);
    const auto& rs = c.roots;
    for (int x = -3; x <= 3; ++x) {
      for (int y = -3; y <= 3; ++y) {
        const CoweightVec v = cv({Rational(x), Rational(y, 2)});
        auto [dom, w] = dominant_rep(rs, v);
        CHECK(rs.is_dominant(dom));
        CHECK(dom == oracle::dominant_by_orbit(rs, v));
        CHECK(dominant_rep(rs, dom).first == dom);
        // The word maps v to dom.
        CoweightVec u = v;
        for (auto it = w.rbegin(); it != w.rend(); ++it) u = rs.reflect(u, *it - 1);
        CHECK(u == dom);
      }
    }
  }

  const auto a2 = build_cartan('A', 2, Lattice::coroot);
  const CoweightVec v = cv({1, -1});
  const auto orbit = oracle::orbit(a2.roots, v);
  CHECK(orbit.size() <= 6);
  const auto dom = dominant_rep(a2.roots, v).first;
  CHECK(a2.roots.is_dominant(dom));
  CHECK(std::find(orbit.begin(), orbit.end(), dom) != orbit.end());
}

TEST_CASE("dominance order") {
  const auto a1 = build_cartan('A', 1, Lattice::coroot);
  CHECK(dominance_leq(a1.roots, cv({0}), cv({1})));
  CHECK(dominance_leq(a1.roots, cv({1}), cv({1})));
  CHECK_THROWS_AS(dominance_leq(a1.roots, cv({-1}), cv({1})), ConfigError);

  const auto a2 = build_cartan('A', 2, Lattice::coroot);
  const auto& rs = a2.roots;
  const auto w1 = rs.fundamental_coweight(0), w2 = rs.fundamental_coweight(1);
  // omega_2 - omega_1 in the coroot basis, solved by hand: (-1/3, 1/3).
  CHECK((w2 - w1) == cv({Rational(-1, 3), Rational(1, 3)}));
  CHECK_FALSE(dominance_leq(rs, w1, w2));
  CHECK_FALSE(dominance_leq(rs, w2, w1));

  for (char family : {'A', 'B', 'C', 'G'}) {
    const auto c = build_cartan(family, 2, Lattice::coroot);
    const auto& r = c.roots;
    std::vector<CoweightVec> dom;
    for (int x = 0; x <= 3; ++x) {
      for (int y = 0; y <= 3; ++y) {
        dom.push_back(r.from_simple_pairings({Rational(x), Rational(y)}));
      }
    }
    for (const auto& a : dom) {
      CHECK(dominance_leq(r, a, a));
      for (const auto& b : dom) {
        if (dominance_leq(r, a, b) && dominance_leq(r, b, a)) CHECK(a == b);
        for (const auto& c2 : dom) {
          if (dominance_leq(r, a, b) && dominance_leq(r, b, c2)) CHECK(dominance_leq(r, a, c2));
        }
      }
    }
  }
}
