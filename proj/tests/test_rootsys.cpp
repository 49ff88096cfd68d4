#include <set>

#include "doctest.h"
#include "gkmod/rootsys.hpp"

using namespace gkmod;

namespace {

RootSystem rs(const char* t) { return build_root_system(LieType::parse(t)); }

}  // namespace

TEST_CASE("Lie type parsing and validation") {
  CHECK(LieType::parse("A1xA1").rank() == 2);
  CHECK(LieType::parse("G2").to_string() == "G2");
  CHECK_THROWS(LieType::parse("B1"));
  CHECK_THROWS(LieType::parse("D2"));
  CHECK_THROWS(LieType::parse("E9"));
  CHECK_THROWS(LieType::parse("F3"));
  CHECK_THROWS(LieType::parse("X2"));
  CHECK_THROWS(LieType::parse(""));
}

TEST_CASE("positive root counts match the classical formulas") {
  struct Case {
    const char* type;
    std::size_t roots;
  };
  for (auto c : {Case{"A1", 1}, Case{"A2", 3}, Case{"A3", 6}, Case{"A5", 15}, Case{"B2", 4}, Case{"B3", 9},
                 Case{"B4", 16}, Case{"C3", 9}, Case{"C4", 16}, Case{"D4", 12}, Case{"D5", 20}, Case{"G2", 6},
                 Case{"F4", 24}, Case{"E6", 36}, Case{"E7", 63}, Case{"E8", 120}, Case{"A1xA1", 2},
                 Case{"A2xB2", 7}}) {
    CAPTURE(c.type);
    CHECK(rs(c.type).positive_roots().size() == c.roots);
  }
}

TEST_CASE("A2 and B2 root data") {
  auto a2 = rs("A2");
  CHECK(a2.rho_tilde() == GWeight{1, 1});
  CHECK(pair(a2, GWeight{1, 0}, GWeight{0, 1}) == -1);

  auto b2 = rs("B2");
  std::set<GWeight> pos(b2.positive_roots().begin(), b2.positive_roots().end());
  CHECK(pos == std::set<GWeight>{GWeight{1, 0}, GWeight{0, 1}, GWeight{1, 1}, GWeight{1, 2}});
  CHECK(b2.rho_tilde() == GWeight{frac(3, 2), 2});
  CHECK(pair(b2, GWeight{0, 1}, GWeight{0, 1}) == 1);
  CHECK(pair(b2, GWeight{1, 0}, GWeight{1, 0}) == 2);

  auto a1 = rs("A1");
  CHECK(a1.positive_roots().size() == 1);
  CHECK(pair(a1, GWeight{1}, GWeight{1}) == 2);
  CHECK(pair(a1, GWeight{1}, GWeight{0}) == 0);
}

TEST_CASE("long roots have squared length 2 and rho~ is the half-sum") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4", "E6", "B2xG2"}) {
    CAPTURE(t);
    auto g = rs(t);
    Rational longest = 0;
    GWeight sum = GWeight::zero(g.rank());
    for (const auto& a : g.positive_roots()) {
      longest = std::max(longest, g.pair(a, a));
      sum += a;
    }
    CHECK(longest == 2);
    CHECK(sum == g.rho_tilde() * Rational(2));
  }
  auto c3 = rs("C3");
  CHECK(c3.pair(GWeight{0, 0, 1}, GWeight{0, 0, 1}) == 2);
  CHECK(c3.pair(GWeight{1, 0, 0}, GWeight{1, 0, 0}) == 1);
  auto g2 = rs("G2");
  CHECK(g2.pair(GWeight{1, 0}, GWeight{1, 0}) == frac(2, 3));
}

TEST_CASE("Weyl group orders and lengths") {
  auto a1 = weyl_group(rs("A1"));
  CHECK(a1.size() == 2);
  CHECK(a1[0].length == 0);
  CHECK(a1[1].length == 1);
  CHECK(weyl_group(rs("A2")).size() == 6);
  auto b2 = weyl_group(rs("B2"));
  CHECK(b2.size() == 8);
  int longest = 0;
  for (const auto& w : b2) longest = std::max(longest, w.length);
  CHECK(longest == 4);
  CHECK(weyl_group(rs("A3")).size() == 24);
  CHECK(weyl_group(rs("G2")).size() == 12);
  CHECK(weyl_group(rs("B3")).size() == 48);
  for (const char* t : {"A3", "B3", "C3", "G2"}) {
    auto g = rs(t);
    for (const auto& w : weyl_group(g)) {
      CHECK(static_cast<int>(w.word.size()) == w.length);
      CHECK(inversion_count(g, w) == w.length);
    }
  }
}

TEST_CASE("Weyl caps") {
  WeylLimits small;
  small.max_order = 10;
  CHECK_THROWS_AS(weyl_group(rs("B3"), small), CapExceeded);
  CHECK_THROWS_AS(weyl_group(rs("E7")), CapExceeded);
}

TEST_CASE("Weyl dimension formula") {
  auto a1 = rs("A1");
  CHECK(weyl_dim(a1, a1.fundamental_weight(0)) == 2);
  auto a2 = rs("A2");
  CHECK(weyl_dim(a2, GWeight{1, 1}) == 8);
  CHECK(weyl_dim(a2, a2.fundamental_weight(0)) == 3);
  std::vector<GWeight> none;
  CHECK(weyl_dim(a2, std::span<const GWeight>(none), GWeight{frac(-5, 3), 7}) == 1);
  CHECK(weyl_dim(rs("G2"), rs("G2").fundamental_weight(0)) == 7);
  CHECK_THROWS_AS(weyl_dim(a2, GWeight{-1, 0}), ValidationError);
  CHECK_THROWS_AS(weyl_dim(a2, GWeight{frac(1, 2), 0}), ValidationError);
}

TEST_CASE("fundamental coordinates round trip") {
  auto b3 = rs("B3");
  for (std::size_t i = 0; i < 3; ++i) {
    auto w = b3.fundamental_weight(i);
    auto f = b3.to_fundamental(w);
    for (std::size_t j = 0; j < 3; ++j) CHECK(f[j] == (i == j ? 1 : 0));
    CHECK(b3.from_fundamental(f) == w);
  }
}

TEST_CASE("positive_root_coefficients rejects affine matrices") {
  std::vector<std::vector<int>> affine{{2, -2}, {-2, 2}};
  CHECK_THROWS_AS(positive_root_coefficients(affine, 200), ValidationError);
}
