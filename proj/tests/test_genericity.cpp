#include "doctest.h"
#include "gkmod/genericity.hpp"
#include "oracles.hpp"

using namespace gkmod;

namespace {

RootSystem rs(const char* t) { return build_root_system(LieType::parse(t)); }

ReductivePair sl2(const char* t, std::vector<int> labels) { return make_sl2_pair(rs(t), labels); }

}  // namespace

TEST_CASE("norm2_shifted") {
  auto p = sl2("A2", {2, 2});
  Rational c = p.t_pair(TWeight{1}, TWeight{1});
  CHECK(c > 0);
  CHECK(norm2_shifted(p, TWeight{0}) == 4 * c);
  CHECK(norm2_shifted(p, TWeight{-2}) == 0);
  auto cartan = make_cartan_pair(rs("B2"));
  CHECK(norm2_shifted(cartan, TWeight{1, 1}) == cartan.t_pair(TWeight{1, 1}, TWeight{1, 1}));
}

TEST_CASE("minimal_ktype") {
  auto p = sl2("A2", {2, 2});
  std::vector<TWeight> one{TWeight{5}};
  CHECK(minimal_ktype(p, one) == TWeight{5});
  std::vector<TWeight> three{TWeight{7}, TWeight{3}, TWeight{5}};
  CHECK(minimal_ktype(p, three) == TWeight{3});
  std::vector<TWeight> twice{TWeight{4}, TWeight{4}};
  CHECK(minimal_ktype(p, twice) == TWeight{4});
  std::vector<TWeight> none;
  CHECK_THROWS_AS(minimal_ktype(p, none), ValidationError);
  std::vector<TWeight> bad{TWeight{-1}};
  CHECK_THROWS_AS(minimal_ktype(p, bad), ValidationError);
}

TEST_CASE("A2 principal sl2 is generic exactly from m = 3") {
  auto p = sl2("A2", {2, 2});
  for (int m = 0; m <= 10; ++m) {
    CAPTURE(m);
    CHECK(is_generic(p, TWeight{m}).holds == (m >= 3));
  }
  CHECK(sl2_threshold(p) == 4);
}

TEST_CASE("B2 principal sl2 is generic exactly from m = 6") {
  auto p = sl2("B2", {2, 2});
  for (int m = 0; m <= 12; ++m) {
    CAPTURE(m);
    CHECK(is_generic(p, TWeight{m}).holds == (m >= 6));
  }
  CHECK(sl2_threshold(p) == 7);
}

TEST_CASE("A1 is generic for every m") {
  auto p = sl2("A1", {2});
  CHECK(sl2_threshold(p) == 1);
  for (int m = 0; m <= 6; ++m) CHECK(is_generic(p, TWeight{m}).holds);
}

TEST_CASE("A2 at m = 2: the witness is the full multiset") {
  auto p = sl2("A2", {2, 2});
  auto rep = is_generic(p, TWeight{2});
  CHECK(rep.condition1_ok);
  CHECK_FALSE(rep.condition2_ok);
  REQUIRE(rep.failing_subset);
  CHECK(*rep.failing_subset == WeightMultiset<TWeight>{{TWeight{2}, 2}, {TWeight{4}, 1}});
  CHECK(*rep.failing_rho_s == TWeight{4});
  CHECK(*rep.failing_value == 0);
  auto brute = oracle::generic(p, TWeight{2});
  CHECK(brute.submultisets == 5);
  CHECK(brute.min_failing_size == 3);
}

TEST_CASE("Levi pair verdicts agree with the oracle") {
  auto p = make_levi_pair(rs("B3"), {1, 2});
  int checked = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = -8; c <= 2; ++c) {
        TWeight mu(p.g().from_fundamental({a, b, c}).coords());
        if (!is_regular(p, mu + p.rho() * Rational(2))) continue;
        auto rep = is_generic(p, mu);
        auto brute = oracle::generic(p, mu);
        CHECK(rep.condition1_ok == brute.condition1);
        CHECK(rep.condition2_ok == brute.condition2);
        CHECK(rep.failing_root.has_value() == !rep.condition1_ok);
        CHECK(rep.failing_subset.has_value() == !rep.condition2_ok);
        ++checked;
      }
  CHECK(checked > 20);
}

TEST_CASE("is_generic preconditions") {
  auto p = sl2("A2", {2, 2});
  CHECK_THROWS_AS(is_generic(p, TWeight{-1}), ValidationError);
  CHECK_THROWS_AS(is_generic(p, TWeight{frac(1, 2)}), ValidationError);
  CHECK_THROWS_AS(is_generic(p, TWeight{1, 2}), DimensionMismatch);
  auto c = make_cartan_pair(rs("A2"));
  CHECK_THROWS_AS(is_generic(c, TWeight{1, -1}), ValidationError);
  CHECK_THROWS_AS(sl2_threshold(c), ValidationError);
}

TEST_CASE("branch and bound search agrees with exhaustive enumeration on the A2 and B2 sl2 pairs") {
  for (auto p : {sl2("A2", {2, 2}), sl2("B2", {2, 2}), sl2("G2", {2, 2}), sl2("B3", {2, 2, 2})}) {
    for (int m = 0; m <= 15; ++m) {
      auto rep = is_generic(p, TWeight{m});
      auto brute = oracle::generic(p, TWeight{m});
      CHECK(rep.condition1_ok == brute.condition1);
      CHECK(rep.condition2_ok == brute.condition2);
      if (!brute.condition2) CHECK(rep.failing_subset->size() == brute.min_failing_size);
    }
  }
}

TEST_CASE("exact-size search") {
  auto p = sl2("A2", {2, 2});
  WeightMultiset<TWeight> ch{{TWeight{2}, 2}, {TWeight{4}, 1}};
  TWeight c{4};
  CHECK_FALSE(find_nonpositive_submultiset(p, c, ch, 1).witness);
  CHECK_FALSE(find_nonpositive_submultiset(p, c, ch, 2).witness);
  CHECK(find_nonpositive_submultiset(p, c, ch, 3).witness);
  CHECK_FALSE(find_nonpositive_submultiset(p, TWeight{5}, ch).witness);
}
