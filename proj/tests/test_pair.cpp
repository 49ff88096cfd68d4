#include <set>

#include "doctest.h"
#include "gkmod/pair.hpp"

using namespace gkmod;

namespace {

RootSystem rs(const char* t) { return build_root_system(LieType::parse(t)); }

ReductivePair sl2(const char* t, std::vector<int> labels) { return make_sl2_pair(rs(t), labels); }

std::vector<TWeight> ts(std::initializer_list<int> xs) {
  std::vector<TWeight> out;
  for (int x : xs) out.push_back(TWeight{x});
  return out;
}

}  // namespace

TEST_CASE("principal sl2 in A2") {
  auto p = sl2("A2", {2, 2});
  CHECK(p.rank_t() == 1);
  CHECK(p.delta_t() == ts({-4, -2, 2, 4}));
  CHECK(p.rho() == TWeight{1});
  CHECK(p.k_positive_roots() == ts({2}));
  CHECK(p.restrict(GWeight{1, 1}) == TWeight{4});
  CHECK(p.restrict(GWeight{0, 0}) == TWeight{0});
  CHECK(p.t_form()(0, 0) == frac(1, 8));
  CHECK(p.t_pair(p.rho(), p.rho() * Rational(2)) / p.t_pair(p.rho(), p.rho()) == 2);
  CHECK(p.t_pair(TWeight{3}, TWeight{0}) == 0);
  CHECK(p.t_pair(TWeight{3}, TWeight{-2}) < 0);
}

TEST_CASE("principal sl2 in B2 restricts roots to 2, 2, 4, 6") {
  auto p = sl2("B2", {2, 2});
  std::multiset<TWeight> got;
  for (const auto& a : p.g().positive_roots()) got.insert(p.restrict(a));
  CHECK(got == std::multiset<TWeight>{TWeight{2}, TWeight{2}, TWeight{4}, TWeight{6}});
}

TEST_CASE("sl2 in A1 is the identity embedding") {
  auto p = sl2("A1", {2});
  CHECK(p.delta_t() == ts({-2, 2}));
  CHECK(p.t_pair(TWeight{2}, TWeight{2}) == 2);
}

TEST_CASE("sl2 label validation") {
  CHECK_THROWS_AS(sl2("A2", {3, 0}), ValidationError);
  CHECK_THROWS_AS(sl2("A2", {0, 0}), ValidationError);
  CHECK_THROWS_AS(sl2("A2", {2}), ValidationError);
  // h = (4/3) a1 + (2/3) a2 is not in the coroot lattice.
  CHECK_THROWS_AS(sl2("A2", {2, 0}), ValidationError);
  CHECK_NOTHROW(sl2("A2", {1, 1}));
  CHECK_NOTHROW(sl2("B2", {0, 2}));
}

TEST_CASE("every restricted root is a multiple of rho for sl2 pairs") {
  for (auto [t, labels] : {std::pair{"B3", std::vector<int>{2, 2, 2}}, std::pair{"G2", std::vector<int>{0, 2}},
                           std::pair{"C3", std::vector<int>{0, 0, 2}}}) {
    auto p = sl2(t, labels);
    for (const auto& s : p.delta_t()) CHECK(s[0] != 0);
  }
}

TEST_CASE("Cartan pairs") {
  auto a1 = make_cartan_pair(rs("A1"));
  CHECK(a1.delta_t() == std::vector<TWeight>{TWeight{-1}, TWeight{1}});
  CHECK(a1.rho() == TWeight{0});
  CHECK(a1.k_positive_roots().empty());
  CHECK(make_cartan_pair(rs("A2")).delta_t().size() == 6);
  auto b2 = make_cartan_pair(rs("B2"));
  CHECK(b2.delta_t().size() == 8);
  CHECK(b2.restrict(GWeight{1, 2}) == TWeight{1, 2});
  CHECK(b2.t_pair(TWeight{0, 1}, TWeight{0, 1}) == 1);
}

TEST_CASE("Levi pairs") {
  auto a2 = make_levi_pair(rs("A2"), {1});
  CHECK(a2.k_positive_roots() == std::vector<TWeight>{TWeight{1, 0}});
  CHECK(a2.rho() == TWeight{frac(1, 2), 0});
  auto empty = make_levi_pair(rs("A2"), {});
  auto cartan = make_cartan_pair(rs("A2"));
  CHECK(empty.delta_t() == cartan.delta_t());
  CHECK(empty.rho() == cartan.rho());
  CHECK(empty.t_form() == cartan.t_form());
  CHECK(make_levi_pair(rs("B2"), {2}).k_positive_roots() == std::vector<TWeight>{TWeight{0, 1}});
  CHECK_THROWS_AS(make_levi_pair(rs("A2"), {3}), ValidationError);
  auto full = make_levi_pair(rs("A2"), {1, 2});
  CHECK(full.k_positive_roots().size() == 3);
}

TEST_CASE("explicit data reproduces the principal sl2 in A2") {
  auto g = rs("A2");
  auto ex = make_explicit_pair(g, RMatrix{{2, 2}}, {TWeight{2}}, {{1}});
  auto p = make_sl2_pair(g, std::vector<int>{2, 2});
  CHECK(ex.delta_t() == p.delta_t());
  CHECK(ex.rho() == p.rho());
  CHECK(ex.t_form() == p.t_form());
  CHECK(ex.embedding_kind() == EmbeddingKind::explicit_data);
}

TEST_CASE("explicit data with identity restriction and no k roots is the Cartan pair") {
  auto g = rs("B2");
  auto ex = make_explicit_pair(g, RMatrix::identity(2), {}, {});
  auto c = make_cartan_pair(g);
  CHECK(ex.delta_t() == c.delta_t());
  CHECK(ex.t_form() == c.t_form());
}

TEST_CASE("explicit data validation") {
  auto g = rs("A2");
  CHECK_THROWS_AS(make_explicit_pair(g, RMatrix{{2, 2}}, {TWeight{3}}, {{frac(2, 3)}}), ValidationError);
  CHECK_THROWS_AS(make_explicit_pair(g, RMatrix{{1, 1}, {2, 2}}, {}, {}), ValidationError);
  CHECK_THROWS_AS(make_explicit_pair(g, RMatrix{{1, 1, 1}}, {}, {}), DimensionMismatch);
  // Root in Delta_t but the coroot functional is not the one the form induces.
  CHECK_THROWS_AS(make_explicit_pair(g, RMatrix{{2, 2}}, {TWeight{2}}, {{frac(1, 2)}}), ValidationError);
}

TEST_CASE("restrict after lift is the identity") {
  for (auto p : {sl2("B3", {2, 2, 2}), make_levi_pair(rs("C3"), {2, 3}), make_cartan_pair(rs("G2")),
                 make_explicit_pair(rs("A3"), RMatrix{{1, 0, 1}, {0, 1, 0}}, {}, {})}) {
    RMatrix id = p.restriction() * p.lift_matrix();
    CHECK(id == RMatrix::identity(p.rank_t()));
    for (const auto& s : p.delta_t()) CHECK(p.t_pair(s, s) > 0);
  }
}

TEST_CASE("rho is dominant regular for k") {
  auto p = make_levi_pair(rs("B3"), {1, 2});
  for (std::size_t i = 0; i < p.k_simple_roots().size(); ++i) CHECK(p.coroot_pairing(p.rho(), i) == 1);
  CHECK(p.k_weyl_group().size() == 6);
}

TEST_CASE("Cartan and Levi forms agree with the form of g") {
  auto g = rs("B2");
  auto l = make_levi_pair(g, {1});
  for (const auto& a : g.positive_roots())
    for (const auto& b : g.positive_roots()) CHECK(l.t_pair(l.restrict(a), l.restrict(b)) == g.pair(a, b));
}
