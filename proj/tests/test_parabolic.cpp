#include <set>

#include "doctest.h"
#include "gkmod/parabolic.hpp"

using namespace gkmod;

namespace {

RootSystem rs(const char* t) { return build_root_system(LieType::parse(t)); }

}  // namespace

TEST_CASE("regularity") {
  auto p = make_sl2_pair(rs("A2"), std::vector<int>{2, 2});
  CHECK(is_regular(p, TWeight{5}));
  CHECK_FALSE(is_regular(p, TWeight{0}));
  auto c = make_cartan_pair(rs("A2"));
  CHECK(is_regular(c, c.restrict(c.g().rho_tilde())));
  CHECK_FALSE(is_regular(c, TWeight{1, -1}));
}

TEST_CASE("A2 principal sl2 at lambda = 5") {
  auto p = make_sl2_pair(rs("A2"), std::vector<int>{2, 2});
  auto par = compatible_parabolic(p, TWeight{5});
  CHECK(par.ch_t_n == WeightMultiset<TWeight>{{TWeight{2}, 2}, {TWeight{4}, 1}});
  CHECK(par.ch_t_n_cap_k == WeightMultiset<TWeight>{{TWeight{2}, 1}});
  CHECK(par.ch_t_n_cap_kperp == WeightMultiset<TWeight>{{TWeight{2}, 1}, {TWeight{4}, 1}});
  CHECK(par.rho_n == TWeight{4});
  CHECK(par.rho_n_perp == TWeight{3});
  CHECK(par.s == 1);
  CHECK(par.r == 2);
  CHECK(par.minimal);
  CHECK(par.rho_n == p.rho() + par.rho_n_perp);
}

TEST_CASE("B2 principal sl2 at lambda = 8") {
  auto p = make_sl2_pair(rs("B2"), std::vector<int>{2, 2});
  auto par = compatible_parabolic(p, TWeight{8});
  CHECK(par.ch_t_n == WeightMultiset<TWeight>{{TWeight{2}, 2}, {TWeight{4}, 1}, {TWeight{6}, 1}});
  CHECK(par.rho_n == TWeight{7});
  CHECK(par.rho_n_perp == TWeight{6});
  CHECK(par.s == 1);
  CHECK(par.r == 3);
}

TEST_CASE("Cartan pair in A1") {
  auto p = make_cartan_pair(rs("A1"));
  auto par = compatible_parabolic(p, TWeight{1});
  CHECK(par.n_roots == std::vector<GWeight>{GWeight{1}});
  CHECK(par.s == 0);
  CHECK(par.r == 1);
  CHECK(par.rho_n == TWeight{frac(1, 2)});
  CHECK(par.rho_n_perp == TWeight{frac(1, 2)});
}

TEST_CASE("irregular lambda gives a non-minimal parabolic") {
  auto p = make_cartan_pair(rs("A2"));
  auto par = compatible_parabolic(p, TWeight{2, 1});
  CHECK_FALSE(par.minimal);
  CHECK(par.m_roots.size() == 2);
  CHECK(par.n_roots.size() == 2);
}

TEST_CASE("roots are partitioned into n, m and -n") {
  auto p = make_levi_pair(rs("B3"), {1});
  for (TWeight lambda : {TWeight{3, 5, 7}, TWeight{1, 0, 0}, TWeight{2, 3, 1}}) {
    auto par = compatible_parabolic(p, lambda);
    std::set<GWeight> n(par.n_roots.begin(), par.n_roots.end());
    std::set<GWeight> m(par.m_roots.begin(), par.m_roots.end());
    std::size_t total = 0;
    for (const auto& a : p.g().roots()) {
      int hits = n.count(a) + m.count(a) + n.count(-a);
      CHECK(hits == 1);
      ++total;
    }
    CHECK(n.size() * 2 + m.size() == total);
    for (const auto& [beta, mult] : par.ch_t_n) CHECK(p.t_pair(lambda, beta) > 0);
    CHECK(par.s + par.r == par.ch_t_n.size());
  }
}

TEST_CASE("non-dominant lambda is rejected") {
  auto p = make_sl2_pair(rs("A2"), std::vector<int>{2, 2});
  CHECK_THROWS_AS(compatible_parabolic(p, TWeight{-3}), ValidationError);
  CHECK_THROWS_AS(compatible_parabolic(p, TWeight{1, 1}), DimensionMismatch);
}

TEST_CASE("positive rescaling does not change the parabolic") {
  auto p = make_levi_pair(rs("C3"), {3});
  TWeight lambda{1, 2, 5};
  auto a = compatible_parabolic(p, lambda);
  auto b = compatible_parabolic(p, lambda * frac(7, 3));
  CHECK(a.n_roots == b.n_roots);
  CHECK(a.m_roots == b.m_roots);
  CHECK(a.ch_t_n == b.ch_t_n);
  CHECK(a.rho_n_perp == b.rho_n_perp);
}
