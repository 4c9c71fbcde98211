#include <gtest/gtest.h>

#include "chromax/chrompoly.hpp"
#include "chromax/families.hpp"
#include "chromax/isomorphism.hpp"

using namespace chromax;

TEST(Families, Basics) {
  EXPECT_EQ(complete(4).size(), 6);
  EXPECT_EQ(cycle(3), complete(3));
  EXPECT_EQ(path(5).size(), 4);
  SimpleGraph k23 = complete_bipartite(2, 3);
  EXPECT_EQ(k23.size(), 6);
  EXPECT_EQ(chromatic_number(k23), 2);
  EXPECT_TRUE(is_2_connected(k23));
  EXPECT_EQ(wheel(5).order(), 6);
  EXPECT_EQ(chromatic_number(wheel(5)), 4);
  EXPECT_EQ(chromatic_number(wheel(6)), 3);
}

TEST(Families, InvalidParameters) {
  for (auto bad : {+[] { complete(0); }, +[] { cycle(2); }, +[] { path(0); }, +[] { complete_bipartite(0, 3); },
                   +[] { g_nk(5, 2); }, +[] { g_nk(3, 4); }, +[] { wheel(2); }}) {
    try {
      bad();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_params);
    }
  }
}

TEST(Families, GnkExamples) {
  EXPECT_EQ(g_nk(4, 4), complete(4));
  SimpleGraph g = g_nk(6, 4);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 9);  // 6 clique edges plus a 3-edge ear
  EXPECT_EQ(chromatic_number(g), 4);
  EXPECT_EQ(clique_number(g), 4);
  EXPECT_EQ(vertex_connectivity(g), 2);
  EXPECT_EQ(chromatic_polynomial(g_nk(7, 4)).poly, f_bound(7, 4));
}

TEST(Families, GnkProperties) {
  for (int k = 4; k <= 7; ++k)
    for (int n = k; n <= k + 5; ++n) {
      SimpleGraph g = g_nk(n, k);
      EXPECT_TRUE(is_2_connected(g));
      EXPECT_EQ(chromatic_number(g), k);
      EXPECT_EQ(clique_number(g), k);
      EXPECT_EQ(chromatic_polynomial(g).poly, f_bound(n, k)) << n << "," << k;
    }
}

TEST(Families, GnkEarPlacementIsArbitrary) {
  // attaching the ear to vertices 2 and 3 instead gives an isomorphic graph
  SimpleGraph g = g_nk(8, 5);
  std::vector<int> perm{2, 3, 0, 1, 4, 5, 6, 7};
  EXPECT_TRUE(is_isomorphic(g, g.relabel(perm)));
}

TEST(Fixtures, ExpectedPolynomialsAllStrategies) {
  for (const auto& f : all_fixtures()) {
    ASSERT_TRUE(f.expected_poly.has_value()) << f.name;
    EXPECT_EQ(f.graph.order(), f.name == "fig2_Gprime" ? 6 : 7);
    for (Strategy s : {Strategy::automatic, Strategy::pure_delete_contract, Strategy::closure_first})
      EXPECT_EQ(chromatic_polynomial(f.graph, s).poly, *f.expected_poly) << f.name << " " << strategy_name(s);
    EXPECT_EQ(interpolate_chromatic(f.graph), *f.expected_poly) << f.name;
  }
}

TEST(Fixtures, StatedForms) {
  const IntPoly X = IntPoly::x();
  auto xm = [](int c) { return IntPoly::x_minus(c); };
  EXPECT_EQ(*fixture("fig2_Gprime").expected_poly, X * xm(1) * pow(xm(2), 2) * IntPoly({4, -3, 1}));
  EXPECT_EQ(*fixture("fig5_T2").expected_poly, xm(1) * xm(2) * xm(3) * IntPoly({0, -13, 14, -6, 1}));
  EXPECT_EQ(fixture("fig2_Gprime").graph.size(), 8);
}

TEST(Fixtures, EdgeCounts) {
  // counts implied by the stated polynomials (coefficient of x^(n-1) is -|E|)
  EXPECT_EQ(fixture("fig4_G0").graph.size(), 11);
  EXPECT_EQ(fixture("fig5_T1").graph.size(), 11);
  EXPECT_EQ(fixture("fig5_T2").graph.size(), 12);
  EXPECT_EQ(fixture("fig5_T3").graph.size(), 13);
  EXPECT_EQ(fixture("fig6").graph.size(), 12);
  for (const auto& f : all_fixtures())
    EXPECT_EQ(-f.expected_poly->coeff(static_cast<std::size_t>(f.graph.order() - 1)), f.graph.size()) << f.name;
}

TEST(Fixtures, Invariants) {
  for (const auto& f : all_fixtures()) {
    if (!f.expected_invariants) continue;
    Invariants got{chromatic_number(f.graph), clique_number(f.graph), independence_number(f.graph), vertex_connectivity(f.graph)};
    EXPECT_EQ(got, *f.expected_invariants) << f.name;
  }
  // the Figure 5 population: 4-chromatic, omega 3, alpha 2
  for (const char* name : {"fig5_T1", "fig5_T2", "fig5_T3"}) {
    SimpleGraph g = fixture(name).graph;
    EXPECT_EQ(chromatic_number(g), 4);
    EXPECT_EQ(clique_number(g), 3);
    EXPECT_EQ(independence_number(g), 2);
  }
  EXPECT_EQ(vertex_connectivity(fixture("fig5_T1").graph), 2);
  EXPECT_EQ(vertex_connectivity(fixture("fig5_T2").graph), 3);
  EXPECT_EQ(vertex_connectivity(fixture("fig5_T3").graph), 3);
}

TEST(Fixtures, Fig6IsT2) { EXPECT_TRUE(is_isomorphic(fixture("fig6").graph, fixture("fig5_T2").graph)); }

TEST(Fixtures, Unknown) {
  try {
    fixture("fig9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_fixture);
  }
  EXPECT_EQ(fixture_names().size(), 6u);
}
