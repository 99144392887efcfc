#include <gtest/gtest.h>

#include "foldweyl/chevalley.hpp"
#include "oracles.hpp"

using namespace foldweyl;

TEST(Chevalley, JacobiHoldsOnEveryTriple) {
  for (const auto& [type, rank] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'D', 4}}) {
    const ChevalleyAlgebra g(CartanDatum::make(type, rank));
    SCOPED_TRACE(g.roots().datum().name());
    EXPECT_EQ(g.dimension(), oracles::lie_dimension(type, rank));
    EXPECT_EQ(jacobi_violations(g), 0);
    EXPECT_TRUE(check_chevalley_relations(g));
  }
}

TEST(Chevalley, SampledJacobiOnE6) {
  const ChevalleyAlgebra g(CartanDatum::make('E', 6));
  EXPECT_EQ(g.dimension(), 78);
  EXPECT_EQ(jacobi_violations(g, 3000, 7), 0);
  EXPECT_TRUE(check_chevalley_relations(g));
}

TEST(Chevalley, RejectsNonSimplyLaced) {
  EXPECT_THROW(ChevalleyAlgebra(CartanDatum::make('B', 2)), InputError);
}

TEST(Chevalley, CorruptedConstantIsDetected) {
  ChevalleyAlgebra g(CartanDatum::make('A', 2));
  const int a = g.x_plus(0), b = g.x_plus(1);
  IntTerms flipped = g.bracket_basis(a, b);
  ASSERT_FALSE(flipped.empty());
  for (auto& t : flipped) t.second = -t.second;
  g.tamper(a, b, flipped);
  EXPECT_GT(jacobi_violations(g), 0);
}

TEST(Chevalley, Sl2Relations) {
  const ChevalleyAlgebra g(CartanDatum::make('A', 1));
  ASSERT_EQ(g.dimension(), 3);
  // [x+, x-] = h, [h, x+] = 2 x+, [h, x-] = -2 x-
  EXPECT_EQ(g.bracket_basis(g.x_plus(0), g.x_minus(0)), (IntTerms{{g.h(0), 1}}));
  EXPECT_EQ(g.bracket_basis(g.h(0), g.x_plus(0)), (IntTerms{{g.x_plus(0), 2}}));
  EXPECT_EQ(g.bracket_basis(g.h(0), g.x_minus(0)), (IntTerms{{g.x_minus(0), -2}}));
}

TEST(DiagramAutomorphism, OrdersAndBrackets) {
  struct Row {
    char type;
    int rank;
    std::vector<int> perm;
    int order;
  };
  const std::vector<Row> rows{{'A', 2, {1, 0}, 2},
                              {'A', 3, {2, 1, 0}, 2},
                              {'D', 4, {0, 1, 3, 2}, 2},
                              {'D', 4, {2, 1, 3, 0}, 3},
                              {'E', 6, {5, 1, 4, 3, 2, 0}, 2}};
  for (const auto& row : rows) {
    const ChevalleyAlgebra g(CartanDatum::make(row.type, row.rank));
    const DiagramAutomorphism s(g, row.perm);
    SCOPED_TRACE(g.roots().datum().name());
    EXPECT_EQ(s.order(), row.order);
    EXPECT_EQ(s.bracket_violations(g), 0);
  }
}

TEST(DiagramAutomorphism, RejectsNonSymmetry) {
  const ChevalleyAlgebra g(CartanDatum::make('A', 3));
  EXPECT_THROW(DiagramAutomorphism(g, {1, 0, 2}), InputError);
}

TEST(DiagramAutomorphism, A2nNeedsASign) {
  // On sl3 the flip sends x_{a1+a2} to -x_{a1+a2}.
  const ChevalleyAlgebra g(CartanDatum::make('A', 2));
  const DiagramAutomorphism s(g, {1, 0});
  const int top = g.roots().root_index({1, 1});
  EXPECT_EQ(s.image(g.x_plus(top)), g.x_plus(top));
  EXPECT_EQ(s.sign(g.x_plus(top)), -1);
  EXPECT_EQ(s.sign(g.x_plus(0)), 1);
}
