#include <gtest/gtest.h>

#include "foldweyl/rootdata.hpp"
#include "oracles.hpp"

using namespace foldweyl;

namespace {

struct TypeCase {
  char type;
  int rank;
};

const TypeCase kTypes[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4},
                           {'D', 5}, {'E', 6}, {'E', 7}, {'F', 4}, {'G', 2}};

Character to_lib(const oracles::Character& ch) { return Character(ch.begin(), ch.end()); }

}  // namespace

TEST(RootSystem, CountsMatchClosedFormulas) {
  for (const auto& [type, rank] : kTypes) {
    const RootSystem rs(CartanDatum::make(type, rank));
    SCOPED_TRACE(rs.datum().name());
    EXPECT_EQ(rs.dimension(), oracles::lie_dimension(type, rank));
    EXPECT_EQ(static_cast<int>(rs.positive_roots().size()), oracles::positive_roots(type, rank));
    EXPECT_EQ(rs.weyl_group_order(), oracles::weyl_order(type, rank));
  }
}

TEST(RootSystem, BourbakiConventions) {
  EXPECT_EQ(CartanDatum::make('G', 2).cartan[0][1], -3);
  EXPECT_EQ(CartanDatum::make('B', 3).cartan[2][1], -2);
  EXPECT_EQ(CartanDatum::make('C', 3).cartan[1][2], -2);
  EXPECT_EQ(CartanDatum::make('E', 6).cartan[1][3], -1);
  EXPECT_EQ(CartanDatum::make('D', 4).cartan[1][3], -1);
  const RootSystem g2(CartanDatum::make('G', 2));
  EXPECT_EQ(g2.highest_root(), (RootVec{3, 2}));
  EXPECT_EQ(g2.highest_short_root(), (RootVec{2, 1}));
  const RootSystem e6(CartanDatum::make('E', 6));
  EXPECT_EQ(e6.highest_root(), (RootVec{1, 2, 2, 3, 2, 1}));
  EXPECT_THROW(CartanDatum::make('D', 2), InputError);
  EXPECT_THROW(CartanDatum::make('G', 3), InputError);
  EXPECT_THROW(CartanDatum::make('X', 1), InputError);
}

TEST(RootSystem, TypeADimensionsMatchProductFormula) {
  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs(CartanDatum::make('A', n));
    Weight lambda(static_cast<std::size_t>(n), 0);
    for (int code = 0; code < (1 << (2 * n)); ++code) {
      for (int k = 0; k < n; ++k) lambda[k] = (code >> (2 * k)) & 3;
      EXPECT_EQ(rs.weyl_dimension(lambda), BigInt(oracles::sl_dimension(lambda)));
    }
  }
}

TEST(RootSystem, FundamentalCharactersOfTypeAAreExteriorPowers) {
  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs(CartanDatum::make('A', n));
    for (int i = 1; i <= n; ++i) {
      Weight w(static_cast<std::size_t>(n), 0);
      w[i - 1] = 1;
      EXPECT_EQ(rs.irreducible_character(w), to_lib(oracles::exterior_power(n, i)));
    }
  }
}

TEST(RootSystem, FreudenthalMatchesWeylDimension) {
  for (const auto& [type, rank] : kTypes) {
    if (rank > 4) continue;
    const RootSystem rs(CartanDatum::make(type, rank));
    for (int i = 0; i < rank; ++i) {
      Weight w(static_cast<std::size_t>(rank), 0);
      w[i] = 1;
      SCOPED_TRACE(rs.datum().name() + " node " + std::to_string(i + 1));
      EXPECT_EQ(BigInt(character_dimension(rs.irreducible_character(w))), rs.weyl_dimension(w));
    }
  }
}

TEST(RootSystem, KnownSmallRepresentations) {
  const RootSystem g2(CartanDatum::make('G', 2));
  EXPECT_EQ(g2.weyl_dimension({1, 0}), 7);
  EXPECT_EQ(g2.weyl_dimension({0, 1}), 14);
  const RootSystem f4(CartanDatum::make('F', 4));
  EXPECT_EQ(f4.weyl_dimension({0, 0, 0, 1}), 26);
  EXPECT_EQ(f4.weyl_dimension({1, 0, 0, 0}), 52);
  const RootSystem e6(CartanDatum::make('E', 6));
  EXPECT_EQ(e6.weyl_dimension({1, 0, 0, 0, 0, 0}), 27);
  EXPECT_EQ(e6.weyl_dimension({0, 1, 0, 0, 0, 0}), 78);
  EXPECT_EQ(e6.weyl_dimension({0, 0, 0, 1, 0, 0}), 2925);
}

TEST(RootSystem, OrbitsAndDominance) {
  const RootSystem a2(CartanDatum::make('A', 2));
  EXPECT_EQ(a2.weyl_orbit({1, 1}).size(), 6u);
  EXPECT_EQ(a2.weyl_orbit({1, 0}).size(), 3u);
  EXPECT_EQ(a2.dominant_representative({-1, 0}), (Weight{0, 1}));
  EXPECT_EQ(a2.lowest_representative({1, 0}), (Weight{0, -1}));
  EXPECT_TRUE(a2.dominates({1, 1}, {0, 0}));
  EXPECT_FALSE(a2.dominates({1, 0}, {0, 0}));
  EXPECT_TRUE(a2.in_hull({0, 0}, {1, 1}));
  EXPECT_FALSE(a2.in_hull({2, 2}, {1, 1}));
  EXPECT_THROW(a2.irreducible_character({-1, 0}), InputError);
}

TEST(RootSystem, DecomposeTensorSquare) {
  // V(w1) (x) V(w1) = V(2w1) + V(w2) for sl3.
  const RootSystem a2(CartanDatum::make('A', 2));
  const Character v = a2.irreducible_character({1, 0});
  const auto d = a2.decompose(character_product(v, v));
  EXPECT_EQ(d, (std::map<Weight, std::int64_t>{{{2, 0}, 1}, {{0, 1}, 1}}));
  // sl2 tensor cube.
  const RootSystem a1(CartanDatum::make('A', 1));
  const auto c = a1.decompose(to_lib(oracles::power(oracles::sl2_irrep(1), 3)));
  EXPECT_EQ(c, (std::map<Weight, std::int64_t>{{{3}, 1}, {{1}, 2}}));
}

TEST(RootSystem, InnerProductNormalisation) {
  // Long over short squared length.
  const RootSystem g2(CartanDatum::make('G', 2));
  EXPECT_EQ(Rational(g2.root_inner({0, 1}, {0, 1}) / g2.root_inner({1, 0}, {1, 0})), Rational(3));
  const RootSystem b2(CartanDatum::make('B', 2));
  EXPECT_EQ(Rational(b2.root_inner({1, 0}, {1, 0}) / b2.root_inner({0, 1}, {0, 1})), Rational(2));
}
