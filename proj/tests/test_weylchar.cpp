#include <gtest/gtest.h>

#include "foldweyl/weylchar.hpp"
#include "oracles.hpp"

using namespace foldweyl;

namespace {

Character to_lib(const oracles::Character& ch) { return Character(ch.begin(), ch.end()); }

}  // namespace

TEST(FundamentalTable, TypeAEntriesAreExteriorPowers) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(fundamental_character('A', n, i), to_lib(oracles::exterior_power(n, i + 1)));
      EXPECT_EQ(fundamental_table_entry('A', n, i).weights.size(), 1u);
    }
}

TEST(FundamentalTable, D4AndE6Dimensions) {
  const std::vector<std::int64_t> d4{8, 29, 8, 8};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(character_dimension(fundamental_character('D', 4, i)), d4[i]);
  // The adjoint node carries an extra trivial summand.
  EXPECT_EQ(fundamental_table_entry('D', 4, 1).weights, (std::vector<Weight>{{0, 1, 0, 0}, {0, 0, 0, 0}}));
  EXPECT_EQ(character_dimension(fundamental_character('E', 6, 0)), 27);
  EXPECT_EQ(character_dimension(fundamental_character('E', 6, 5)), 27);
  EXPECT_EQ(character_dimension(fundamental_character('E', 6, 1)), 79);
  EXPECT_EQ(fundamental_table_entry('E', 6, 0).provenance, Provenance::OracleVerified);
  EXPECT_EQ(fundamental_table_entry('E', 6, 1).provenance, Provenance::SuppliedData);
  EXPECT_THROW(fundamental_table_entry('E', 6, 3), TableGapError);
  EXPECT_THROW(fundamental_table_entry('E', 7, 0), TableGapError);
}

TEST(UntwistedCharacter, Sl2TensorPowers) {
  const CartanDatum a1 = CartanDatum::make('A', 1);
  for (int n = 1; n <= 5; ++n) {
    const auto r = untwisted_weyl_character(pi_lambda_a(a1, {n}, FieldElement(1)));
    EXPECT_EQ(r.character, to_lib(oracles::power(oracles::sl2_irrep(1), n)));
    EXPECT_EQ(r.dimension, std::int64_t{1} << n);
  }
  // Parameters do not change the character.
  const DrinfeldTuple p(a1, {{0, FieldElement(1), 1}, {0, FieldElement(2), 2}});
  EXPECT_EQ(untwisted_weyl_character(p).dimension, 8);
}

TEST(UntwistedCharacter, MixedNodes) {
  const CartanDatum a2 = CartanDatum::make('A', 2);
  const auto p = pi_lambda_a(a2, {1, 0}, FieldElement(1)) * pi_lambda_a(a2, {0, 1}, FieldElement(2));
  const auto r = untwisted_weyl_character(p);
  EXPECT_EQ(r.character, to_lib(oracles::product(oracles::exterior_power(2, 1), oracles::exterior_power(2, 2))));
  EXPECT_EQ(r.decomposition, (std::map<Weight, std::int64_t>{{{1, 1}, 1}, {{0, 0}, 1}}));
  const auto d = untwisted_weyl_character(pi_lambda_a(CartanDatum::make('D', 4), {1, 1, 0, 0}, FieldElement(1)));
  EXPECT_EQ(d.dimension, 8 * 29);
}

TEST(TwistedCharacter, A2RestrictsTheVectorRepresentation) {
  const DiagramFold f = DiagramFold::make('A', 2, 2);
  const auto r = twisted_weyl_character(pi_sigma_lambda_a(f, {2}, FieldElement(1)));
  // h_{1,0} = 2(h_1 + h_2) on the weights of C^3.
  oracles::Character expected;
  for (const auto& [w, mult] : oracles::exterior_power(2, 1)) expected[{2 * (w[0] + w[1])}] += mult;
  EXPECT_EQ(r.character, to_lib(expected));
  EXPECT_EQ(r.dimension, 3);
  EXPECT_EQ(r.algebra, "A1");
}

TEST(TwistedCharacter, A3GivesTheC2VectorRepresentation) {
  const DiagramFold f = DiagramFold::make('A', 3, 2);
  const auto r = twisted_weyl_character(pi_sigma_lambda_a(f, {1, 0}, FieldElement(1)));
  // +-e1, +-e2 in fundamental coordinates of C2.
  EXPECT_EQ(r.character, (Character{{{1, 0}, 1}, {{-1, 1}, 1}, {{-1, 0}, 1}, {{1, -1}, 1}}));
  const auto s = twisted_weyl_character(pi_sigma_lambda_a(f, {0, 1}, FieldElement(1)));
  EXPECT_EQ(s.dimension, 6);
  EXPECT_EQ(s.decomposition, (std::map<Weight, std::int64_t>{{{0, 1}, 1}, {{0, 0}, 1}}));
}

TEST(TwistedCharacter, FactorizationTree) {
  const DiagramFold f = DiagramFold::make('A', 2, 2);
  const auto p = pi_sigma_lambda_a(f, {2}, FieldElement(1)) * pi_sigma_lambda_a(f, {2}, FieldElement(2));
  const FactorNode tree = twisted_factorization(p);
  EXPECT_EQ(tree.children.size(), 2u);
  EXPECT_EQ(tree_dimension(tree), 9);
  EXPECT_EQ(twisted_weyl_character(p).dimension, 9);

  // One class, two eps pieces: a and -a.
  const DiagramFold g = DiagramFold::make('A', 3, 2);
  const auto q = pi_sigma_lambda_a(g, {1, 0}, FieldElement(1)) * pi_sigma_lambda_a(g, {1, 0}, FieldElement(-1));
  const FactorNode t2 = twisted_factorization(q);
  ASSERT_EQ(t2.children.size(), 1u);
  EXPECT_EQ(t2.children[0].children.size(), 2u);
  EXPECT_EQ(tree_dimension(t2), 16);
}

TEST(TwistedCharacter, D4TrialityAndE6) {
  const DiagramFold d = DiagramFold::make('D', 4, 3);
  EXPECT_EQ(twisted_weyl_character(pi_sigma_lambda_a(d, {1, 0}, FieldElement(1))).dimension, 8);
  EXPECT_EQ(twisted_weyl_character(pi_sigma_lambda_a(d, {0, 1}, FieldElement(1))).dimension, 29);
  const DiagramFold e = DiagramFold::make('E', 6, 2);
  const auto r = twisted_weyl_character(pi_sigma_lambda_a(e, {1, 0, 0, 0}, FieldElement(1)));
  EXPECT_EQ(r.dimension, 27);
  EXPECT_EQ(r.algebra, "F4");
  // 27 = 26 + 1 under F4.
  EXPECT_EQ(r.decomposition.size(), 2u);
}

TEST(RestrictCharacter, PreservesDimension) {
  const DiagramFold f = DiagramFold::make('D', 4, 2);
  const Character& ch = fundamental_character('D', 4, 0);
  EXPECT_EQ(character_dimension(restrict_character(f, ch)), 8);
}
