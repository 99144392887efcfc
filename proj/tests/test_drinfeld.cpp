#include <gtest/gtest.h>

#include <random>

#include "foldweyl/drinfeld.hpp"

using namespace foldweyl;

namespace {

Factor factor(int node, FieldElement a, int mult = 1) { return Factor{node, std::move(a), mult}; }

}  // namespace

TEST(DrinfeldTuple, CanonicalFormMergesFactors) {
  const CartanDatum a2 = CartanDatum::make('A', 2);
  const DrinfeldTuple p(a2, {factor(1, FieldElement(2)), factor(0, FieldElement(3)), factor(1, FieldElement(2))});
  ASSERT_EQ(p.factors().size(), 2u);
  EXPECT_EQ(p.factors()[0].node, 0);
  EXPECT_EQ(p.factors()[1].mult, 2);
  EXPECT_EQ(p.highest_weight(), (Weight{1, 2}));
  const DrinfeldTuple q = pi_lambda_a(a2, {1, 2}, FieldElement(5));
  EXPECT_EQ((p * q).highest_weight(), (Weight{2, 4}));
  EXPECT_THROW(DrinfeldTuple(a2, {factor(2, FieldElement(1))}), InputError);
  EXPECT_THROW(DrinfeldTuple(a2, {factor(0, FieldElement(0))}), InputError);
}

TEST(DrinfeldTuple, InversionAndScaling) {
  const CartanDatum a1 = CartanDatum::make('A', 1);
  const DrinfeldTuple p = pi_lambda_a(a1, {2}, FieldElement(4));
  EXPECT_EQ(pi_minus(p), pi_lambda_a(a1, {2}, FieldElement(Rational(1, 4))));
  EXPECT_EQ(scale_parameters(p, FieldElement(3)), pi_lambda_a(a1, {2}, FieldElement(12)));
}

TEST(Reduction, A2FiberHasTwoElements) {
  const DiagramFold f = DiagramFold::make('A', 2, 2);
  for (long a : {1L, 2L, -3L}) {
    const TwistedDrinfeldTuple p = pi_sigma_lambda_a(f, {2}, FieldElement(a));
    EXPECT_EQ(p.highest_weight(), (Weight{2}));
    const auto fib = fiber(p);
    ASSERT_EQ(fib.size(), 2u);
    const CartanDatum& g = f.parent;
    EXPECT_EQ(fib[0], DrinfeldTuple(g, {factor(0, FieldElement(a))}));
    EXPECT_EQ(fib[1], DrinfeldTuple(g, {factor(1, FieldElement(-a))}));
    for (const auto& x : fib) EXPECT_EQ(reduce_r(f, x), p);
  }
  EXPECT_THROW(pi_sigma_lambda_a(f, {1}, FieldElement(1)), InputError);
}

TEST(Reduction, A3FiberSwapsTheEndNodes) {
  const DiagramFold f = DiagramFold::make('A', 3, 2);
  const TwistedDrinfeldTuple p = pi_sigma_lambda_a(f, {1, 0}, FieldElement(3));
  const auto fib = fiber(p);
  ASSERT_EQ(fib.size(), 2u);
  EXPECT_EQ(fib[0], DrinfeldTuple(f.parent, {factor(0, FieldElement(3))}));
  EXPECT_EQ(fib[1], DrinfeldTuple(f.parent, {factor(2, FieldElement(-3))}));
}

TEST(Reduction, D4FixedNodeFiberHasThreeRoots) {
  const DiagramFold f = DiagramFold::make('D', 4, 3);
  const FieldElement z = FieldElement::zeta(3);
  const TwistedDrinfeldTuple p = pi_sigma_lambda_a(f, {0, 1}, FieldElement(3));
  EXPECT_EQ(p.root(p.factors()[0]), FieldElement(27));
  const auto fib = fiber(p);
  ASSERT_EQ(fib.size(), 3u);
  for (const auto& x : fib) {
    ASSERT_EQ(x.factors().size(), 1u);
    EXPECT_EQ(x.factors()[0].node, 1);
    EXPECT_EQ(x.factors()[0].param.pow(3), FieldElement(27));
    EXPECT_EQ(reduce_r(f, x), p);
  }
  EXPECT_EQ(fib[1].factors()[0].param, FieldElement(3) * z);
}

TEST(Reduction, OrbitNodeRotatesTheParameter) {
  const DiagramFold f = DiagramFold::make('D', 4, 3);
  const TwistedDrinfeldTuple r = reduce_r(f, pi_lambda_a(f.parent, {0, 0, 1, 0}, FieldElement(3)));
  EXPECT_EQ(r, TwistedDrinfeldTuple(f, {factor(0, FieldElement(3) * FieldElement::zeta(3))}));
}

TEST(Reduction, FiberOfAProduct) {
  const DiagramFold f = DiagramFold::make('A', 3, 2);
  const auto p = pi_sigma_lambda_a(f, {1, 0}, FieldElement(3)) * pi_sigma_lambda_a(f, {1, 0}, FieldElement(-3));
  EXPECT_EQ(fiber(p).size(), 4u);
  EXPECT_EQ(preferred_preimage(p), DrinfeldTuple(f.parent, {factor(0, FieldElement(3)), factor(2, FieldElement(3))}));
  const auto big = pi_sigma_lambda_a(f, {2, 1}, FieldElement(3)) * pi_sigma_lambda_a(f, {1, 0}, FieldElement(5));
  const auto fib = fiber(big);
  EXPECT_EQ(fib.size(), 12u);
  for (const auto& x : fib) EXPECT_EQ(reduce_r(f, x), big);
  EXPECT_THROW(fiber(big, 5), ResourceLimitError);
}

TEST(Reduction, RandomRoundTrips) {
  std::mt19937 rng(11);
  for (const auto& [type, rank, m] : std::vector<std::tuple<char, int, int>>{{'A', 2, 2}, {'A', 4, 2}, {'D', 4, 2}, {'D', 4, 3}}) {
    const DiagramFold f = DiagramFold::make(type, rank, m);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Factor> fs;
      for (int k = 0; k < 3; ++k) {
        FieldElement a(static_cast<long>(rng() % 5) + 1);
        if (rng() % 2) a = -a;
        if (m == 3 && rng() % 2) a *= FieldElement::zeta(3);
        fs.push_back(factor(static_cast<int>(rng() % static_cast<unsigned>(rank)), a));
      }
      const DrinfeldTuple pi(f.parent, fs);
      const TwistedDrinfeldTuple r = reduce_r(f, pi);
      EXPECT_EQ(reduce_r(f, preferred_preimage(r)), r);
      const auto fib = fiber(r);
      EXPECT_NE(std::find(fib.begin(), fib.end(), pi), fib.end());
      EXPECT_EQ(expand(f, standard_decomposition(r)), r);
    }
  }
}

TEST(StandardDecomposition, GroupsParametersByClass) {
  const DiagramFold f = DiagramFold::make('D', 4, 3);
  const FieldElement a(3);
  const auto p = pi_sigma_lambda_a(f, {1, 0}, a) * pi_sigma_lambda_a(f, {1, 0}, FieldElement::zeta(3) * a);
  const StandardDecomposition d = standard_decomposition(p);
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].a, a);
  EXPECT_EQ(d.blocks[0].weights, (std::vector<Weight>{{1, 0}, {1, 0}, {0, 0}}));
  EXPECT_EQ(expand(f, d), p);
}

TEST(LambdaEps, A2nDoublesTheShortNode) {
  const DiagramFold f = DiagramFold::make('A', 2, 2);
  EXPECT_EQ(lambda_eps(f, {1, 0}, 0), (Weight{2}));
  EXPECT_EQ(lambda_eps(f, {1, 0}, 1), (Weight{0}));
  EXPECT_EQ(lambda_eps(f, {0, 1}, 1), (Weight{2}));
  const DiagramFold g = DiagramFold::make('A', 3, 2);
  EXPECT_EQ(lambda_eps(g, {1, 1, 1}, 0), (Weight{1, 1}));
  EXPECT_EQ(lambda_eps(g, {1, 1, 1}, 1), (Weight{1, 0}));
}

TEST(ParamClass, RepresentativeUpToRootsOfUnity) {
  const FieldElement z = FieldElement::zeta(3);
  const ParamClass c = param_class(FieldElement(2) * z, 3);
  EXPECT_EQ(c.rep, FieldElement(2));
  EXPECT_EQ(c.shift, 1);
  EXPECT_EQ(param_class(FieldElement(-5), 2).rep, FieldElement(5));
  EXPECT_EQ(param_class(FieldElement(-5), 2).shift, 1);
}
