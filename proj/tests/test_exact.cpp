#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "foldweyl/exact.hpp"

using namespace foldweyl;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3/1");
  EXPECT_EQ(to_string(parse_rational("2/-4")), "-1/2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0/1");
}

TEST(Rational, RejectsGarbage) {
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(FieldElement, CubeRootOfUnity) {
  const FieldElement z = FieldElement::zeta(3);
  EXPECT_FALSE(z.is_rational());
  EXPECT_TRUE((z * z * z).is_one());
  EXPECT_TRUE((FieldElement(1) + z + z * z).is_zero());
  EXPECT_EQ(z.inverse(), z * z);
  EXPECT_EQ(z.pow(-4), z.pow(2));
  // 1 + zeta = -zeta^2, so its inverse is -zeta.
  EXPECT_EQ((FieldElement(1) + z).inverse(), -z);
}

TEST(FieldElement, SquareRootOfTwo) {
  const FieldElement s = FieldElement::sqrt2();
  EXPECT_EQ(s * s, FieldElement(2));
  EXPECT_EQ((FieldElement(1) + s) * (FieldElement(-1) + s), FieldElement(1));
  const FieldElement x = FieldElement(3) + s * FieldElement::zeta(3);
  EXPECT_EQ(x * x.inverse(), FieldElement(1));
}

TEST(FieldElement, SmallOrdersStayRational) {
  EXPECT_TRUE(FieldElement::zeta(1).is_one());
  EXPECT_EQ(FieldElement::zeta(2), FieldElement(-1));
  EXPECT_TRUE(FieldElement::zeta(2).is_rational());
  EXPECT_THROW(FieldElement::zeta(5), InputError);
}

TEST(FieldElement, EqualityIgnoresTag) {
  EXPECT_EQ(FieldElement(2).with_tag(3), FieldElement(2));
  EXPECT_EQ((FieldElement::zeta(3) + FieldElement(1)).tag(), 3);
}

TEST(FieldElement, DivisionByZeroThrows) {
  EXPECT_THROW(FieldElement(0).inverse(), DivisionByZero);
  EXPECT_THROW(FieldElement(1) / FieldElement(0), DivisionByZero);
}

TEST(FieldElement, CanonicalOrder) {
  std::vector<FieldElement> v{FieldElement::zeta(3), FieldElement(-2), FieldElement(2), FieldElement(-1),
                              FieldElement(1)};
  std::sort(v.begin(), v.end(), CanonicalLess{});
  EXPECT_EQ(v[0], FieldElement(1));
  EXPECT_EQ(v[1], FieldElement(-1));
  EXPECT_EQ(v[2], FieldElement(2));
  EXPECT_EQ(v[3], FieldElement(-2));
  EXPECT_EQ(v[4], FieldElement::zeta(3));
}

TEST(FieldElement, CopiesAreIndependent) {
  FieldElement a = FieldElement::zeta(3);
  FieldElement b = a;
  b += FieldElement(1);
  EXPECT_EQ(a, FieldElement::zeta(3));
  EXPECT_NE(a, b);
  b -= FieldElement::zeta(3);
  EXPECT_TRUE(b.is_rational());
  EXPECT_TRUE(b.is_one());
}

TEST(LaurentPoly, ArithmeticAndEvaluation) {
  const LaurentPoly p = LaurentPoly::linear(FieldElement(2)).pow(3);  // (t-2)^3
  EXPECT_EQ(p.min_exponent(), 0);
  EXPECT_EQ(p.max_exponent(), 3);
  EXPECT_EQ(p.coeff(0), FieldElement(-8));
  EXPECT_EQ(p.coeff(1), FieldElement(12));
  EXPECT_TRUE(p.evaluate(FieldElement(2)).is_zero());
  const LaurentPoly q = LaurentPoly::monomial(-2, FieldElement(5));
  EXPECT_EQ((q * LaurentPoly::monomial(2)), LaurentPoly(FieldElement(5)));
  EXPECT_EQ(q.evaluate(FieldElement(2)), FieldElement(Rational(5, 4)));
}

TEST(LaurentPoly, SubstitutionsOfTheVariable) {
  const LaurentPoly p = LaurentPoly::monomial(1) + LaurentPoly::monomial(2, FieldElement(3));
  const LaurentPoly s = p.scale_variable(FieldElement(2));
  EXPECT_EQ(s.coeff(1), FieldElement(2));
  EXPECT_EQ(s.coeff(2), FieldElement(12));
  const LaurentPoly i = p.inflate(3);
  EXPECT_EQ(i.coeff(3), FieldElement(1));
  EXPECT_EQ(i.coeff(6), FieldElement(3));
  EXPECT_EQ(i.terms().size(), 2u);
}

TEST(LaurentPoly, RemainderIsReducedRepresentative) {
  const LaurentPoly g = LaurentPoly::linear(FieldElement(1)) * LaurentPoly::linear(FieldElement(-1));  // t^2 - 1
  const LaurentPoly r = laurent_rem(LaurentPoly::monomial(5), g);
  EXPECT_EQ(r, LaurentPoly::monomial(1));
  // t^-1 = t mod (t^2 - 1)
  EXPECT_EQ(laurent_rem(LaurentPoly::monomial(-1), g), LaurentPoly::monomial(1));
  // A factor t in the modulus is a unit.
  const LaurentPoly tg = LaurentPoly::monomial(1) * g;
  EXPECT_EQ(laurent_rem(LaurentPoly::monomial(3), tg), LaurentPoly::monomial(1));
  EXPECT_THROW(laurent_rem(LaurentPoly::monomial(1), LaurentPoly()), DivisionByZero);
}

TEST(LaurentPoly, RemainderAgreesWithEvaluation) {
  // f mod (t - a) is the constant f(a).
  const FieldElement a = FieldElement::zeta(3) * FieldElement(2);
  LaurentPoly f = LaurentPoly::monomial(-3, FieldElement(7)) + LaurentPoly::monomial(4, FieldElement::sqrt2());
  EXPECT_EQ(laurent_rem(f, LaurentPoly::linear(a)), LaurentPoly(f.evaluate(a)));
}
