#include <gtest/gtest.h>

#include "foldweyl/looptrunc.hpp"
#include "oracles.hpp"

using namespace foldweyl;

namespace {

std::shared_ptr<const ChevalleyAlgebra> algebra(char type, int rank) {
  return std::make_shared<const ChevalleyAlgebra>(CartanDatum::make(type, rank));
}

std::shared_ptr<const FoldedAlgebra> folded(char type, int rank, int m) {
  return std::make_shared<const FoldedAlgebra>(type, rank, m);
}

// Columns: images of the source basis, read in target coordinates.
Matrix change_of_basis(const TruncatedAlgebra& source, const TruncatedAlgebra& target) {
  std::vector<Vec> cols;
  for (int k = 0; k < source.dimension(); ++k) {
    Vec col(static_cast<std::size_t>(target.dimension()));
    for (const auto& [i, c] : target.project(source.element(k))) col[i] = c;
    cols.push_back(std::move(col));
  }
  return Matrix::from_columns(cols, static_cast<std::size_t>(target.dimension()));
}

}  // namespace

TEST(LoopAlgebra, BracketMultipliesPolynomials) {
  const auto g = algebra('A', 1);
  const LoopElement x = LoopElement::basis(g->x_plus(0), 2);
  const LoopElement y = LoopElement::basis(g->x_minus(0), -1);
  EXPECT_EQ(loop_bracket(*g, x, y), LoopElement::basis(g->h(0), 1));
}

TEST(LoopAlgebra, TauTwistScalesByPowers) {
  const LoopElement x = LoopElement::basis(0, 3, FieldElement(5));
  EXPECT_EQ(tau_twist(x, FieldElement(2)), LoopElement::basis(0, 3, FieldElement(40)));
  EXPECT_THROW(tau_twist(x, FieldElement(0)), InputError);
}

TEST(LoopAlgebra, TwistedElements) {
  const auto f = folded('A', 2, 2);
  // g_1 lives in odd exponents, g_0 in even ones.
  EXPECT_TRUE(is_twisted_element(*f, LoopElement::from_vector(f->x_plus(0, 1), 1)));
  EXPECT_TRUE(is_twisted_element(*f, LoopElement::from_vector(f->x_plus(0, 0), 2)));
  EXPECT_FALSE(is_twisted_element(*f, LoopElement::from_vector(f->x_plus(0, 1), 2)));
}

TEST(Truncation, UntwistedDimensions) {
  for (const auto& [type, rank] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'D', 4}}) {
    const auto g = algebra(type, rank);
    for (int N = 1; N <= 3; ++N) {
      const auto t = TruncatedAlgebra::untwisted(g, {FieldElement(1), FieldElement(-2)}, N);
      EXPECT_EQ(t.dimension(), 2 * N * oracles::lie_dimension(type, rank));
      EXPECT_EQ(t.residues(), 2 * N);
    }
  }
}

TEST(Truncation, TwistedDimensions) {
  const auto a2 = folded('A', 2, 2);
  for (int N = 1; N <= 3; ++N) EXPECT_EQ(TruncatedAlgebra::twisted(a2, {FieldElement(1)}, N).dimension(), 8 * N);
  const auto d4 = folded('D', 4, 3);
  EXPECT_EQ(TruncatedAlgebra::twisted(d4, {FieldElement(1), FieldElement(2)}, 1).dimension(), 2 * 28);
  const auto a3 = folded('A', 3, 2);
  const auto t = TruncatedAlgebra::twisted(a3, {FieldElement(2)}, 2);
  EXPECT_EQ(t.dimension(), 30);
  // Q(s) = (s - 4)^2 with s = t^2.
  EXPECT_EQ(t.ideal_generator(), LaurentPoly::linear(FieldElement(4)).pow(2));
}

TEST(Truncation, PointsWithEqualPowersAreRejected) {
  const auto a2 = folded('A', 2, 2);
  EXPECT_THROW(TruncatedAlgebra::twisted(a2, {FieldElement(1), FieldElement(-1)}, 1, Coordinates::Local), InputError);
  EXPECT_THROW(crt_decompose(TruncatedAlgebra::twisted(a2, {FieldElement(1), FieldElement(-1)}, 1)), InputError);
  EXPECT_THROW(TruncatedAlgebra::untwisted(algebra('A', 1), {FieldElement(0)}, 1), InputError);
}

TEST(Truncation, LocalAndMonomialCoordinatesAgree) {
  const auto g = algebra('A', 2);
  const std::vector<FieldElement> pts{FieldElement(1), FieldElement(3)};
  const auto mono = TruncatedAlgebra::untwisted(g, pts, 2, Coordinates::Monomial);
  const auto local = TruncatedAlgebra::untwisted(g, pts, 2, Coordinates::Local);
  const Matrix phi = change_of_basis(mono, local);
  EXPECT_EQ(rank(phi), static_cast<std::size_t>(mono.dimension()));
  EXPECT_EQ(homomorphism_violations(mono, local, phi), 0);

  const auto f = folded('A', 3, 2);
  const auto tm = TruncatedAlgebra::twisted(f, {FieldElement(1), FieldElement(2)}, 1, Coordinates::Monomial);
  const auto tl = TruncatedAlgebra::twisted(f, {FieldElement(1), FieldElement(2)}, 1, Coordinates::Local);
  const Matrix psi = change_of_basis(tm, tl);
  EXPECT_EQ(rank(psi), static_cast<std::size_t>(tm.dimension()));
  EXPECT_EQ(homomorphism_violations(tm, tl, psi), 0);
}

TEST(Truncation, ProjectLiftRoundTrip) {
  const auto f = folded('A', 2, 2);
  const auto t = TruncatedAlgebra::twisted(f, {FieldElement(2)}, 2);
  for (int k = 0; k < t.dimension(); ++k) {
    const SparseVec e{{k, FieldElement(1)}};
    EXPECT_EQ(t.project(t.lift(e)), e);
  }
  EXPECT_THROW(t.project(LoopElement::from_vector(f->x_plus(0, 1), 0)), ConsistencyError);
}

TEST(Crt, SplitsIntoLocalBlocks) {
  const auto g = algebra('A', 1);
  const auto t = TruncatedAlgebra::untwisted(g, {FieldElement(1), FieldElement(2)}, 2);
  const CrtDecomposition c = crt_decompose(t);
  ASSERT_EQ(c.blocks.size(), 2u);
  EXPECT_EQ(c.blocks[0].dimension(), 6);
  EXPECT_EQ(c.blocks[1].dimension(), 6);
  EXPECT_EQ(c.violations, 0);
  EXPECT_TRUE(c.bijective);
  EXPECT_TRUE(c.inverse_roundtrip);

  const auto a2 = folded('A', 2, 2);
  const auto tt = TruncatedAlgebra::twisted(a2, {FieldElement(1), FieldElement(3)}, 1);
  const CrtDecomposition ct = crt_decompose(tt);
  EXPECT_EQ(ct.blocks.size(), 2u);
  EXPECT_EQ(ct.violations, 0);
  EXPECT_TRUE(ct.bijective);
  EXPECT_TRUE(ct.inverse_roundtrip);
}

TEST(Untwist, IsomorphismOntoTheUntwistedTruncation) {
  const auto a2 = folded('A', 2, 2);
  for (int N = 1; N <= 3; ++N) {
    const UntwistResult u = untwist_iso(a2, FieldElement(1), N);
    EXPECT_EQ(u.twisted.dimension(), 8 * N);
    EXPECT_EQ(u.untwisted.dimension(), 8 * N);
    EXPECT_TRUE(u.isomorphism());
  }
  const UntwistResult u3 = untwist_iso(folded('A', 3, 2), FieldElement(2), 2);
  EXPECT_EQ(u3.twisted.dimension(), 30);
  EXPECT_TRUE(u3.isomorphism());
  const UntwistResult ud = untwist_iso(folded('D', 4, 3), FieldElement(1), 1);
  EXPECT_EQ(ud.twisted.dimension(), 28);
  EXPECT_TRUE(ud.isomorphism());
}

TEST(Untwist, ZeroParameterIsRejected) {
  EXPECT_THROW(untwist_iso(folded('A', 2, 2), FieldElement(0), 1), InputError);
}
