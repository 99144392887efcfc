#include <gtest/gtest.h>

#include "foldweyl/linalg.hpp"

using namespace foldweyl;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = FieldElement(rows[r][c]);
  return m;
}

}  // namespace

TEST(Matrix, RankNullspaceAndRref) {
  const Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(ns[0])));
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.at(0, 0), FieldElement(1));
  EXPECT_TRUE(r.at(2, 2).is_zero());
}

TEST(Matrix, InverseOverTheExtension) {
  const FieldElement z = FieldElement::zeta(3);
  Matrix m(2, 2);
  m.at(0, 0) = z;
  m.at(0, 1) = FieldElement(1);
  m.at(1, 0) = FieldElement::sqrt2();
  m.at(1, 1) = z * z;
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST(Matrix, Solve) {
  const Matrix m = from_rows({{1, 1}, {1, -1}});
  const auto x = solve(m, {FieldElement(3), FieldElement(1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], FieldElement(2));
  EXPECT_EQ((*x)[1], FieldElement(1));
  EXPECT_FALSE(solve(from_rows({{1, 1}, {1, 1}}), {FieldElement(1), FieldElement(2)}).has_value());
}

TEST(Sparse, AxpyDropsCancellations) {
  SparseVec y{{0, FieldElement(1)}, {3, FieldElement(2)}};
  sparse_axpy(y, FieldElement(-2), {{3, FieldElement(1)}, {5, FieldElement(1)}});
  ASSERT_EQ(y.size(), 2u);
  EXPECT_EQ(y[0].first, 0);
  EXPECT_EQ(y[1].first, 5);
  EXPECT_EQ(y[1].second, FieldElement(-2));
}

TEST(EchelonBasis, InsertAndReduce) {
  EchelonBasis e;
  EXPECT_TRUE(e.insert({{0, FieldElement(2)}, {1, FieldElement(2)}}));
  EXPECT_TRUE(e.insert({{1, FieldElement(1)}, {2, FieldElement(1)}}));
  EXPECT_FALSE(e.insert({{0, FieldElement(1)}, {2, FieldElement(-1)}}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.is_pivot(0));
  EXPECT_TRUE(e.is_pivot(1));
  EXPECT_TRUE(e.contains({{0, FieldElement(3)}, {2, FieldElement(-3)}}));
  const SparseVec r = e.reduce({{2, FieldElement(5)}, {3, FieldElement(1)}});
  for (const auto& [i, c] : r) EXPECT_FALSE(e.is_pivot(i));
}
