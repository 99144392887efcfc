#pragma once

// Exact dense and sparse linear algebra over FieldElement.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "foldweyl/exact.hpp"

namespace foldweyl {

using Vec = std::vector<FieldElement>;

bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const FieldElement& s);
void axpy(Vec& y, const FieldElement& a, const Vec& x);  // y += a x

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  // Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vec apply(const Vec& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

// Reduced row echelon form (Gauss-Jordan); pivot columns returned in order.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Sparse vector: entries sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, FieldElement>>;

void sparse_axpy(SparseVec& y, const FieldElement& a, const SparseVec& x);  // y += a x
SparseVec sparse_add(const SparseVec& x, const SparseVec& y);
void sparse_scale(SparseVec& v, const FieldElement& s);

// Incrementally built semi-echelon basis of a subspace of F^n.  Every stored
// row has coefficient 1 at its pivot, which is its smallest index.
class EchelonBasis {
 public:
  // Returns true if v was independent of the current rows.
  bool insert(SparseVec v);
  // Normal form of v modulo the span; supported off the pivot set.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int index) const { return rows_.count(index) != 0; }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

}  // namespace foldweyl
