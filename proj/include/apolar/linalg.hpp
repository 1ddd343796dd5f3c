#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "apolar/scalar.hpp"

namespace apolar {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of the right null space, one vector per free column of rref(m).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// Sparse vector: strictly increasing indices, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse_from_dense(const std::vector<Scalar>& v);
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a*x

// Incrementally built echelon basis of a subspace of K^dim. The pivot of a row
// is its smallest index, so columns with small indices are eliminated first.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // Returns false when v is already in the span.
  bool insert(const SparseVec& v);
  // r must be nonzero and already reduced against this space.
  void insert_reduced(SparseVec r);

  std::vector<std::size_t> pivots() const;
  // Rows in reduced echelon form, sorted by pivot.
  std::vector<SparseVec> reduced_basis() const;
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_row_;
};

// Linear map K^n -> K^m given by the images of the standard basis vectors.
// Columns are eliminated in index order, so solve() prefers low-index columns:
// every free column gets coefficient 0.
class LinearMap {
 public:
  LinearMap(std::size_t codomain_dim, const std::vector<SparseVec>& columns);

  std::size_t domain_dim() const { return n_; }
  std::size_t rank() const { return space_.rank(); }
  const std::vector<SparseVec>& kernel() const { return kernel_; }
  std::optional<SparseVec> solve(const SparseVec& b) const;
  bool in_image(const SparseVec& b) const { return solve(b).has_value(); }

 private:
  std::size_t m_;
  std::size_t n_;
  RowSpace space_;
  std::vector<SparseVec> kernel_;
};

}  // namespace apolar
