#pragma once

// Exact rational linear algebra: scalars, sparse vectors, canonical reduced
// row-echelon subspaces and small dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triplex/errors.hpp"

namespace triplex {

// mpq_class keeps results of arithmetic canonical (lowest terms, positive
// denominator).  Values built from strings go through parse_scalar.
using Scalar = mpq_class;

// Dense coordinate vector.
using Vec = std::vector<Scalar>;

// Accepts "p" or "p/q" with optional sign; q must be positive.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}
  // Entries may be unsorted and repeated; repeated indices are summed.
  SparseVector(std::size_t dim, std::vector<Entry> entries);

  static SparseVector unit(std::size_t dim, std::size_t index,
                           const Scalar& coeff = 1);
  static SparseVector from_dense(std::span<const Scalar> values);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Scalar at(std::size_t index) const;
  std::optional<std::size_t> leading() const;
  Vec to_dense() const;

  // this += coeff * other
  SparseVector& axpy(const Scalar& coeff, const SparseVector& other);
  SparseVector& operator+=(const SparseVector& other) { return axpy(1, other); }
  SparseVector& operator-=(const SparseVector& other) { return axpy(-1, other); }
  SparseVector& operator*=(const Scalar& c);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Scalar& c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= -1; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;  // sorted by index, no zeros
};

class Subspace;

// Incremental Gaussian elimination.  Rows are kept in semi-echelon form (each
// row normalized with a distinct pivot, support at or after the pivot);
// finish() back-substitutes into the canonical reduced form.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t dim);

  // Returns the normalized residue if v was independent of the rows so far.
  std::optional<SparseVector> insert(SparseVector v);
  SparseVector reduce(SparseVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

  Subspace finish() const;

 private:
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

// Span held as its reduced row-echelon basis.  Pivots are always the
// lowest-index nonzero column, so equal spans compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t dim = 0) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  SparseVector residue(const SparseVector& v) const;
  // Coefficients of v in terms of rows(), or nullopt when v is not in the span.
  std::optional<Vec> coordinates(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonBuilder;
  std::size_t dim_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace echelonize(std::size_t dim, std::span<const SparseVector> vectors);
bool member(const SparseVector& v, const Subspace& s);

// Kernel of the linear map sending the i-th standard basis vector of F^n to
// images[i] (all images share one dimension).
Subspace kernel(std::size_t n, std::span<const SparseVector> images);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec column(std::size_t j) const;
  Vec apply(std::span<const Scalar> x) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  std::size_t rank() const;

  // Row-major flattening into F^(rows*cols).
  SparseVector flatten() const;
  static Matrix unflatten(const SparseVector& v, std::size_t rows, std::size_t cols);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// AB - BA
Matrix mat_bracket(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);
std::string to_string(std::span<const Scalar> v);

}  // namespace triplex
