#include "triplex/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace triplex {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimension " +
                            std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  Scalar q(n, d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

// ---------------------------------------------------------------------------
// SparseVector

SparseVector::SparseVector(std::size_t dim, std::vector<Entry> entries) : dim_(dim) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [i, c] : entries) {
    if (i >= dim_) {
      throw DimensionMismatch("index " + std::to_string(i) +
                              " out of range for dimension " + std::to_string(dim_));
    }
    if (!entries_.empty() && entries_.back().first == i) {
      entries_.back().second += c;
      if (entries_.back().second == 0) entries_.pop_back();
    } else if (c != 0) {
      entries_.emplace_back(i, std::move(c));
    }
  }
}

SparseVector SparseVector::unit(std::size_t dim, std::size_t index, const Scalar& coeff) {
  if (index >= dim) throw DimensionMismatch("unit index out of range");
  SparseVector v(dim);
  if (coeff != 0) v.entries_.emplace_back(index, coeff);
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Scalar> values) {
  SparseVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) v.entries_.emplace_back(i, values[i]);
  }
  return v;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

std::optional<std::size_t> SparseVector::leading() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().first;
}

Vec SparseVector::to_dense() const {
  Vec out(dim_);
  for (const auto& [i, c] : entries_) out[i] = c;
  return out;
}

SparseVector& SparseVector::axpy(const Scalar& coeff, const SparseVector& other) {
  require_same_dim(dim_, other.dim_, "axpy");
  if (coeff == 0 || other.entries_.empty()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, coeff * b->second);
      ++b;
    } else {
      Scalar s = a->second + coeff * b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
  if (c == 0) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.second *= c;
  }
  return *this;
}

// ---------------------------------------------------------------------------
// EchelonBuilder

EchelonBuilder::EchelonBuilder(std::size_t dim) : dim_(dim), row_of_pivot_(dim, -1) {}

SparseVector EchelonBuilder::reduce(SparseVector v) const {
  require_same_dim(dim_, v.dim(), "echelon reduce");
  std::size_t k = 0;
  while (k < v.entries().size()) {
    const auto col = v.entries()[k].first;
    const auto r = row_of_pivot_[col];
    if (r < 0) {
      ++k;
      continue;
    }
    // Rows are supported at or after their pivot, so entries before k stay put.
    Scalar c = v.entries()[k].second;
    v.axpy(-c, rows_[static_cast<std::size_t>(r)]);
  }
  return v;
}

std::optional<SparseVector> EchelonBuilder::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return std::nullopt;
  Scalar lead = v.entries().front().second;
  v *= 1 / lead;
  row_of_pivot_[v.entries().front().first] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(v);
  return v;
}

Subspace EchelonBuilder::finish() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *rows_[a].leading() < *rows_[b].leading();
  });

  Subspace out(dim_);
  std::vector<SparseVector> reduced(order.size());
  std::vector<std::ptrdiff_t> slot_of_pivot(dim_, -1);
  for (std::size_t s = order.size(); s-- > 0;) {
    SparseVector row = rows_[order[s]];
    std::vector<std::pair<Scalar, std::size_t>> subtract;
    for (const auto& [col, c] : row) {
      if (col == *row.leading()) continue;
      if (slot_of_pivot[col] >= 0) subtract.emplace_back(c, static_cast<std::size_t>(slot_of_pivot[col]));
    }
    // Later rows are already reduced: they vanish on every other pivot column.
    for (const auto& [c, t] : subtract) row.axpy(-c, reduced[t]);
    slot_of_pivot[*row.leading()] = static_cast<std::ptrdiff_t>(s);
    reduced[s] = std::move(row);
  }
  for (auto& row : reduced) {
    out.pivots_.push_back(*row.leading());
    out.rows_.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

SparseVector Subspace::residue(const SparseVector& v) const {
  require_same_dim(dim_, v.dim(), "residue");
  SparseVector out = v;
  std::size_t r = 0;
  for (const auto& [col, c] : v) {
    while (r < pivots_.size() && pivots_[r] < col) ++r;
    if (r < pivots_.size() && pivots_[r] == col) out.axpy(-c, rows_[r]);
  }
  return out;
}

std::optional<Vec> Subspace::coordinates(const SparseVector& v) const {
  require_same_dim(dim_, v.dim(), "coordinates");
  if (!residue(v).is_zero()) return std::nullopt;
  Vec coords(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) coords[r] = v.at(pivots_[r]);
  return coords;
}

bool Subspace::contains(const SparseVector& v) const { return residue(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_dim(dim_, other.dim_, "contains");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const SparseVector& r) { return contains(r); });
}

Subspace Subspace::sum(const Subspace& other) const {
  require_same_dim(dim_, other.dim_, "sum");
  EchelonBuilder b(dim_);
  for (const auto& r : rows_) b.insert(r);
  for (const auto& r : other.rows_) b.insert(r);
  return b.finish();
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_dim(dim_, other.dim_, "intersect");
  // Zassenhaus: rows (u|u) and (w|0); rows with vanishing left half give the
  // intersection in their right half.
  EchelonBuilder b(2 * dim_);
  for (const auto& r : rows_) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, c] : r) {
      e.emplace_back(i, c);
      e.emplace_back(i + dim_, c);
    }
    b.insert(SparseVector(2 * dim_, std::move(e)));
  }
  for (const auto& r : other.rows_) {
    std::vector<SparseVector::Entry> e(r.begin(), r.end());
    b.insert(SparseVector(2 * dim_, std::move(e)));
  }
  Subspace full = b.finish();
  std::vector<SparseVector> inter;
  for (std::size_t k = 0; k < full.dim(); ++k) {
    if (full.pivots_[k] < dim_) continue;
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, c] : full.rows_[k]) e.emplace_back(i - dim_, c);
    inter.emplace_back(dim_, std::move(e));
  }
  return echelonize(dim_, inter);
}

Subspace echelonize(std::size_t dim, std::span<const SparseVector> vectors) {
  EchelonBuilder b(dim);
  for (const auto& v : vectors) b.insert(v);
  return b.finish();
}

bool member(const SparseVector& v, const Subspace& s) { return s.contains(v); }

Subspace kernel(std::size_t n, std::span<const SparseVector> images) {
  if (images.size() != n) throw DimensionMismatch("kernel: expected one image per basis vector");
  const std::size_t m = images.empty() ? 0 : images.front().dim();
  EchelonBuilder b(m + n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_dim(m, images[i].dim(), "kernel");
    std::vector<SparseVector::Entry> e(images[i].begin(), images[i].end());
    e.emplace_back(m + i, 1);
    b.insert(SparseVector(m + n, std::move(e)));
  }
  Subspace full = b.finish();
  std::vector<SparseVector> ker;
  for (std::size_t k = 0; k < full.dim(); ++k) {
    if (full.pivots()[k] < m) continue;
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, c] : full.rows()[k]) e.emplace_back(i - m, c);
    ker.emplace_back(n, std::move(e));
  }
  return echelonize(n, ker);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_dim(cols, rows[i].size(), "from_rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vec Matrix::apply(std::span<const Scalar> x) const {
  require_same_dim(cols_, x.size(), "apply");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] != 0 && (*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

std::size_t Matrix::rank() const {
  EchelonBuilder b(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    b.insert(SparseVector::from_dense(
        std::span<const Scalar>(data_.data() + i * cols_, cols_)));
  }
  return b.rank();
}

SparseVector Matrix::flatten() const { return SparseVector::from_dense(data_); }

Matrix Matrix::unflatten(const SparseVector& v, std::size_t rows, std::size_t cols) {
  require_same_dim(rows * cols, v.dim(), "unflatten");
  Matrix m(rows, cols);
  for (const auto& [i, c] : v) m.data_[i] = c;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_dim(rows_, o.rows_, "matrix +");
  require_same_dim(cols_, o.cols_, "matrix +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_dim(rows_, o.rows_, "matrix -");
  require_same_dim(cols_, o.cols_, "matrix -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.cols_, b.rows_, "matrix product");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) p(i, j) += x * b(k, j);
      }
    }
  }
  return p;
}

Matrix mat_bracket(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionMismatch("mat_bracket: operands must be square of equal size");
  }
  return a * b - b * a;
}

std::string to_string(std::span<const Scalar> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
  }
  os << ']';
  return os.str();
}

}  // namespace triplex
