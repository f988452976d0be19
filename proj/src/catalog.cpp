#include "triplex/catalog.hpp"

#include <array>

namespace triplex::catalog {

namespace {

using Mat3 = std::array<std::array<Scalar, 3>, 3>;

Mat3 elementary(int i, int j) {
  Mat3 m{};
  m[i][j] = 1;
  return m;
}

Mat3 diff(const Mat3& a, const Mat3& b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j] - b[i][j];
  return m;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}

const std::array<std::pair<int, int>, 6> kOffDiagonal{{{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}}};

std::array<Mat3, 8> sl3_basis() {
  std::array<Mat3, 8> b;
  b[0] = diff(elementary(0, 0), elementary(1, 1));
  b[1] = diff(elementary(1, 1), elementary(2, 2));
  for (std::size_t k = 0; k < 6; ++k) b[2 + k] = elementary(kOffDiagonal[k].first, kOffDiagonal[k].second);
  return b;
}

// Coordinates of a traceless matrix in sl3_basis().
Vec sl3_coords(const Mat3& x) {
  Vec v(8);
  v[0] = x[0][0];
  v[1] = -x[2][2];
  for (std::size_t k = 0; k < 6; ++k) v[2 + k] = x[kOffDiagonal[k].first][kOffDiagonal[k].second];
  return v;
}

SparseVector vec(std::size_t dim, std::initializer_list<std::pair<std::size_t, int>> entries) {
  std::vector<SparseVector::Entry> e;
  for (auto [i, c] : entries) e.emplace_back(i, Scalar(c));
  return SparseVector(dim, std::move(e));
}

}  // namespace

TripleSystem s2() {
  return TripleSystem::create("S2", {"e", "f"},
                              {{{0, 1, 0}, vec(2, {{0, 2}})},
                               {{1, 0, 0}, vec(2, {{0, -2}})},
                               {{0, 1, 1}, vec(2, {{1, -2}})},
                               {{1, 0, 1}, vec(2, {{1, 2}})}});
}

TripleSystem abelian(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("a" + std::to_string(i));
  return TripleSystem::create("abelian" + std::to_string(d), names, {});
}

TripleSystem direct_sum(const TripleSystem& a, const TripleSystem& b) {
  const std::size_t da = a.dim(), d = a.dim() + b.dim();
  std::vector<std::string> names;
  for (const auto& n : a.basis_names()) names.push_back(n + "1");
  for (const auto& n : b.basis_names()) names.push_back(n + "2");
  std::vector<TripleSystem::Entry> entries;
  auto add_block = [&](const TripleSystem& t, std::size_t off) {
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = 0; j < t.dim(); ++j)
        for (std::size_t k = 0; k < t.dim(); ++k) {
          std::vector<SparseVector::Entry> e;
          const Vec& v = t.constant(i, j, k);
          for (std::size_t r = 0; r < v.size(); ++r)
            if (v[r] != 0) e.emplace_back(off + r, v[r]);
          if (!e.empty()) entries.push_back({{off + i, off + j, off + k}, SparseVector(d, std::move(e))});
        }
  };
  add_block(a, 0);
  add_block(b, da);
  return TripleSystem::create(a.name() + "+" + b.name(), names, entries);
}

LieAlgebra sl2() {
  return LieAlgebra::create("sl2", {"h", "e", "f"},
                            {{{0, 1}, vec(3, {{1, 2}})},
                             {{1, 0}, vec(3, {{1, -2}})},
                             {{0, 2}, vec(3, {{2, -2}})},
                             {{2, 0}, vec(3, {{2, 2}})},
                             {{1, 2}, vec(3, {{0, 1}})},
                             {{2, 1}, vec(3, {{0, -1}})}});
}

LieAlgebra sl3() {
  auto basis = sl3_basis();
  std::vector<LieAlgebra::Entry> entries;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Vec c = sl3_coords(diff(mul(basis[i], basis[j]), mul(basis[j], basis[i])));
      auto v = SparseVector::from_dense(c);
      if (!v.is_zero()) entries.push_back({{i, j}, v});
    }
  return LieAlgebra::create("sl3", {"h1", "h2", "e12", "e13", "e23", "e21", "e31", "e32"}, entries);
}

Matrix sl2_diagonal_involution() {
  Matrix s = Matrix::identity(3);
  s(1, 1) = -1;
  s(2, 2) = -1;
  return s;
}

Matrix sl3_transpose_involution() {
  auto basis = sl3_basis();
  Matrix s(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    Mat3 t{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t[r][c] = -basis[j][c][r];
    Vec col = sl3_coords(t);
    for (std::size_t i = 0; i < 8; ++i) s(i, j) = col[i];
  }
  return s;
}

TripleSystem sl2_lts() { return lts_from_lie(sl2()); }

TripleSystem sl3_symmetric_lts() { return lts_from_involution(sl3(), sl3_transpose_involution()); }

}  // namespace triplex::catalog
