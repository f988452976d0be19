#include "triplex/lts.hpp"

#include <set>
#include <sstream>

namespace triplex {

namespace {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] += c * x[i];
  }
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void check_len(const Vec& v, std::size_t d, const char* where) {
  if (v.size() != d) {
    throw DimensionMismatch(std::string(where) + ": expected length " + std::to_string(d) +
                            ", got " + std::to_string(v.size()));
  }
}

std::string names_of(const std::vector<std::string>& basis,
                     std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ",") + basis[i];
    first = false;
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// TripleSystem

TripleSystem TripleSystem::create(std::string name, std::vector<std::string> basis,
                                  const std::vector<Entry>& entries) {
  TripleSystem t;
  t.name_ = std::move(name);
  t.basis_ = std::move(basis);
  const std::size_t d = t.dim();
  t.table_.assign(d * d * d, zero_vec(d));
  std::set<std::array<std::size_t, 3>> seen;
  for (const auto& e : entries) {
    for (auto i : e.args) {
      if (i >= d) {
        throw ValidationError("triple index " + std::to_string(i) + " out of range for dim " +
                              std::to_string(d));
      }
    }
    if (e.value.dim() != d) throw ValidationError("structure constant has wrong length");
    if (!seen.insert(e.args).second) {
      throw ValidationError("duplicate entry for (" + std::to_string(e.args[0]) + "," +
                            std::to_string(e.args[1]) + "," + std::to_string(e.args[2]) + ")");
    }
    t.table_[(e.args[0] * d + e.args[1]) * d + e.args[2]] = e.value.to_dense();
  }
  return t;
}

Vec TripleSystem::product(const Vec& x, const Vec& y, const Vec& z) const {
  const std::size_t d = dim();
  check_len(x, d, "triple product");
  check_len(y, d, "triple product");
  check_len(z, d, "triple product");
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (z[k] == 0) continue;
        axpy(out, xy * z[k], constant(i, j, k));
      }
    }
  }
  return out;
}

Vec TripleSystem::basis_vector(std::size_t i) const {
  Vec v(dim());
  v.at(i) = 1;
  return v;
}

bool TripleSystem::is_abelian() const {
  for (const auto& v : table_)
    if (!is_zero(v)) return false;
  return true;
}

Vec triple_product(const TripleSystem& t, const Vec& x, const Vec& y, const Vec& z) {
  return t.product(x, y, z);
}

CheckList check_axioms(const TripleSystem& t) {
  const std::size_t d = t.dim();
  const auto& names = t.basis_names();
  std::vector<Vec> e(d);
  for (std::size_t i = 0; i < d; ++i) e[i] = t.basis_vector(i);

  CheckRecord alt{"lts.axiom.alternating", "[x,x,y] = 0", "basis pairs", true, ""};
  for (std::size_t i = 0; i < d && alt.pass; ++i) {
    for (std::size_t k = 0; k < d && alt.pass; ++k) {
      if (!is_zero(t.constant(i, i, k))) {
        alt.pass = false;
        alt.witness = "[" + names[i] + "," + names[i] + "," + names[k] + "] != 0";
      }
      for (std::size_t j = i + 1; j < d && alt.pass; ++j) {
        if (!is_zero(add(t.constant(i, j, k), t.constant(j, i, k)))) {
          alt.pass = false;
          alt.witness = "[x,y,z] + [y,x,z] != 0 at " + names_of(names, {i, j, k});
        }
      }
    }
  }

  CheckRecord cyc{"lts.axiom.cyclic", "[x,y,z] + [y,z,x] + [z,x,y] = 0", "basis triples", true, ""};
  for (std::size_t i = 0; i < d && cyc.pass; ++i)
    for (std::size_t j = 0; j < d && cyc.pass; ++j)
      for (std::size_t k = 0; k < d && cyc.pass; ++k) {
        Vec s = add(add(t.constant(i, j, k), t.constant(j, k, i)), t.constant(k, i, j));
        if (!is_zero(s)) {
          cyc.pass = false;
          cyc.witness = "cyclic sum " + to_string(s) + " at " + names_of(names, {i, j, k});
        }
      }

  CheckRecord der{"lts.axiom.derivation",
                  "[a,b,[x,y,z]] = [[a,b,x],y,z] + [x,[a,b,y],z] + [x,y,[a,b,z]]",
                  "basis 5-tuples", true, ""};
  for (std::size_t a = 0; a < d && der.pass; ++a)
    for (std::size_t bb = 0; bb < d && der.pass; ++bb)
      for (std::size_t x = 0; x < d && der.pass; ++x)
        for (std::size_t y = 0; y < d && der.pass; ++y)
          for (std::size_t z = 0; z < d && der.pass; ++z) {
            Vec lhs = t.product(e[a], e[bb], t.constant(x, y, z));
            Vec rhs = t.product(t.constant(a, bb, x), e[y], e[z]);
            rhs = add(rhs, t.product(e[x], t.constant(a, bb, y), e[z]));
            rhs = add(rhs, t.product(e[x], e[y], t.constant(a, bb, z)));
            if (lhs != rhs) {
              der.pass = false;
              der.witness = "fails at (a,b,x,y,z) = " + names_of(names, {a, bb, x, y, z});
            }
          }
  return {alt, cyc, der};
}

bool satisfies_axioms(const TripleSystem& t) { return all_pass(check_axioms(t)); }

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra LieAlgebra::create(std::string name, std::vector<std::string> basis,
                              const std::vector<Entry>& entries) {
  LieAlgebra l;
  l.name_ = std::move(name);
  l.basis_ = std::move(basis);
  const std::size_t n = l.dim();
  l.table_.assign(n * n, zero_vec(n));
  std::set<std::array<std::size_t, 2>> seen;
  for (const auto& e : entries) {
    for (auto i : e.args) {
      if (i >= n) {
        throw ValidationError("bracket index " + std::to_string(i) + " out of range for dim " +
                              std::to_string(n));
      }
    }
    if (e.value.dim() != n) throw ValidationError("structure constant has wrong length");
    if (!seen.insert(e.args).second) {
      throw ValidationError("duplicate entry for (" + std::to_string(e.args[0]) + "," +
                            std::to_string(e.args[1]) + ")");
    }
    l.table_[e.args[0] * n + e.args[1]] = e.value.to_dense();
  }
  return l;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  check_len(x, n, "bracket");
  check_len(y, n, "bracket");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] != 0) axpy(out, x[i] * y[j], constant(i, j));
    }
  }
  return out;
}

Vec LieAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v.at(i) = 1;
  return v;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = bracket(x, basis_vector(j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::killing_form() const {
  const std::size_t n = dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(basis_vector(i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

CheckList LieAlgebra::check() const {
  const std::size_t n = dim();
  CheckRecord anti{"lie.antisymmetry", "[x,x] = 0", "basis pairs", true, ""};
  for (std::size_t i = 0; i < n && anti.pass; ++i) {
    if (!is_zero(constant(i, i))) {
      anti.pass = false;
      anti.witness = "[" + basis_[i] + "," + basis_[i] + "] != 0";
    }
    for (std::size_t j = i + 1; j < n && anti.pass; ++j) {
      if (!is_zero(add(constant(i, j), constant(j, i)))) {
        anti.pass = false;
        anti.witness = "[x,y] + [y,x] != 0 at " + names_of(basis_, {i, j});
      }
    }
  }
  CheckRecord jac{"lie.jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", "basis triples", true, ""};
  for (std::size_t i = 0; i < n && jac.pass; ++i)
    for (std::size_t j = 0; j < n && jac.pass; ++j)
      for (std::size_t k = 0; k < n && jac.pass; ++k) {
        Vec s = bracket(constant(i, j), basis_vector(k));
        s = add(s, bracket(constant(j, k), basis_vector(i)));
        s = add(s, bracket(constant(k, i), basis_vector(j)));
        if (!is_zero(s)) {
          jac.pass = false;
          jac.witness = "fails at " + names_of(basis_, {i, j, k});
        }
      }
  return {anti, jac};
}

// ---------------------------------------------------------------------------
// Constructions from Lie algebras

TripleSystem lts_from_lie(const LieAlgebra& l) {
  auto checks = l.check();
  if (!all_pass(checks)) throw ValidationError("invalid Lie algebra '" + l.name() + "'");
  const std::size_t n = l.dim();
  std::vector<TripleSystem::Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec v = l.bracket(l.constant(i, j), l.basis_vector(k));
        if (!is_zero(v)) entries.push_back({{i, j, k}, SparseVector::from_dense(v)});
      }
  return TripleSystem::create(l.name() + "-lts", l.basis_names(), entries);
}

TripleSystem lts_from_involution(const LieAlgebra& l, const Matrix& s) {
  const std::size_t n = l.dim();
  if (s.rows() != n || s.cols() != n) throw DimensionMismatch("involution has wrong size");
  if (s * s != Matrix::identity(n)) throw PreconditionError("involution does not square to Id");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = s.apply(l.constant(i, j));
      Vec rhs = l.bracket(s.column(i), s.column(j));
      if (lhs != rhs) throw PreconditionError("map is not an automorphism of " + l.name());
    }

  // -1 eigenspace = kernel of s + Id.
  Matrix shifted = s + Matrix::identity(n);
  std::vector<SparseVector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(SparseVector::from_dense(shifted.column(j)));
  Subspace minus = kernel(n, images);

  const std::size_t d = minus.dim();
  std::vector<Vec> basis;
  for (const auto& r : minus.rows()) basis.push_back(r.to_dense());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("t" + std::to_string(i));

  std::vector<TripleSystem::Entry> entries;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec v = l.bracket(l.bracket(basis[i], basis[j]), basis[k]);
        auto coords = minus.coordinates(SparseVector::from_dense(v));
        if (!coords) throw ValidationError("[[T,T],T] leaves the -1 eigenspace");
        if (!is_zero(*coords)) entries.push_back({{i, j, k}, SparseVector::from_dense(*coords)});
      }
  return TripleSystem::create(l.name() + "-minus", names, entries);
}

// ---------------------------------------------------------------------------
// Operators

Operator r_op(const TripleSystem& t, const Vec& a, const Vec& b) {
  const std::size_t d = t.dim();
  check_len(a, d, "r_op");
  check_len(b, d, "r_op");
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = t.product(t.basis_vector(j), a, b);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return {m, OperatorKind::R};
}

Operator d_op(const TripleSystem& t, const Vec& a, const Vec& b) {
  const std::size_t d = t.dim();
  check_len(a, d, "d_op");
  check_len(b, d, "d_op");
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = t.product(a, b, t.basis_vector(j));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return {m, OperatorKind::D};
}

std::vector<Matrix> all_r_operators(const TripleSystem& t) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      out.push_back(r_op(t, t.basis_vector(i), t.basis_vector(j)).matrix);
  return out;
}

InnerDerivations inner_derivations(const TripleSystem& t) {
  const std::size_t d = t.dim();
  std::vector<SparseVector> flat;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      flat.push_back(d_op(t, t.basis_vector(i), t.basis_vector(j)).matrix.flatten());
  InnerDerivations out{{}, echelonize(d * d, flat)};
  for (const auto& r : out.span.rows()) out.basis.push_back(Matrix::unflatten(r, d, d));

  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
      if (!out.span.contains(mat_bracket(out.basis[i], out.basis[j]).flatten())) {
        throw ValidationError("inner derivations are not closed under the commutator");
      }
    }
  for (const auto& D : out.basis)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          Vec ex = t.basis_vector(x), ey = t.basis_vector(y), ez = t.basis_vector(z);
          Vec lhs = D.apply(t.constant(x, y, z));
          Vec rhs = add(add(t.product(D.column(x), ey, ez), t.product(ex, D.column(y), ez)),
                        t.product(ex, ey, D.column(z)));
          if (lhs != rhs) throw ValidationError("an inner derivation is not a derivation");
        }
  return out;
}

// ---------------------------------------------------------------------------
// Standard embedding

Matrix StandardEmbedding::killing_on_t() const {
  Matrix k(t_dim, t_dim);
  for (std::size_t i = 0; i < t_dim; ++i)
    for (std::size_t j = 0; j < t_dim; ++j) k(i, j) = killing(inner_dim + i, inner_dim + j);
  return k;
}

StandardEmbedding standard_embedding(const TripleSystem& t) {
  const std::size_t d = t.dim();
  InnerDerivations inner = inner_derivations(t);
  const std::size_t m = inner.basis.size();
  const std::size_t n = m + d;

  auto inner_coords = [&](const Matrix& a) {
    auto c = inner.span.coordinates(a.flatten());
    if (!c) throw ValidationError("bracket leaves InnDer(T)");
    return *c;
  };

  std::vector<LieAlgebra::Entry> entries;
  auto push = [&](std::size_t i, std::size_t j, const Vec& v) {
    if (!is_zero(v)) entries.push_back({{i, j}, SparseVector::from_dense(v)});
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vec c = inner_coords(mat_bracket(inner.basis[i], inner.basis[j]));
      Vec v(n);
      for (std::size_t k = 0; k < m; ++k) v[k] = c[k];
      push(i, j, v);
    }
    for (std::size_t k = 0; k < d; ++k) {
      Vec col = inner.basis[i].column(k);
      Vec v(n), w(n);
      for (std::size_t r = 0; r < d; ++r) {
        v[m + r] = col[r];
        w[m + r] = -col[r];
      }
      push(i, m + k, v);
      push(m + k, i, w);
    }
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vec c = inner_coords(d_op(t, t.basis_vector(a), t.basis_vector(b)).matrix);
      Vec v(n);
      for (std::size_t k = 0; k < m; ++k) v[k] = c[k];
      push(m + a, m + b, v);
    }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("D" + std::to_string(i));
  for (const auto& s : t.basis_names()) names.push_back(s);

  StandardEmbedding emb;
  emb.lie = LieAlgebra::create("L(" + t.name() + ")", names, entries);
  auto checks = emb.lie.check();
  if (!all_pass(checks)) {
    for (const auto& c : checks)
      if (!c.pass) throw ValidationError("standard embedding: " + c.id + " " + c.witness);
  }
  emb.inner_dim = m;
  emb.t_dim = d;
  emb.inner_basis = std::move(inner.basis);
  emb.sigma = Matrix::identity(n);
  for (std::size_t k = m; k < n; ++k) emb.sigma(k, k) = -1;
  emb.killing = emb.lie.killing_form();
  return emb;
}

CheckList embedding_checks(const StandardEmbedding& emb) {
  const auto& l = emb.lie;
  const std::size_t n = l.dim();
  CheckList out = l.check();

  CheckRecord sq{"embedding.sigma_involution", "sigma^2 = Id", "", emb.sigma * emb.sigma == Matrix::identity(n), ""};
  if (!sq.pass) sq.witness = "sigma^2 != Id";
  out.push_back(sq);

  CheckRecord aut{"embedding.sigma_automorphism", "sigma[x,y] = [sigma x, sigma y]", "basis pairs", true, ""};
  for (std::size_t i = 0; i < n && aut.pass; ++i)
    for (std::size_t j = 0; j < n && aut.pass; ++j) {
      if (emb.sigma.apply(l.constant(i, j)) != l.bracket(emb.sigma.column(i), emb.sigma.column(j))) {
        aut.pass = false;
        aut.witness = "fails at (" + l.basis_names()[i] + "," + l.basis_names()[j] + ")";
      }
    }
  out.push_back(aut);

  CheckRecord kil{"embedding.sigma_killing", "K(sigma x, sigma y) = K(x,y)", "basis pairs",
                  emb.sigma.transpose() * emb.killing * emb.sigma == emb.killing, ""};
  out.push_back(kil);

  CheckRecord orth{"embedding.orthogonal", "K(InnDer(T), T) = 0", "basis pairs", true, ""};
  for (std::size_t i = 0; i < emb.inner_dim && orth.pass; ++i)
    for (std::size_t j = emb.inner_dim; j < n && orth.pass; ++j) {
      if (emb.killing(i, j) != 0) {
        orth.pass = false;
        orth.witness = "K(" + l.basis_names()[i] + "," + l.basis_names()[j] + ") = " + emb.killing(i, j).get_str();
      }
    }
  out.push_back(orth);
  return out;
}

CheckList trace_identity_check(const TripleSystem& t, const StandardEmbedding& emb) {
  CheckRecord rec{"embedding.trace_identity", "2 tr(R_{a,b}) = K(a,b)", "basis pairs", true, ""};
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d && rec.pass; ++i)
    for (std::size_t j = 0; j < d && rec.pass; ++j) {
      Scalar lhs = 2 * r_op(t, t.basis_vector(i), t.basis_vector(j)).matrix.trace();
      const Scalar& rhs = emb.killing(emb.inner_dim + i, emb.inner_dim + j);
      if (lhs != rhs) {
        rec.pass = false;
        rec.witness = "2tr(R) = " + lhs.get_str() + ", K = " + rhs.get_str() + " at " +
                      names_of(t.basis_names(), {i, j});
      }
    }
  return {rec};
}

CheckList adjointness_check(const TripleSystem& t, const StandardEmbedding& emb) {
  CheckRecord rec{"embedding.adjointness", "K(R_{a,b} x, y) = K(x, R_{b,a} y)", "basis", true, ""};
  const std::size_t d = t.dim();
  Matrix k = emb.killing_on_t();
  for (std::size_t a = 0; a < d && rec.pass; ++a)
    for (std::size_t b = 0; b < d && rec.pass; ++b) {
      Matrix rab = r_op(t, t.basis_vector(a), t.basis_vector(b)).matrix;
      Matrix rba = r_op(t, t.basis_vector(b), t.basis_vector(a)).matrix;
      // K(Rx, y) = x^T R^T K y and K(x, R'y) = x^T K R' y.
      if (rab.transpose() * k != k * rba) {
        rec.pass = false;
        rec.witness = "fails at " + names_of(t.basis_names(), {a, b});
      }
    }
  return {rec};
}

// ---------------------------------------------------------------------------
// Closures

namespace {

template <typename Combine>
Subspace closure(std::span<const Matrix> gens, Combine combine) {
  if (gens.empty()) return Subspace(0);
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != n) throw DimensionMismatch("closure: generator size mismatch");
  }
  EchelonBuilder builder(n * n);
  std::vector<Matrix> basis;
  for (const auto& g : gens) {
    if (auto r = builder.insert(g.flatten())) basis.push_back(Matrix::unflatten(*r, n, n));
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (const Matrix& p : combine(basis[k], basis[j])) {
        if (auto r = builder.insert(p.flatten())) basis.push_back(Matrix::unflatten(*r, n, n));
      }
    }
  }
  return builder.finish();
}

}  // namespace

Subspace lie_closure(std::span<const Matrix> gens) {
  return closure(gens, [](const Matrix& a, const Matrix& b) {
    return std::vector<Matrix>{mat_bracket(a, b)};
  });
}

Subspace associative_envelope(std::span<const Matrix> gens) {
  return closure(gens, [](const Matrix& a, const Matrix& b) {
    return std::vector<Matrix>{a * b, b * a};
  });
}

EndoResult endo_theorem_check(const TripleSystem& t) {
  auto gens = all_r_operators(t);
  EndoResult r;
  r.target_dim = t.dim() * t.dim();
  r.closure_dim = gens.empty() ? 0 : lie_closure(gens).dim();
  r.holds = r.target_dim > 0 && r.closure_dim == r.target_dim;
  return r;
}

std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "simple";
    case Simplicity::NotSimple: return "not simple";
    case Simplicity::Inconclusive: return "inconclusive over Q";
  }
  return "?";
}

SimplicityReport simplicity_certificate(const TripleSystem& t) {
  const std::size_t d = t.dim();
  SimplicityReport rep;
  rep.nontrivial_product = !t.is_abelian();
  if (d == 0) {
    rep.verdict = Simplicity::NotSimple;
    return rep;
  }
  auto gens = all_r_operators(t);
  Subspace env = associative_envelope(gens);
  rep.envelope_dim = env.dim();
  if (!rep.nontrivial_product) {
    rep.verdict = Simplicity::NotSimple;
    return rep;
  }
  if (env.dim() == d * d) {
    rep.verdict = Simplicity::Simple;
    return rep;
  }
  // Envelope-stable subspaces generated by single basis vectors.
  std::vector<Matrix> basis;
  for (const auto& r : env.rows()) basis.push_back(Matrix::unflatten(r, d, d));
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = t.basis_vector(i);
    std::vector<SparseVector> images;
    for (const auto& m : basis) images.push_back(SparseVector::from_dense(m.apply(e)));
    Subspace moved = echelonize(d, images);
    images.push_back(SparseVector::from_dense(e));
    Subspace cyclic = echelonize(d, images);
    for (const Subspace* w : {&moved, &cyclic}) {
      if (w->dim() > 0 && w->dim() < d) {
        rep.verdict = Simplicity::NotSimple;
        rep.invariant_witness = *w;
        return rep;
      }
    }
  }
  rep.verdict = Simplicity::Inconclusive;
  return rep;
}

// ---------------------------------------------------------------------------
// tau / lambda / sigma

Operator tau_map(const Matrix& form, const Vec& x, const Vec& y) {
  const std::size_t d = form.rows();
  check_len(x, d, "tau");
  check_len(y, d, "tau");
  Vec ky = form.transpose().apply(y);  // z -> K(y,z) = y^T K z
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = x[i] * ky[j];
  return {m, OperatorKind::Tau};
}

Operator lambda_map(const Matrix& form, const Vec& x, const Vec& y) {
  return {tau_map(form, x, y).matrix - tau_map(form, y, x).matrix, OperatorKind::Lambda};
}

Operator sigma_map(const Matrix& form, const Vec& x, const Vec& y) {
  return {tau_map(form, x, y).matrix + tau_map(form, y, x).matrix, OperatorKind::Sigma};
}

bool is_form_skew(const Matrix& form, const Matrix& d) {
  return d.transpose() * form + form * d == Matrix(form.rows(), form.cols());
}

bool tau_commutator_check(const Matrix& form, const Matrix& d, const Vec& x, const Vec& y) {
  if (!is_form_skew(form, d)) throw PreconditionError("operator is not skew for the form");
  Matrix lhs = mat_bracket(d, tau_map(form, x, y).matrix);
  Matrix rhs = tau_map(form, d.apply(x), y).matrix + tau_map(form, x, d.apply(y)).matrix;
  return lhs == rhs;
}

}  // namespace triplex
