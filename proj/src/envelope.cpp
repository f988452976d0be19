#include "triplex/envelope.hpp"

#include <deque>
#include <map>

#include "triplex/catalog.hpp"

namespace triplex {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t symmetric_count(std::size_t d, std::size_t n) {
  if (d == 0) return n == 0 ? 1 : 0;
  return binomial(d + n - 1, n);
}

namespace {

void exponents_of_degree(std::size_t d, std::size_t n, Exponent& cur, std::size_t pos,
                         std::vector<Exponent>& out) {
  if (pos + 1 == d) {
    cur[pos] = n;
    out.push_back(cur);
    return;
  }
  for (std::size_t k = n + 1; k-- > 0;) {
    cur[pos] = k;
    exponents_of_degree(d, n - k, cur, pos + 1, out);
  }
}

void require_budget(std::size_t need, std::size_t cap, const char* what) {
  if (need > cap) {
    throw DegreeBudgetExceeded(std::string(what) + " needs degree " + std::to_string(need) +
                               " but the cap is " + std::to_string(cap));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

EnvelopingAlgebra EnvelopingAlgebra::build(const TripleSystem& t, std::size_t cap,
                                           std::size_t max_monomials) {
  if (cap < 1) throw PreconditionError("envelope cap must be at least 1");
  for (const auto& c : check_axioms(t)) {
    if (!c.pass) throw ValidationError("not a Lie triple system: " + c.id + ": " + c.witness);
  }
  const std::size_t d = t.dim();
  if (d == 0) throw PreconditionError("envelope of the zero system");

  EnvelopingAlgebra u;
  u.system_ = t;
  u.free_ = FreeAlgebra(t.basis_names(), cap, max_monomials);
  const MonomialTable& tab = u.free_.table();
  const std::size_t total = tab.size();

  // Normal-form monomials and their representative trees.
  std::vector<std::ptrdiff_t> nf_of_index(total, -1);
  for (std::size_t n = 0; n <= cap; ++n) {
    std::vector<Exponent> exps;
    Exponent cur(d);
    exponents_of_degree(d, n, cur, 0, exps);
    for (auto& k : exps) {
      std::optional<std::size_t> acc;
      for (std::size_t g = d; g-- > 0;) {
        if (k[g] == 0) continue;
        std::size_t p = u.free_.power_index(g, k[g]);
        acc = acc ? *tab.product(p, *acc) : p;
      }
      std::size_t rep = acc.value_or(tab.unit());
      nf_of_index[rep] = static_cast<std::ptrdiff_t>(u.exponents_.size());
      u.reps_.push_back(rep);
      u.nf_degree_.push_back(n);
      u.exponents_.push_back(std::move(k));
    }
  }

  // Echelon columns: descending degree, and within a degree the normal-form
  // representatives last, so pivots fall on leading non-normal terms.
  std::vector<std::size_t> col_of(total), free_of_col(total);
  {
    std::size_t col = 0;
    for (std::size_t n = cap + 1; n-- > 0;) {
      auto [b, e] = tab.degree_range(n);
      for (std::size_t i = b; i < e; ++i) {
        if (nf_of_index[i] < 0) {
          col_of[i] = col;
          free_of_col[col++] = i;
        }
      }
      for (std::size_t j = 0; j < u.reps_.size(); ++j) {
        if (u.nf_degree_[j] == n) {
          col_of[u.reps_[j]] = col;
          free_of_col[col++] = u.reps_[j];
        }
      }
    }
  }
  auto to_cols = [&](const SparseVector& v) {
    std::vector<SparseVector::Entry> e;
    e.reserve(v.nnz());
    for (const auto& [i, c] : v) e.emplace_back(col_of[i], c);
    return SparseVector(total, std::move(e));
  };
  auto from_cols = [&](const SparseVector& v) {
    std::vector<SparseVector::Entry> e;
    e.reserve(v.nnz());
    for (const auto& [i, c] : v) e.emplace_back(free_of_col[i], c);
    return SparseVector(total, std::move(e));
  };

  EchelonBuilder builder(total);
  std::deque<SparseVector> pending;
  auto insert = [&](std::vector<SparseVector::Entry> entries) {
    SparseVector v(total, std::move(entries));
    if (v.is_zero()) return;
    if (auto r = builder.insert(to_cols(v))) pending.push_back(from_cols(*r));
  };
  auto prod = [&](std::size_t l, std::size_t r) { return *tab.product(l, r); };

  // Commuting generators.
  if (cap >= 2) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        insert({{prod(tab.leaf(i), tab.leaf(j)), 1}, {prod(tab.leaf(j), tab.leaf(i)), -1}});
  }
  // Triple product: a(bc) - b(ac) = iota([a,b,c]).
  if (cap >= 3) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          std::vector<SparseVector::Entry> e{
              {prod(tab.leaf(i), prod(tab.leaf(j), tab.leaf(k))), 1},
              {prod(tab.leaf(j), prod(tab.leaf(i), tab.leaf(k))), -1}};
          const Vec& v = t.constant(i, j, k);
          for (std::size_t r = 0; r < d; ++r)
            if (v[r] != 0) e.emplace_back(tab.leaf(r), -v[r]);
          insert(std::move(e));
        }
  }
  // Generalized left alternative nucleus: (a,x,y) + (x,a,y) = 0 on monomials.
  for (std::size_t s = 3; s <= cap; ++s) {
    for (std::size_t dx = 1; dx + 1 < s; ++dx) {
      const std::size_t dy = s - 1 - dx;
      auto [xb, xe] = tab.degree_range(dx);
      auto [yb, ye] = tab.degree_range(dy);
      for (std::size_t a = 0; a < d; ++a) {
        const std::size_t la = tab.leaf(a);
        for (std::size_t x = xb; x < xe; ++x)
          for (std::size_t y = yb; y < ye; ++y) {
            insert({{prod(prod(la, x), y), 1},
                    {prod(la, prod(x, y)), -1},
                    {prod(prod(x, la), y), 1},
                    {prod(x, prod(la, y)), -1}});
          }
      }
    }
  }

  // Two-sided ideal closure within the truncation.  Every processed row has
  // its degree at its pivot, so products with all monomials of complementary
  // degree reach every product of an ideal element.
  while (!pending.empty()) {
    SparseVector w = std::move(pending.front());
    pending.pop_front();
    const std::size_t k = tab.degree(w.entries().back().first);
    for (std::size_t dm = 1; dm + k <= cap; ++dm) {
      auto [mb, me] = tab.degree_range(dm);
      for (std::size_t m = mb; m < me; ++m) {
        std::vector<SparseVector::Entry> left, right;
        left.reserve(w.nnz());
        right.reserve(w.nnz());
        for (const auto& [i, c] : w) {
          left.emplace_back(prod(m, i), c);
          right.emplace_back(prod(i, m), c);
        }
        insert(std::move(left));
        insert(std::move(right));
      }
    }
  }

  Subspace rel = builder.finish();
  std::vector<bool> is_pivot(total, false);
  std::vector<std::size_t> pivots_at(cap + 1, 0);
  for (auto p : rel.pivots()) {
    is_pivot[p] = true;
    ++pivots_at[tab.degree(free_of_col[p])];
  }
  for (std::size_t n = 0; n <= cap; ++n) {
    auto [b, e] = tab.degree_range(n);
    const std::size_t quotient = (e - b) - pivots_at[n];
    const std::size_t expected = symmetric_count(d, n);
    if (quotient != expected) {
      throw PBWCertificateFailure("degree " + std::to_string(n) + ": quotient dimension " +
                                      std::to_string(quotient) + ", expected " +
                                      std::to_string(expected),
                                  n);
    }
  }
  for (std::size_t j = 0; j < u.reps_.size(); ++j) {
    if (is_pivot[col_of[u.reps_[j]]]) {
      throw PBWCertificateFailure("normal-form monomial " + u.free_.format_monomial(u.reps_[j]) +
                                      " is dependent modulo the relations",
                                  u.nf_degree_[j]);
    }
  }

  // Normal form of every free monomial.
  const std::size_t nf_dim = u.reps_.size();
  u.nf_of_free_.assign(total, SparseVector(nf_dim));
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    const SparseVector& row = rel.rows()[r];
    std::vector<SparseVector::Entry> e;
    for (const auto& [col, c] : row) {
      if (col == rel.pivots()[r]) continue;
      e.emplace_back(static_cast<std::size_t>(nf_of_index[free_of_col[col]]), -c);
    }
    u.nf_of_free_[free_of_col[rel.pivots()[r]]] = SparseVector(nf_dim, std::move(e));
    u.relation_basis_.emplace_back(from_cols(row));
  }
  for (std::size_t j = 0; j < nf_dim; ++j) u.nf_of_free_[u.reps_[j]] = SparseVector::unit(nf_dim, j);

  // Any bracketing of a generator power reduces to the same element.
  for (std::size_t n = 2; n <= std::min<std::size_t>(cap, 4); ++n) {
    auto [b, e] = tab.degree_range(n);
    for (std::size_t i = b; i < e; ++i) {
      std::size_t probe = i;
      while (!tab.is_leaf(probe)) probe = tab.left(probe);
      const std::size_t g = tab.generator(probe);
      std::vector<std::size_t> stack{i};
      bool pure = true;
      while (!stack.empty() && pure) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (tab.is_leaf(x)) {
          pure = tab.generator(x) == g;
        } else {
          stack.push_back(tab.left(x));
          stack.push_back(tab.right(x));
        }
      }
      if (pure && u.nf_of_free_[i] != u.power(g, n).coords()) {
        throw PBWCertificateFailure("bracketing of " + u.free_.format_monomial(i) +
                                        " is not equal to the power",
                                    n);
      }
    }
  }
  return u;
}

// ---------------------------------------------------------------------------
// Basic structure

std::size_t EnvelopingAlgebra::nf_index(const Exponent& k) const {
  // Exponents of one degree are stored contiguously; a linear scan is fine at
  // the sizes a truncation allows.
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] == k) return i;
  std::size_t deg = 0;
  for (auto x : k) deg += x;
  throw DegreeBudgetExceeded("no normal-form monomial of degree " + std::to_string(deg));
}

std::size_t EnvelopingAlgebra::filtration_dim(long k) const {
  if (k < 0) return 0;
  std::size_t n = 0;
  while (n < dim() && static_cast<long>(nf_degree_[n]) <= k) ++n;
  return n;
}

std::vector<std::size_t> EnvelopingAlgebra::degree_dims() const {
  std::vector<std::size_t> dims(cap() + 1, 0);
  for (auto n : nf_degree_) ++dims[n];
  return dims;
}

Element EnvelopingAlgebra::generator(std::size_t g) const {
  Exponent k(generators(), 0);
  k.at(g) = 1;
  return monomial(nf_index(k));
}

Element EnvelopingAlgebra::embed(const Vec& t) const {
  if (t.size() != generators()) throw DimensionMismatch("embed: wrong length");
  Element x = zero();
  for (std::size_t g = 0; g < t.size(); ++g)
    if (t[g] != 0) x += t[g] * generator(g);
  return x;
}

Element EnvelopingAlgebra::power(std::size_t g, std::size_t n) const {
  require_budget(n, cap(), "power");
  Exponent k(generators(), 0);
  k.at(g) = n;
  return monomial(nf_index(k));
}

std::size_t EnvelopingAlgebra::degree(const Element& x) const {
  if (x.is_zero()) return 0;
  return nf_degree_[x.coords().entries().back().first];
}

Element EnvelopingAlgebra::reduce(const FreeElement& x) const {
  if (x.coords().dim() != free_.size()) throw DimensionMismatch("reduce: foreign free element");
  std::vector<SparseVector::Entry> e;
  for (const auto& [i, c] : x.coords())
    for (const auto& [j, v] : nf_of_free_[i]) e.emplace_back(j, c * v);
  return Element(SparseVector(dim(), std::move(e)));
}

FreeElement EnvelopingAlgebra::lift(const Element& x) const {
  std::vector<SparseVector::Entry> e;
  for (const auto& [j, c] : x.coords()) e.emplace_back(reps_[j], c);
  return FreeElement(SparseVector(free_.size(), std::move(e)));
}

Element EnvelopingAlgebra::mul(const Element& x, const Element& y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  require_budget(degree(x) + degree(y), cap(), "product");
  const MonomialTable& tab = free_.table();
  std::vector<SparseVector::Entry> e;
  for (const auto& [i, a] : x.coords())
    for (const auto& [j, b] : y.coords()) {
      Scalar ab = a * b;
      for (const auto& [k, v] : nf_of_free_[*tab.product(reps_[i], reps_[j])])
        e.emplace_back(k, ab * v);
    }
  return Element(SparseVector(dim(), std::move(e)));
}

Element EnvelopingAlgebra::associator(const Element& x, const Element& y, const Element& z) const {
  require_budget(degree(x) + degree(y) + degree(z), cap(), "associator");
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

Subspace EnvelopingAlgebra::filtration(long k) const {
  std::vector<SparseVector> units;
  for (std::size_t i = 0; i < filtration_dim(k); ++i) units.push_back(SparseVector::unit(dim(), i));
  return echelonize(dim(), units);
}

Matrix EnvelopingAlgebra::left_mult_operator(const Element& x) const {
  require_budget(degree(x), cap(), "left multiplication");
  const std::size_t cols = filtration_dim(static_cast<long>(cap() - degree(x)));
  Matrix m(dim(), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const Element col = mul(x, monomial(j));
    for (const auto& [i, c] : col.coords()) m(i, j) = c;
  }
  return m;
}

std::string EnvelopingAlgebra::format_monomial(std::size_t i) const {
  return free_.format_monomial(reps_[i]);
}

std::string EnvelopingAlgebra::format(const Element& x) const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [i, c] : x.coords()) terms.emplace_back(c, format_monomial(i));
  return format_terms(terms);
}

// ---------------------------------------------------------------------------
// Operators and identities

Element d_map(const EnvelopingAlgebra& u, std::size_t a, std::size_t b, const Element& x) {
  require_budget(u.degree(x) + 2, u.cap(), "D_{a,b}");
  const Element ea = u.generator(a), eb = u.generator(b);
  return u.mul(ea, u.mul(eb, x)) - u.mul(eb, u.mul(ea, x));
}

Element r_map(const EnvelopingAlgebra& u, std::size_t a, std::size_t b, const Element& x) {
  return Scalar(-2) * u.associator(x, u.generator(a), u.generator(b));
}

CheckList pbw_checks(const EnvelopingAlgebra& u) {
  const std::size_t d = u.generators();
  const std::size_t cap = u.cap();
  const auto& t = u.system();
  CheckList out;

  CheckRecord cert{"pbw.certificate", "dim U_n/U_{n-1} = C(d+n-1,n)", "N=" + std::to_string(cap), true, ""};
  auto dims = u.degree_dims();
  for (std::size_t n = 0; n <= cap; ++n) {
    cert.witness += (n ? "," : "") + std::to_string(dims[n]);
    if (dims[n] != symmetric_count(d, n)) cert.pass = false;
  }
  out.push_back(cert);

  CheckRecord comm{"pbw.commute", "ab - ba = 0", "generator pairs", true, ""};
  if (cap >= 2) {
    for (std::size_t i = 0; i < d && comm.pass; ++i)
      for (std::size_t j = 0; j < d && comm.pass; ++j) {
        if (u.mul(u.generator(i), u.generator(j)) != u.mul(u.generator(j), u.generator(i))) {
          comm.pass = false;
          comm.witness = t.basis_names()[i] + "," + t.basis_names()[j];
        }
      }
  }
  out.push_back(comm);

  CheckRecord nuc{"pbw.nucleus", "(a,x,y) + (x,a,y) = 0", "generators a, monomials x,y", true, ""};
  for (std::size_t a = 0; a < d && nuc.pass; ++a)
    for (std::size_t x = 0; x < u.dim() && nuc.pass; ++x)
      for (std::size_t y = 0; y < u.dim() && nuc.pass; ++y) {
        if (1 + u.nf_degree(x) + u.nf_degree(y) > cap) continue;
        Element ga = u.generator(a), mx = u.monomial(x), my = u.monomial(y);
        if (!(u.associator(ga, mx, my) + u.associator(mx, ga, my)).is_zero()) {
          nuc.pass = false;
          nuc.witness = "a=" + t.basis_names()[a] + " x=" + u.format_monomial(x) +
                        " y=" + u.format_monomial(y);
        }
      }
  out.push_back(nuc);

  CheckRecord coh{"pbw.triple_coherence", "[a,b,c] = -2(a,b,c) = a(bc) - b(ac)", "basis triples", true, ""};
  if (cap >= 3) {
    for (std::size_t a = 0; a < d && coh.pass; ++a)
      for (std::size_t b = 0; b < d && coh.pass; ++b)
        for (std::size_t c = 0; c < d && coh.pass; ++c) {
          Element ga = u.generator(a), gb = u.generator(b), gc = u.generator(c);
          Element lhs = u.embed(t.constant(a, b, c));
          Element assoc = Scalar(-2) * u.associator(ga, gb, gc);
          Element nucleus = u.mul(ga, u.mul(gb, gc)) - u.mul(gb, u.mul(ga, gc));
          if (lhs != assoc || lhs != nucleus) {
            coh.pass = false;
            coh.witness = "(" + t.basis_names()[a] + "," + t.basis_names()[b] + "," +
                          t.basis_names()[c] + ")";
          }
        }
  }
  out.push_back(coh);

  CheckRecord pw{"pbw.power_nucleus", "(c^i,c^j,x) = 0", "generators c, i,j >= 1, monomials x", true, ""};
  for (std::size_t c = 0; c < d && pw.pass; ++c)
    for (std::size_t i = 1; i <= cap && pw.pass; ++i)
      for (std::size_t j = 1; i + j <= cap && pw.pass; ++j)
        for (std::size_t x = 0; x < u.dim() && pw.pass; ++x) {
          if (i + j + u.nf_degree(x) > cap) continue;
          if (!u.associator(u.power(c, i), u.power(c, j), u.monomial(x)).is_zero()) {
            pw.pass = false;
            pw.witness = t.basis_names()[c] + "^" + std::to_string(i) + "," +
                         t.basis_names()[c] + "^" + std::to_string(j) + "," + u.format_monomial(x);
          }
        }
  out.push_back(pw);

  CheckRecord rel{"pbw.relators_vanish", "reduce(r) = 0", "relation basis", true, ""};
  for (const auto& r : u.relation_basis()) {
    if (!u.reduce(r).is_zero()) {
      rel.pass = false;
      rel.witness = u.free().format(r);
      break;
    }
  }
  out.push_back(rel);
  return out;
}

bool check_jordan(const EnvelopingAlgebra& u, std::size_t a, const Element& x) {
  const std::size_t dx = u.degree(x);
  require_budget(dx + 1, u.cap(), "Jordan identity");
  const Element ga = u.generator(a);
  const Element sym = u.mul(ga, x) + u.mul(x, ga);
  const std::size_t cols = u.filtration_dim(static_cast<long>(u.cap() - dx - 1));
  for (std::size_t j = 0; j < cols; ++j) {
    const Element y = u.monomial(j);
    if (u.mul(sym, y) != u.mul(ga, u.mul(x, y)) + u.mul(x, u.mul(ga, y))) return false;
  }
  return true;
}

bool check_d_derivation(const EnvelopingAlgebra& u, std::size_t a, std::size_t b,
                        const Element& x, const Element& y) {
  require_budget(u.degree(x) + u.degree(y) + 2, u.cap(), "derivation check");
  const Element lhs = d_map(u, a, b, u.mul(x, y));
  const Element rhs = u.mul(d_map(u, a, b, x), y) + u.mul(x, d_map(u, a, b, y));
  if (lhs != rhs) return false;
  if (u.cap() >= 3) {
    const auto& t = u.system();
    for (std::size_t c = 0; c < t.dim(); ++c) {
      if (d_map(u, a, b, u.generator(c)) != u.embed(t.constant(a, b, c))) return false;
    }
  }
  return true;
}

Element lemma_residue(const EnvelopingAlgebra& u, std::size_t c, std::size_t a, std::size_t b,
                      std::size_t n) {
  require_budget(n + 2, u.cap(), "Lemma residue");
  const Element ga = u.generator(a), gb = u.generator(b), gc = u.generator(c);
  Element lhs = u.associator(u.power(c, n), ga, gb);
  if (n == 0) return lhs;
  return lhs - Scalar(static_cast<long>(n)) * u.mul(u.power(c, n - 1), u.associator(gc, ga, gb));
}

bool check_lemma_derivation(const EnvelopingAlgebra& u, std::size_t c, std::size_t a,
                            std::size_t b, std::size_t n) {
  Element r = lemma_residue(u, c, a, b, n);
  return u.filtration(static_cast<long>(n) - 2).contains(r.coords());
}

bool check_assoc_expansion(const EnvelopingAlgebra& u, std::size_t c, std::size_t a,
                           std::size_t b, std::size_t n) {
  require_budget(n + 2, u.cap(), "associator expansion");
  if (n == 0) throw PreconditionError("associator expansion needs n >= 1");
  const auto& t = u.system();
  const Element ga = u.generator(a), gb = u.generator(b);
  const Element lhs = u.associator(u.power(c, n), ga, gb);
  Element rhs = Scalar(static_cast<long>(n)) / 2 *
                u.mul(u.power(c, n - 1), u.embed(t.constant(a, c, b)));
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    const Element dc = d_map(u, a, c, u.power(c, n - 1 - i));
    rhs -= Scalar(1) / 2 * u.associator(u.power(c, i), dc, gb);
  }
  return lhs == rhs;
}

CheckList s2_suite(const EnvelopingAlgebra& u, std::size_t n_max) {
  const auto& t = u.system();
  const TripleSystem ref = catalog::s2();
  bool is_s2 = t.dim() == 2;
  for (std::size_t i = 0; is_s2 && i < 2; ++i)
    for (std::size_t j = 0; is_s2 && j < 2; ++j)
      for (std::size_t k = 0; is_s2 && k < 2; ++k) is_s2 = t.constant(i, j, k) == ref.constant(i, j, k);
  if (!is_s2) throw PreconditionError("the S2 suite needs the system [e,f,e] = 2e, [e,f,f] = -2f");
  require_budget(n_max + 3, u.cap(), "S2 suite");

  const Element e = u.generator(0), f = u.generator(1);
  CheckList out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Scalar sn(static_cast<long>(n));
    const Element en = u.power(0, n);
    const Element lhs = u.mul(u.associator(en, f, f), e);
    Element rhs = sn * u.mul(en, f);
    if (n >= 1) rhs -= sn * Scalar(static_cast<long>(n) - 1) * u.power(0, n - 1);
    CheckRecord prop{"s2.proposition.n" + std::to_string(n),
                     "(e^n,f,f)e = n e^n f - n(n-1) e^{n-1}", "n=" + std::to_string(n),
                     lhs == rhs, ""};
    prop.witness = prop.pass ? u.format(lhs) : "lhs " + u.format(lhs) + " rhs " + u.format(rhs);
    out.push_back(prop);

    const Element r = r_map(u, 1, 0, en);
    CheckRecord eig{"s2.eigen.n" + std::to_string(n), "R_{f,e}(e^n) = -2(e^n,f,e) = 2n e^n",
                    "n=" + std::to_string(n), r == Scalar(2) * sn * en, u.format(r)};
    out.push_back(eig);
  }
  return out;
}

bool filtration_preservation_check(const EnvelopingAlgebra& u, std::size_t a, std::size_t b) {
  if (u.cap() < 2) return true;
  for (std::size_t x = 0; x < u.dim(); ++x) {
    const std::size_t k = u.nf_degree(x);
    if (k + 2 > u.cap()) continue;
    const Element img = r_map(u, a, b, u.monomial(x));
    if (!img.is_zero() && u.degree(img) > k) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Right ideals

IdealClosure right_ideal_closure(const EnvelopingAlgebra& u, const std::vector<Element>& gens) {
  if (gens.empty()) throw PreconditionError("right ideal closure needs generators");
  const std::size_t n = u.dim();
  const std::size_t cap = u.cap();
  std::size_t max_deg = 0;
  for (const auto& g : gens) {
    if (g.coords().dim() != n) throw DimensionMismatch("ideal generator from another algebra");
    max_deg = std::max(max_deg, u.degree(g));
  }
  require_budget(max_deg, cap, "ideal generator");

  // Reverse order puts higher degrees first, so pivots sit on leading terms.
  auto flip = [&](const SparseVector& v) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, c] : v) e.emplace_back(n - 1 - i, c);
    return SparseVector(n, std::move(e));
  };
  EchelonBuilder builder(n);
  std::deque<Element> pending;
  auto insert = [&](const Element& x) {
    if (auto r = builder.insert(flip(x.coords()))) pending.emplace_back(flip(*r));
  };
  for (const auto& g : gens) insert(g);
  while (!pending.empty()) {
    Element w = std::move(pending.front());
    pending.pop_front();
    const std::size_t k = u.degree(w);
    for (std::size_t m = 1; m < n; ++m) {
      if (k + u.nf_degree(m) > cap) break;
      insert(u.mul(w, u.monomial(m)));
    }
  }

  IdealClosure out;
  Subspace flipped = builder.finish();
  std::vector<SparseVector> rows;
  out.level_dims.assign(cap + 1, 0);
  for (std::size_t r = 0; r < flipped.dim(); ++r) {
    rows.push_back(flip(flipped.rows()[r]));
    const std::size_t deg = u.nf_degree(n - 1 - flipped.pivots()[r]);
    for (std::size_t k = deg; k <= cap; ++k) ++out.level_dims[k];
  }
  out.subspace = echelonize(n, rows);
  out.contains_one = out.subspace.contains(u.one().coords());

  std::vector<SparseVector> t_basis;
  for (std::size_t g = 0; g < u.generators(); ++g) t_basis.push_back(u.generator(g).coords());
  out.meets_t = out.subspace.intersect(echelonize(n, t_basis)).dim();

  out.window = cap - max_deg;
  auto covers = [&](std::size_t lo) {
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t dm = u.nf_degree(m);
      if (dm >= lo && dm <= out.window && !out.subspace.contains(u.monomial(m).coords())) return false;
    }
    return true;
  };
  if (covers(out.window)) {
    std::size_t lo = out.window;
    while (lo > 0 && covers(lo - 1)) --lo;
    out.stabilization_degree = lo;
  }
  return out;
}

Subspace augmentation_ideal(const EnvelopingAlgebra& u) {
  std::vector<SparseVector> units;
  std::vector<SparseVector> counit_images;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u.nf_degree(i) >= 1) units.push_back(SparseVector::unit(u.dim(), i));
    counit_images.push_back(SparseVector::unit(1, 0, i == 0 ? 1 : 0));
  }
  Subspace aug = echelonize(u.dim(), units);
  if (aug != kernel(u.dim(), counit_images)) throw Error("augmentation ideal differs from ker(counit)");
  return aug;
}

}  // namespace triplex
