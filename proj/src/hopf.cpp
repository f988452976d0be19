#include "triplex/hopf.hpp"

namespace triplex {

void TensorElement::add(std::size_t i, std::size_t j, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorElement TensorElement::swapped() const {
  TensorElement out;
  for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
  return out;
}

namespace {

void add3(Tensor3& t, std::array<std::size_t, 3> k, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = t.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Bialgebra::Bialgebra(const EnvelopingAlgebra& u) : u_(&u) {
  nf_comult_.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) nf_comult_.push_back(tree_comult(u.representative(i)));

  for (const auto& r : u.relation_basis()) {
    if (!free_comult(r).is_zero()) {
      throw Error("relation " + u.free().format(r) + " is not a coideal element");
    }
  }
  tree_memo_.clear();
}

const TensorElement& Bialgebra::tree_comult(std::size_t t) const {
  if (auto it = tree_memo_.find(t); it != tree_memo_.end()) return it->second;
  const MonomialTable& tab = u_->free().table();
  TensorElement out;
  if (t == tab.unit()) {
    out.add(0, 0, 1);
  } else if (tab.is_leaf(t)) {
    const std::size_t g = u_->generator(tab.generator(t)).coords().entries().front().first;
    out.add(g, 0, 1);
    out.add(0, g, 1);
  } else {
    TensorElement l = tree_comult(tab.left(t));
    out = tensor_mul(l, tree_comult(tab.right(t)));
  }
  return tree_memo_.emplace(t, std::move(out)).first->second;
}

TensorElement Bialgebra::free_comult(const FreeElement& x) const {
  TensorElement out;
  for (const auto& [t, c] : x.coords()) {
    for (const auto& [k, v] : tree_comult(t).terms()) out.add(k.first, k.second, c * v);
  }
  return out;
}

TensorElement Bialgebra::tensor_mul(const TensorElement& a, const TensorElement& b) const {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const Element l = u_->mul(u_->monomial(ka.first), u_->monomial(kb.first));
      const Element r = u_->mul(u_->monomial(ka.second), u_->monomial(kb.second));
      const Scalar c = ca * cb;
      for (const auto& [i, x] : l.coords())
        for (const auto& [j, y] : r.coords()) out.add(i, j, c * x * y);
    }
  return out;
}

TensorElement Bialgebra::tensor(const Element& a, const Element& b) const {
  TensorElement out;
  for (const auto& [i, x] : a.coords())
    for (const auto& [j, y] : b.coords()) out.add(i, j, x * y);
  return out;
}

TensorElement Bialgebra::comult(const Element& x) const {
  TensorElement out;
  for (const auto& [i, c] : x.coords())
    for (const auto& [k, v] : nf_comult_[i].terms()) out.add(k.first, k.second, c * v);
  return out;
}

Tensor3 Bialgebra::comult3(const Element& x) const {
  Tensor3 out;
  const TensorElement d = comult(x);
  for (const auto& [k, c] : d.terms())
    for (const auto& [k1, v] : nf_comult_[k.first].terms())
      add3(out, {k1.first, k1.second, k.second}, c * v);
  return out;
}

Tensor3 Bialgebra::comult3_right(const Element& x) const {
  Tensor3 out;
  const TensorElement d = comult(x);
  for (const auto& [k, c] : d.terms())
    for (const auto& [k2, v] : nf_comult_[k.second].terms())
      add3(out, {k.first, k2.first, k2.second}, c * v);
  return out;
}

Element Bialgebra::s_map(const Element& x) const {
  std::vector<SparseVector::Entry> e;
  for (const auto& [i, c] : x.coords()) e.emplace_back(i, u_->nf_degree(i) % 2 ? Scalar(-c) : c);
  return Element(SparseVector(u_->dim(), std::move(e)));
}

Element Bialgebra::left_div(const Element& x, const Element& y) const {
  return u_->mul(s_map(x), y);
}

Element Bialgebra::right_div(const Element& y, const Element& x) const {
  if (!x.is_zero() && !y.is_zero() && u_->degree(x) + u_->degree(y) > u_->cap()) {
    throw DegreeBudgetExceeded("right division needs degree " +
                               std::to_string(u_->degree(x) + u_->degree(y)) +
                               " but the cap is " + std::to_string(u_->cap()));
  }
  Element out = u_->zero();
  for (const auto& [k, c] : comult3(x)) {
    const Element x1 = u_->monomial(k[0]);
    const Element s2 = s_map(u_->monomial(k[1]));
    const Element s3 = s_map(u_->monomial(k[2]));
    out += c * u_->mul(s3, u_->mul(u_->mul(x1, y), s2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

CheckList check_coalgebra(const Bialgebra& h, std::size_t k) {
  const EnvelopingAlgebra& u = h.algebra();
  if (k > u.cap()) throw DegreeBudgetExceeded("coalgebra check beyond the cap");
  const std::size_t n = u.filtration_dim(static_cast<long>(k));
  const std::string params = "deg<=" + std::to_string(k);

  CheckRecord coassoc{"hopf.coassociative", "(Delta (x) Id) Delta = (Id (x) Delta) Delta", params, true, ""};
  CheckRecord cocomm{"hopf.cocommutative", "tau Delta = Delta", params, true, ""};
  CheckRecord counit{"hopf.counit", "(eps (x) Id) Delta = Id = (Id (x) eps) Delta", params, true, ""};
  CheckRecord morph{"hopf.multiplicative", "Delta(xy) = Delta(x) Delta(y)", params, true, ""};
  CheckRecord prim{"hopf.generators_primitive", "Delta(a) = a (x) 1 + 1 (x) a", "generators", true, ""};

  for (std::size_t i = 0; i < n; ++i) {
    const Element x = u.monomial(i);
    const TensorElement d = h.comult(x);
    if (coassoc.pass && h.comult3(x) != h.comult3_right(x)) {
      coassoc.pass = false;
      coassoc.witness = u.format_monomial(i);
    }
    if (cocomm.pass && d.swapped() != d) {
      cocomm.pass = false;
      cocomm.witness = u.format_monomial(i);
    }
    if (counit.pass) {
      Element left = u.zero(), right = u.zero();
      for (const auto& [key, c] : d.terms()) {
        if (key.first == 0) left += u.monomial(key.second, c);
        if (key.second == 0) right += u.monomial(key.first, c);
      }
      if (left != x || right != x) {
        counit.pass = false;
        counit.witness = u.format_monomial(i);
      }
    }
  }
  for (std::size_t i = 0; i < n && morph.pass; ++i)
    for (std::size_t j = 0; j < n && morph.pass; ++j) {
      if (u.nf_degree(i) + u.nf_degree(j) > u.cap()) continue;
      const Element x = u.monomial(i), y = u.monomial(j);
      if (h.comult(u.mul(x, y)) != h.tensor_mul(h.comult(x), h.comult(y))) {
        morph.pass = false;
        morph.witness = u.format_monomial(i) + " * " + u.format_monomial(j);
      }
    }
  for (std::size_t g = 0; g < u.generators(); ++g) {
    const Element a = u.generator(g);
    if (h.comult(a) != h.tensor(a, u.one()) + h.tensor(u.one(), a)) {
      prim.pass = false;
      prim.witness = u.system().basis_names()[g];
      break;
    }
  }
  return {coassoc, cocomm, counit, morph, prim};
}

CheckList check_s_map(const Bialgebra& h) {
  const EnvelopingAlgebra& u = h.algebra();
  CheckRecord inv{"hopf.s.involution", "S(S(x)) = x, S(1) = 1, eps(S(x)) = eps(x)", "all monomials", true, ""};
  CheckRecord aut{"hopf.s.automorphism", "S(xy) = S(x) S(y)", "monomial pairs", true, ""};
  if (h.s_map(u.one()) != u.one()) {
    inv.pass = false;
    inv.witness = "1";
  }
  for (std::size_t i = 0; i < u.dim() && inv.pass; ++i) {
    const Element x = u.monomial(i);
    if (h.s_map(h.s_map(x)) != x || h.counit(h.s_map(x)) != h.counit(x)) {
      inv.pass = false;
      inv.witness = u.format_monomial(i);
    }
  }
  for (std::size_t i = 0; i < u.dim() && aut.pass; ++i)
    for (std::size_t j = 0; j < u.dim() && aut.pass; ++j) {
      if (u.nf_degree(i) + u.nf_degree(j) > u.cap()) continue;
      const Element x = u.monomial(i), y = u.monomial(j);
      if (h.s_map(u.mul(x, y)) != u.mul(h.s_map(x), h.s_map(y))) {
        aut.pass = false;
        aut.witness = u.format_monomial(i) + " * " + u.format_monomial(j);
      }
    }
  return {inv, aut};
}

CheckList check_divisions(const Bialgebra& h, const Element& x, const Element& y) {
  const EnvelopingAlgebra& u = h.algebra();
  if (!x.is_zero() && !y.is_zero() && u.degree(x) + u.degree(y) > u.cap()) {
    throw DegreeBudgetExceeded("division identities need degree " +
                               std::to_string(u.degree(x) + u.degree(y)));
  }
  const Element target = h.counit(x) * y;
  Element l1 = u.zero(), l2 = u.zero(), r1 = u.zero(), r2 = u.zero();
  const TensorElement dx = h.comult(x);
  for (const auto& [k, c] : dx.terms()) {
    const Element x1 = u.monomial(k.first), x2 = u.monomial(k.second);
    l1 += c * h.left_div(x1, u.mul(x2, y));
    l2 += c * u.mul(x1, h.left_div(x2, y));
    r1 += c * h.right_div(u.mul(y, x1), x2);
    r2 += c * u.mul(h.right_div(y, x1), x2);
  }
  const std::string params = "x=" + u.format(x) + " y=" + u.format(y);
  auto rec = [&](const char* id, const char* anchor, const Element& got) {
    return CheckRecord{id, anchor, params, got == target, got == target ? "" : u.format(got)};
  };
  return {rec("hopf.div.left_inner", "sum x1\\(x2 y) = eps(x) y", l1),
          rec("hopf.div.left_outer", "sum x1 (x2\\y) = eps(x) y", l2),
          rec("hopf.div.right_inner", "sum (y x1)/x2 = eps(x) y", r1),
          rec("hopf.div.right_outer", "sum (y/x1) x2 = eps(x) y", r2)};
}

bool check_weak_assoc(const Bialgebra& h, const Element& x, const Element& y, const Element& z) {
  const EnvelopingAlgebra& u = h.algebra();
  if (x.is_zero() || y.is_zero() || z.is_zero()) return true;
  if (u.degree(x) + u.degree(y) + u.degree(z) > u.cap()) {
    throw DegreeBudgetExceeded("weak associativity beyond the cap");
  }
  Element lhs = u.zero(), rhs = u.zero();
  const TensorElement dx = h.comult(x);
  for (const auto& [k, c] : dx.terms()) {
    const Element x1 = u.monomial(k.first), x2 = u.monomial(k.second);
    lhs += c * u.mul(x1, u.mul(y, u.mul(x2, z)));
    rhs += c * u.mul(u.mul(x1, u.mul(y, x2)), z);
  }
  return lhs == rhs;
}

Subspace primitives(const Bialgebra& h, std::size_t k) {
  const EnvelopingAlgebra& u = h.algebra();
  if (k > u.cap()) throw DegreeBudgetExceeded("primitives beyond the cap");
  const std::size_t n = u.filtration_dim(static_cast<long>(k));
  const std::size_t dim = u.dim();
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = u.monomial(i);
    TensorElement d = h.comult(x) - h.tensor(x, u.one()) - h.tensor(u.one(), x);
    std::vector<SparseVector::Entry> e;
    for (const auto& [key, c] : d.terms()) e.emplace_back(key.first * dim + key.second, c);
    images.emplace_back(dim * dim, std::move(e));
  }
  Subspace ker = kernel(n, images);
  std::vector<SparseVector> rows;
  for (const auto& r : ker.rows()) rows.emplace_back(dim, r.entries());
  return echelonize(dim, rows);
}

}  // namespace triplex
