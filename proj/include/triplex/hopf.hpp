#pragma once

// Counit, comultiplication, the S map and the two divisions of U(T), plus
// the bialgebra identity checks.

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "triplex/envelope.hpp"
#include "triplex/report.hpp"

namespace triplex {

// Sum of c * (m_i (x) m_j) over normal-form monomial pairs.
class TensorElement {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(std::size_t i, std::size_t j, const Scalar& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  TensorElement swapped() const;

 private:
  std::map<Key, Scalar> terms_;
};

// Three legs, for iterated comultiplication.
using Tensor3 = std::map<std::array<std::size_t, 3>, Scalar>;

class Bialgebra {
 public:
  // Computes the comultiplication of every normal-form monomial and certifies
  // that each relation of the quotient maps to zero in U (x) U; throws Error
  // if one does not.
  explicit Bialgebra(const EnvelopingAlgebra& u);

  const EnvelopingAlgebra& algebra() const { return *u_; }

  Scalar counit(const Element& x) const { return x.coeff(0); }
  TensorElement comult(const Element& x) const;
  // (Delta (x) Id) Delta
  Tensor3 comult3(const Element& x) const;
  // (Id (x) Delta) Delta
  Tensor3 comult3_right(const Element& x) const;
  // Multiplicative extension of a -> a(x)1 + 1(x)a on a free element.
  TensorElement free_comult(const FreeElement& x) const;

  // (-1)^n on monomials of degree n.
  Element s_map(const Element& x) const;
  // x\y = S(x) y
  Element left_div(const Element& x, const Element& y) const;
  // y/x = sum S(x3) ((x1 y) S(x2))
  Element right_div(const Element& y, const Element& x) const;

  // Componentwise product in U (x) U.
  TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) const;
  TensorElement tensor(const Element& a, const Element& b) const;

 private:
  const TensorElement& tree_comult(std::size_t free_index) const;

  const EnvelopingAlgebra* u_;
  std::vector<TensorElement> nf_comult_;
  mutable std::map<std::size_t, TensorElement> tree_memo_;
};

// Coassociativity, cocommutativity and both counit laws on monomials of
// degree <= k; Delta(xy) = Delta(x)Delta(y) on monomial pairs of degree <= k
// within the cap.
CheckList check_coalgebra(const Bialgebra& h, std::size_t k);

// S^2 = Id, S(1) = 1, eps o S = eps, S(xy) = S(x)S(y) on monomial pairs.
CheckList check_s_map(const Bialgebra& h);

// sum x1\(x2 y) = eps(x) y = sum x1 (x2\y) and
// sum (y x1)/x2 = eps(x) y = sum (y/x1) x2.
CheckList check_divisions(const Bialgebra& h, const Element& x, const Element& y);

// sum x1 (y (x2 z)) = sum (x1 (y x2)) z
bool check_weak_assoc(const Bialgebra& h, const Element& x, const Element& y, const Element& z);

// Solutions of Delta x = x(x)1 + 1(x)x inside filtration(k), in normal-form
// coordinates of the whole algebra.
Subspace primitives(const Bialgebra& h, std::size_t k);

}  // namespace triplex
