#pragma once

// Degree-truncated universal enveloping algebra U(T)_{<=N} of a Lie triple
// system, realized as a quotient of the free nonassociative algebra and
// certified against the symmetric-algebra dimension count.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triplex/exactlin.hpp"
#include "triplex/freealg.hpp"
#include "triplex/lts.hpp"
#include "triplex/report.hpp"

namespace triplex {

// Coordinates in the normal-form basis of an EnvelopingAlgebra.
class Element {
 public:
  Element() = default;
  explicit Element(SparseVector coords) : coords_(std::move(coords)) {}

  const SparseVector& coords() const { return coords_; }
  bool is_zero() const { return coords_.is_zero(); }
  Scalar coeff(std::size_t nf) const { return coords_.at(nf); }

  Element& operator+=(const Element& o) { coords_ += o.coords_; return *this; }
  Element& operator-=(const Element& o) { coords_ -= o.coords_; return *this; }
  Element& operator*=(const Scalar& c) { coords_ *= c; return *this; }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= -1; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  SparseVector coords_;
};

using Exponent = std::vector<std::size_t>;

// Normal-form monomials are exponent vectors k with representative tree
// b_1^{k_1} * (b_2^{k_2} * ( ... * b_d^{k_d})), powers left-nested; they are
// indexed by degree, then by descending lexicographic exponent.
class EnvelopingAlgebra {
 public:
  // Throws ValidationError if t fails the axioms, SizeGuardExceeded from the
  // monomial table and PBWCertificateFailure if the quotient dimension at
  // some degree differs from C(d+n-1, n).
  static EnvelopingAlgebra build(const TripleSystem& t, std::size_t cap,
                                 std::size_t max_monomials = kDefaultMaxMonomials);

  const TripleSystem& system() const { return system_; }
  const FreeAlgebra& free() const { return free_; }
  std::size_t cap() const { return free_.cap(); }
  std::size_t generators() const { return system_.dim(); }
  std::size_t dim() const { return exponents_.size(); }

  const std::vector<Exponent>& exponents() const { return exponents_; }
  std::size_t nf_degree(std::size_t i) const { return nf_degree_[i]; }
  std::size_t nf_index(const Exponent& k) const;
  std::size_t representative(std::size_t i) const { return reps_[i]; }
  // Number of normal-form monomials of degree <= k (0 for k < 0).
  std::size_t filtration_dim(long k) const;

  // Quotient dimension at each degree 0..N.
  std::vector<std::size_t> degree_dims() const;
  std::size_t relation_rank() const { return relation_basis_.size(); }
  // Reduced echelon basis of the relation ideal in free coordinates.
  const std::vector<FreeElement>& relation_basis() const { return relation_basis_; }

  Element zero() const { return Element(SparseVector(dim())); }
  Element one() const { return monomial(0); }
  Element monomial(std::size_t i, const Scalar& c = 1) const {
    return Element(SparseVector::unit(dim(), i, c));
  }
  Element generator(std::size_t g) const;
  // iota: T -> U(T)
  Element embed(const Vec& t) const;
  Element power(std::size_t g, std::size_t n) const;

  std::size_t degree(const Element& x) const;

  Element reduce(const FreeElement& x) const;
  FreeElement lift(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  // (xy)z - x(yz)
  Element associator(const Element& x, const Element& y, const Element& z) const;

  Subspace filtration(long k) const;
  // Matrix of y -> xy on filtration(N - deg x), columns indexed by the
  // normal-form monomials of that level.
  Matrix left_mult_operator(const Element& x) const;

  std::string format(const Element& x) const;
  std::string format_monomial(std::size_t i) const;
  Element parse(std::string_view text) const { return reduce(free_.parse(text)); }

 private:
  TripleSystem system_;
  FreeAlgebra free_;
  std::vector<Exponent> exponents_;
  std::vector<std::size_t> nf_degree_;
  std::vector<std::size_t> reps_;
  std::vector<SparseVector> nf_of_free_;
  std::vector<FreeElement> relation_basis_;
};

// C(n, k) as size_t.
std::size_t binomial(std::size_t n, std::size_t k);
// C(d + n - 1, n): symmetric-algebra monomials of degree n in d variables.
std::size_t symmetric_count(std::size_t d, std::size_t n);

// D_{a,b}(x) = a(bx) - b(ax), i.e. [L_a, L_b].
Element d_map(const EnvelopingAlgebra& u, std::size_t a, std::size_t b, const Element& x);
// R_{a,b}(x) = -2 (x,a,b)
Element r_map(const EnvelopingAlgebra& u, std::size_t a, std::size_t b, const Element& x);

// Generator images commute, the nucleus identity on monomials, triple
// coherence, power-associativity of generator powers and the per-degree
// dimension certificate.
CheckList pbw_checks(const EnvelopingAlgebra& u);

// L_{ax+xa} = L_a L_x + L_x L_a on filtration(N - deg x - 1).
bool check_jordan(const EnvelopingAlgebra& u, std::size_t a, const Element& x);

// D_{a,b}(xy) = D_{a,b}(x) y + x D_{a,b}(y), and D_{a,b} restricted to T is
// the inner derivation c -> [a,b,c].
bool check_d_derivation(const EnvelopingAlgebra& u, std::size_t a, std::size_t b,
                        const Element& x, const Element& y);

// (c^n,a,b) - n c^{n-1} (c,a,b)
Element lemma_residue(const EnvelopingAlgebra& u, std::size_t c, std::size_t a, std::size_t b,
                      std::size_t n);
// The residue lies in filtration(n - 2).
bool check_lemma_derivation(const EnvelopingAlgebra& u, std::size_t c, std::size_t a,
                            std::size_t b, std::size_t n);

// (c^n,a,b) = n/2 c^{n-1}[a,c,b] - 1/2 sum_{i=0}^{n-2} (c^i, D_{a,c}(c^{n-1-i}), b)
bool check_assoc_expansion(const EnvelopingAlgebra& u, std::size_t c, std::size_t a,
                           std::size_t b, std::size_t n);

// For n <= n_max:  (e^n,f,f)e = n e^n f - n(n-1) e^{n-1}  and
// R_{f,e}(e^n) = 2n e^n.  Throws PreconditionError unless u is built on S2
// (with e, f the two basis vectors).
CheckList s2_suite(const EnvelopingAlgebra& u, std::size_t n_max);

// R_{a,b} maps filtration(k) into itself for k <= N - 2.
bool filtration_preservation_check(const EnvelopingAlgebra& u, std::size_t a, std::size_t b);

struct IdealClosure {
  Subspace subspace;                  // normal-form coordinates
  std::vector<std::size_t> level_dims;  // dim(I cap U_n), n = 0..N
  bool contains_one = false;
  std::size_t meets_t = 0;            // dim(I cap iota(T))
  std::size_t window = 0;             // N - max deg of the generators
  // Least n0 such that every normal-form monomial of degree n0..window lies
  // in the closure.
  std::optional<std::size_t> stabilization_degree;
};

// Smallest subspace containing gens and closed under v -> v m for every
// normal-form monomial m with deg v + deg m <= N.
IdealClosure right_ideal_closure(const EnvelopingAlgebra& u, const std::vector<Element>& gens);

// Span of the normal-form monomials of degree >= 1; checked equal to the
// kernel of the counit.
Subspace augmentation_ideal(const EnvelopingAlgebra& u);

}  // namespace triplex
