#pragma once

// Lie triple systems: structure constants, the axioms, the right and inner
// derivation operators, the standard embedding Lie algebra with its
// involution and Killing form, and Lie/associative closures of operator sets.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triplex/exactlin.hpp"
#include "triplex/report.hpp"

namespace triplex {

class TripleSystem {
 public:
  struct Entry {
    std::array<std::size_t, 3> args;
    SparseVector value;
  };

  TripleSystem() = default;

  // Unlisted triples are zero.  Throws ValidationError on out-of-range
  // indices, wrong value dimension or a repeated (i,j,k).
  static TripleSystem create(std::string name, std::vector<std::string> basis,
                             const std::vector<Entry>& entries);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }

  const Vec& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim() + j) * dim() + k];
  }
  // Trilinear extension of the constants.
  Vec product(const Vec& x, const Vec& y, const Vec& z) const;
  Vec basis_vector(std::size_t i) const;
  bool is_abelian() const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Vec> table_;
};

class LieAlgebra {
 public:
  struct Entry {
    std::array<std::size_t, 2> args;
    SparseVector value;
  };

  LieAlgebra() = default;
  static LieAlgebra create(std::string name, std::vector<std::string> basis,
                           const std::vector<Entry>& entries);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const Vec& constant(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t i) const;

  // Matrix of ad_x in the basis.
  Matrix ad(const Vec& x) const;
  Matrix killing_form() const;

  // Antisymmetry and Jacobi on the basis.
  CheckList check() const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Vec> table_;
};

// Per-axiom verdicts: [x,x,y] = 0, the cyclic identity, and the derivation
// identity, each with its first counterexample.
CheckList check_axioms(const TripleSystem& t);
bool satisfies_axioms(const TripleSystem& t);

// [x,y,z] = [[x,y],z].  Throws ValidationError if l fails check().
TripleSystem lts_from_lie(const LieAlgebra& l);

// The -1 eigenspace of an involutive automorphism s, with the restricted
// product in the reduced echelon basis of that eigenspace.
TripleSystem lts_from_involution(const LieAlgebra& l, const Matrix& s);

Vec triple_product(const TripleSystem& t, const Vec& x, const Vec& y, const Vec& z);

enum class OperatorKind { R, D, LRestricted, Tau, Lambda, Sigma, Generic };

struct Operator {
  Matrix matrix;
  OperatorKind kind = OperatorKind::Generic;
};

// x -> [x,a,b]
Operator r_op(const TripleSystem& t, const Vec& a, const Vec& b);
// x -> [a,b,x]
Operator d_op(const TripleSystem& t, const Vec& a, const Vec& b);

struct InnerDerivations {
  std::vector<Matrix> basis;
  Subspace span;  // flattened d*d matrices
};

// Span of all D_{b_i,b_j}; throws ValidationError if it is not closed under
// the commutator or an element fails to be a derivation of the product.
InnerDerivations inner_derivations(const TripleSystem& t);

// L(T) = InnDer(T) + T.  Basis: the inner derivation basis first, then the
// basis of T.
struct StandardEmbedding {
  LieAlgebra lie;
  std::size_t inner_dim = 0;
  std::size_t t_dim = 0;
  std::vector<Matrix> inner_basis;
  Matrix sigma;    // +1 on InnDer(T), -1 on T
  Matrix killing;  // trace form of ad on L(T)

  bool is_inner(std::size_t i) const { return i < inner_dim; }
  Matrix killing_on_t() const;
  bool killing_nondegenerate() const { return killing.rank() == killing.rows(); }
};

// Throws ValidationError if Jacobi fails on L(T).
StandardEmbedding standard_embedding(const TripleSystem& t);

// sigma^2 = Id, sigma is a bracket automorphism preserving K, and
// K(InnDer, T) = 0.
CheckList embedding_checks(const StandardEmbedding& emb);

// 2 tr(R_{b_i,b_j}) = K(b_i,b_j) on every basis pair.
CheckList trace_identity_check(const TripleSystem& t, const StandardEmbedding& emb);

// K(R_{a,b} x, y) = K(x, R_{b,a} y) on basis vectors.
CheckList adjointness_check(const TripleSystem& t, const StandardEmbedding& emb);

// Smallest commutator-closed subspace containing gens (flattened n*n).
Subspace lie_closure(std::span<const Matrix> gens);
// Smallest product-closed subspace containing gens.
Subspace associative_envelope(std::span<const Matrix> gens);

std::vector<Matrix> all_r_operators(const TripleSystem& t);

struct EndoResult {
  bool holds = false;
  std::size_t closure_dim = 0;
  std::size_t target_dim = 0;
};

// Whether the R_{a,b} generate End(T) as a Lie algebra.
EndoResult endo_theorem_check(const TripleSystem& t);

enum class Simplicity { Simple, NotSimple, Inconclusive };
std::string to_string(Simplicity s);

struct SimplicityReport {
  Simplicity verdict = Simplicity::Inconclusive;
  std::size_t envelope_dim = 0;
  bool nontrivial_product = false;
  std::optional<Subspace> invariant_witness;  // proper nonzero ideal, if found
};

// Burnside-style certificate: the associative envelope of all R_{b_i,b_j}
// equals End(T) and [T,T,T] != 0.
SimplicityReport simplicity_certificate(const TripleSystem& t);

// z -> K(y,z) x with K a symmetric form on T.
Operator tau_map(const Matrix& form, const Vec& x, const Vec& y);
Operator lambda_map(const Matrix& form, const Vec& x, const Vec& y);
Operator sigma_map(const Matrix& form, const Vec& x, const Vec& y);
bool is_form_skew(const Matrix& form, const Matrix& d);

// [d, tau_{x,y}] = tau_{d(x),y} + tau_{x,d(y)}; throws PreconditionError if d
// is not skew for the form.
bool tau_commutator_check(const Matrix& form, const Matrix& d, const Vec& x, const Vec& y);

}  // namespace triplex
