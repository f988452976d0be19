#include <doctest.h>

#include "triplex/catalog.hpp"
#include "triplex/envelope.hpp"
#include "triplex/errors.hpp"

using namespace triplex;

namespace {

const EnvelopingAlgebra& s2_at(std::size_t n) {
  static const EnvelopingAlgebra u4 = EnvelopingAlgebra::build(catalog::s2(), 4);
  static const EnvelopingAlgebra u6 = EnvelopingAlgebra::build(catalog::s2(), 6);
  return n == 4 ? u4 : u6;
}

// Number of binary trees with n leaves over d letters, by the recursion
// t(n) = sum t(i) t(n-i), kept apart from the closed form used by the table.
std::size_t trees(std::size_t d, std::size_t n) {
  if (n == 0) return 1;
  std::vector<std::size_t> t(n + 1, 0);
  t[1] = d;
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t i = 1; i < k; ++i) t[k] += t[i] * t[k - i];
  return t[n];
}

// C(d + n - 1, n) by Pascal's triangle.
std::size_t sym(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::size_t>> p(d + n, std::vector<std::size_t>(d + n, 0));
  for (std::size_t i = 0; i < d + n; ++i) {
    p[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) p[i][j] = p[i - 1][j - 1] + (j < i ? p[i - 1][j] : 0);
  }
  return p[d + n - 1][n];
}

}  // namespace

TEST_CASE("dimensions and relation rank") {
  const EnvelopingAlgebra& u = s2_at(6);
  CHECK(u.dim() == 28);
  CHECK(u.degree_dims() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  std::size_t free = 0, quotient = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    free += trees(2, n);
    quotient += sym(2, n);
  }
  CHECK(free == 3239);
  CHECK(u.free().size() == free);
  CHECK(u.relation_rank() == free - quotient);
  CHECK(u.relation_rank() == 3211);
  CHECK(u.filtration_dim(2) == 6);
  CHECK(u.filtration_dim(-1) == 0);
  CHECK(u.filtration(2).dim() == 6);
  CHECK(all_pass(pbw_checks(u)));

  const EnvelopingAlgebra v = EnvelopingAlgebra::build(catalog::sl2_lts(), 3);
  CHECK(v.degree_dims() == std::vector<std::size_t>{1, 3, 6, 10});
  CHECK(all_pass(pbw_checks(v)));
}

TEST_CASE("normal forms") {
  const EnvelopingAlgebra& u = s2_at(4);
  CHECK(u.nf_index({0, 0}) == 0);
  CHECK(u.nf_degree(u.nf_index({2, 1})) == 3);
  CHECK(u.format_monomial(u.nf_index({2, 1})) == "e^2*f");
  CHECK(u.format_monomial(u.nf_index({0, 3})) == "f^3");
  CHECK(u.reduce(u.free().parse("f*e")) == u.parse("e*f"));
  CHECK(u.reduce(u.free().parse("(e*e)*f - e*(e*f)")).is_zero());
  CHECK(u.parse("(e*f)*e") - u.parse("e*(f*e)") == -u.generator(0));
  for (std::size_t i = 0; i < u.dim(); ++i) CHECK(u.reduce(u.lift(u.monomial(i))) == u.monomial(i));
  CHECK(u.degree(u.parse("e*f + f")) == 2);
  CHECK(u.format(u.parse("-2*e + 2*(e*(e*f))")) == "-2*e + 2*e^2*f");
  CHECK(u.embed({1, -1}) == u.parse("e - f"));
  CHECK(u.power(0, 3) == u.parse("e^3"));
  CHECK_THROWS_AS(u.nf_index({5, 0}), DegreeBudgetExceeded);
}

TEST_CASE("products and associators in U(S2)") {
  const EnvelopingAlgebra& u = s2_at(6);
  const Element e = u.generator(0), f = u.generator(1);
  CHECK(u.mul(e, f) == u.mul(f, e));
  CHECK(u.associator(e, f, e) == -e);
  CHECK(u.associator(e, e, f).is_zero());
  CHECK(u.associator(u.power(0, 2), f, e) == Scalar(-2) * u.power(0, 2));
  CHECK(u.mul(u.power(0, 2), u.power(0, 3)) == u.power(0, 5));
  CHECK(u.mul(u.one(), e) == e);
  CHECK(r_map(u, 0, 1, e).is_zero());
  CHECK(r_map(u, 1, 0, u.power(0, 3)) == Scalar(6) * u.power(0, 3));
  CHECK(d_map(u, 0, 1, e) == u.embed({2, 0}));
  CHECK_THROWS_AS(u.mul(u.power(0, 4), u.power(1, 3)), DegreeBudgetExceeded);
}

TEST_CASE("left multiplication operators") {
  const EnvelopingAlgebra& u = s2_at(6);
  const Element e = u.generator(0);
  const Matrix le = u.left_mult_operator(e);
  CHECK(le.rows() == 28);
  CHECK(le.cols() == u.filtration_dim(5));
  CHECK(le(u.nf_index({1, 0}), 0) == 1);
  CHECK(le(u.nf_index({2, 0}), u.nf_index({1, 0})) == 1);
  // powers of a generator act as powers of its operator
  for (std::size_t n = 1; n <= 3; ++n) {
    const Element c = u.power(0, n);
    for (std::size_t j = 0; j < u.filtration_dim(static_cast<long>(6 - n)); ++j) {
      Element y = u.monomial(j);
      for (std::size_t k = 0; k < n; ++k) y = u.mul(e, y);
      CHECK(u.mul(c, u.monomial(j)) == y);
    }
  }
}

TEST_CASE("operator identities") {
  const EnvelopingAlgebra& u = s2_at(6);
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(check_jordan(u, a, u.parse("e*f")));
    CHECK(check_jordan(u, a, u.parse("e^2 - 3*f")));
    CHECK(filtration_preservation_check(u, a, 1 - a));
    for (std::size_t b = 0; b < 2; ++b) CHECK(check_d_derivation(u, a, b, u.parse("e"), u.parse("e*f")));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(check_lemma_derivation(u, 0, 1, 0, n));
    CHECK(check_assoc_expansion(u, 0, 1, 0, n));
    CHECK(check_assoc_expansion(u, 1, 0, 1, n));
  }
  CHECK(lemma_residue(u, 0, 0, 1, 1).is_zero());
  const CheckList s = s2_suite(u, 3);
  CHECK(all_pass(s));
  CHECK(s.size() == 8);
  const EnvelopingAlgebra v = EnvelopingAlgebra::build(catalog::sl2_lts(), 3);
  CHECK_THROWS_AS(s2_suite(v, 1), PreconditionError);
}

TEST_CASE("right ideals") {
  const EnvelopingAlgebra& u = s2_at(4);
  const IdealClosure one = right_ideal_closure(u, {u.one()});
  CHECK(one.contains_one);
  CHECK(one.subspace.dim() == u.dim());
  CHECK(one.level_dims == std::vector<std::size_t>{1, 3, 6, 10, 15});
  CHECK(one.stabilization_degree == std::optional<std::size_t>(0));

  const IdealClosure e = right_ideal_closure(u, {u.generator(0)});
  CHECK_FALSE(e.contains_one);
  CHECK(e.window == 3);
  CHECK(e.level_dims[0] == 0);
  CHECK(e.meets_t >= 1);

  const IdealClosure unit = right_ideal_closure(u, {u.parse("1 + e")});
  CHECK(unit.level_dims[0] == 1);

  const Subspace aug = augmentation_ideal(u);
  CHECK(aug.dim() == u.dim() - 1);
  CHECK_FALSE(aug.contains(u.one().coords()));
  CHECK(right_ideal_closure(u, {u.generator(0), u.generator(1)}).subspace.contains(aug));
  CHECK_THROWS_AS(right_ideal_closure(u, {}), PreconditionError);
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(EnvelopingAlgebra::build(catalog::s2(), 6, 100), SizeGuardExceeded);
  const TripleSystem bad = TripleSystem::create("bad", {"e", "f"}, {{{0, 1, 0}, SparseVector::from_dense(Vec{1, 0})}});
  CHECK_THROWS_AS(EnvelopingAlgebra::build(bad, 3), ValidationError);
  CHECK(EnvelopingAlgebra::build(catalog::abelian(3), 3).dim() == 20);
  CHECK(binomial(6, 2) == 15);
  CHECK(symmetric_count(3, 2) == 6);
}
