#include <doctest.h>

#include <random>

#include "triplex/errors.hpp"
#include "triplex/freealg.hpp"

using namespace triplex;

namespace {

// Catalan(n-1) d^n from the binomial formula, independent of the table code.
std::size_t expected_count(std::size_t d, std::size_t n) {
  if (n == 0) return 1;
  const std::size_t m = n - 1;
  std::size_t c = 1;  // C(2m, m) / (m + 1)
  for (std::size_t k = 1; k <= m; ++k) c = c * (m + k) / k;
  c /= m + 1;
  std::size_t p = 1;
  for (std::size_t k = 0; k < n; ++k) p *= d;
  return c * p;
}

// Random expression text over e, f in the accepted grammar.
std::string random_expr(std::mt19937_64& rng, int depth) {
  const int pick = static_cast<int>(rng() % (depth > 0 ? 6 : 3));
  switch (pick) {
    case 0: return "e";
    case 1: return "f";
    case 2: return rng() % 2 ? "e^" + std::to_string(1 + rng() % 3) : "1";
    case 3: return "(" + random_expr(rng, depth - 1) + ")*(" + random_expr(rng, depth - 1) + ")";
    case 4: {
      std::string c = std::to_string(1 + rng() % 5);
      if (rng() % 2) c += "/" + std::to_string(2 + rng() % 3);
      return c + "*(" + random_expr(rng, depth - 1) + ")";
    }
    default: return random_expr(rng, depth - 1) + (rng() % 2 ? " + " : " - ") + random_expr(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("monomial counts") {
  CHECK(MonomialTable::count_at_degree(2, 3) == 16);
  CHECK(MonomialTable::count_at_degree(3, 4) == 405);
  CHECK(MonomialTable::count_at_degree(2, 0) == 1);
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 0; n <= 6; ++n) CHECK(MonomialTable::count_at_degree(d, n) == expected_count(d, n));
  const MonomialTable t = MonomialTable::enumerate(2, 6);
  CHECK(t.size() == 1 + 2 + 4 + 16 + 80 + 448 + 2688);
  CHECK(t.size() == 3239);
  for (std::size_t n = 0; n <= 6; ++n) {
    auto [b, e] = t.degree_range(n);
    CHECK(e - b == expected_count(2, n));
    for (std::size_t i = b; i < e; ++i) CHECK(t.degree(i) == n);
  }
  CHECK(MonomialTable::count_at_degree(10, 40) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(MonomialTable::enumerate(2, 6, 1000), SizeGuardExceeded);
  CHECK_NOTHROW(MonomialTable::enumerate(2, 6, 3239));
  CHECK_THROWS_AS(MonomialTable::enumerate(5, 12), SizeGuardExceeded);
  CHECK_THROWS_AS(MonomialTable::enumerate(0, 2), PreconditionError);
}

TEST_CASE("tree products") {
  const MonomialTable t = MonomialTable::enumerate(2, 3);
  const std::size_t e = t.leaf(0), f = t.leaf(1);
  const std::size_t ef = *t.product(e, f), fe = *t.product(f, e);
  CHECK(ef != fe);
  CHECK(t.left(ef) == e);
  CHECK(t.right(ef) == f);
  CHECK(*t.product(t.unit(), ef) == ef);
  CHECK(*t.product(ef, t.unit()) == ef);
  CHECK(*t.product(e, ef) != *t.product(*t.product(e, e), f));
  CHECK_FALSE(t.product(ef, ef));
  // Index order: (left degree, left index, right index) within a degree.
  auto [b, end] = t.degree_range(3);
  CHECK(t.degree(t.left(b)) == 1);
  CHECK(t.degree(t.left(end - 1)) == 2);
}

TEST_CASE("free multiplication") {
  const FreeAlgebra a({"e", "f"}, 4);
  const FreeElement e = a.generator(0), f = a.generator(1);
  CHECK(a.mul(a.one(), e) == e);
  CHECK(a.mul(e, a.one()) == e);
  CHECK(a.mul(e, f) != a.mul(f, e));
  CHECK(a.mul(e + f, e) == a.mul(e, e) + a.mul(f, e));
  CHECK(a.degree(a.mul(e, a.mul(f, e))) == 3);
  CHECK(a.degree(a.zero()) == 0);
  CHECK(a.power(0, 3) == a.mul(a.mul(e, e), e));
  CHECK(a.power(0, 0) == a.one());
  CHECK_THROWS_AS(a.mul(a.power(0, 3), a.power(1, 2)), DegreeBudgetExceeded);
  CHECK_THROWS_AS(a.power(0, 5), DegreeBudgetExceeded);
}

TEST_CASE("parsing") {
  const FreeAlgebra a({"e", "f"}, 4);
  const FreeElement e = a.generator(0), f = a.generator(1);
  CHECK(a.parse("e*(f*e)") == a.mul(e, a.mul(f, e)));
  CHECK(a.parse("2*e^3") == Scalar(2) * a.mul(a.mul(e, e), e));
  CHECK(a.parse("1") == a.one());
  CHECK(a.parse("1/2") == Scalar(1) / 2 * a.one());
  CHECK(a.parse("-e + 3/4*f - 2") == Scalar(-1) * e + Scalar(3) / 4 * f - Scalar(2) * a.one());
  CHECK(a.parse("(e + f)*e") == a.mul(e, e) + a.mul(f, e));
  CHECK(a.parse("2*e*f") == Scalar(2) * a.mul(e, f));
  CHECK(a.parse("e^2*f") == a.mul(a.power(0, 2), f));
  CHECK(a.parse("1*e") == e);
  CHECK(a.parse(" e  *  f ") == a.mul(e, f));
}

TEST_CASE("parse errors carry positions") {
  const FreeAlgebra a({"e", "f"}, 4);
  auto position = [&](const char* s) -> std::size_t {
    try {
      a.parse(s);
    } catch (const ParseError& err) {
      return err.position;
    }
    FAIL("no error for " << s);
    return 0;
  };
  CHECK(position("e*f*e") == 3);
  CHECK(position("g") == 0);
  CHECK(position("e + (f") == 6);
  CHECK(position("(e*f)^2") == 5);
  CHECK(position("e $ f") == 2);
  CHECK(position("") == 0);
  CHECK(position("2e") == 1);
  CHECK(position("1^2") == 1);
  CHECK_THROWS_WITH_AS(a.parse("e*f*e"), doctest::Contains("ambiguous"), ParseError);
  CHECK_THROWS_AS(a.parse("1/0"), ValidationError);
  CHECK_THROWS_AS(a.parse("e^9"), DegreeBudgetExceeded);
}

TEST_CASE("formatting") {
  const FreeAlgebra a({"e", "f"}, 4);
  CHECK(a.format(a.zero()) == "0");
  CHECK(a.format(a.parse("e*(f*e)")) == "e*(f*e)");
  CHECK(a.format(a.parse("(e*e)*e")) == "e^3");
  CHECK(a.format(a.parse("e*(e*e)")) == "e*e^2");
  CHECK(a.format(a.parse("3 - 1/2*f + (e*f)*f")) == "3 - 1/2*f + (e*f)*f");
  CHECK(format_terms({{Scalar(-1), "e"}, {Scalar(2), "1"}}) == "-e + 2");
}

TEST_CASE("parse and format round trip on a seeded corpus") {
  const FreeAlgebra a({"e", "f"}, 6);
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 1000) {
    const std::string text = random_expr(rng, 3);
    FreeElement x;
    try {
      x = a.parse(text);
    } catch (const DegreeBudgetExceeded&) {
      continue;
    }
    ++tested;
    const std::string shown = a.format(x);
    CHECK(a.parse(shown) == x);
    CHECK(a.format(a.parse(shown)) == shown);
  }
}
