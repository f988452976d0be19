#include <doctest.h>

#include "naive_quotient.hpp"
#include "triplex/catalog.hpp"

using namespace triplex;

TEST_CASE("naive quotient agrees with the library on degree 3") {
  naive::Naive n;
  n.eliminate();
  CHECK(n.trees.size() == 23);
  std::vector<int> quotient(4, 0), total(4, 0);
  for (std::size_t i = 0; i < n.trees.size(); ++i) ++total[n.deg[i]];
  for (std::size_t r = 0; r < n.rel.size(); ++r) --quotient[n.deg[n.pivot[r]]];
  for (int d = 0; d <= 3; ++d) CHECK(total[d] + quotient[d] == d + 1);
  CHECK(std::count(n.deg.begin(), n.deg.end(), 3) == 16);

  const EnvelopingAlgebra u = EnvelopingAlgebra::build(catalog::s2(), 3);
  const std::vector<std::string> bad = naive::mismatches(u, n);
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad[0]));
}

TEST_CASE("the naive quotient notices a wrong normal form") {
  naive::Naive n;
  n.eliminate();
  // Built on the flipped sign system the library answers differently.
  const TripleSystem t = TripleSystem::create("s2-neg", {"e", "f"},
                                              {{{0, 1, 0}, SparseVector::from_dense(Vec{-2, 0})},
                                               {{1, 0, 0}, SparseVector::from_dense(Vec{2, 0})},
                                               {{0, 1, 1}, SparseVector::from_dense(Vec{0, 2})},
                                               {{1, 0, 1}, SparseVector::from_dense(Vec{0, -2})}});
  const EnvelopingAlgebra u = EnvelopingAlgebra::build(t, 3);
  CHECK_FALSE(naive::mismatches(u, n).empty());
}
