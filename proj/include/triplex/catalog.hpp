#pragma once

// Built-in systems used by the tests and the bundled data files.

#include <cstddef>

#include "triplex/lts.hpp"

namespace triplex::catalog {

// span<e,f> with [e,f,e] = 2e, [e,f,f] = -2f.
TripleSystem s2();
TripleSystem abelian(std::size_t d);
TripleSystem direct_sum(const TripleSystem& a, const TripleSystem& b);

// Basis (h, e, f).
LieAlgebra sl2();
// Basis (h1, h2, e12, e13, e23, e21, e31, e32) with h1 = E11-E22, h2 = E22-E33.
LieAlgebra sl3();

// Conjugation by diag(1,-1) on sl(2).
Matrix sl2_diagonal_involution();
// x -> -x^T on sl(3).
Matrix sl3_transpose_involution();

TripleSystem sl2_lts();
// Symmetric traceless 3x3 matrices.
TripleSystem sl3_symmetric_lts();

}  // namespace triplex::catalog
