#pragma once

#include <vector>

#include "qloop/rational.hpp"
#include "qloop/sparse_matrix.hpp"

namespace qloop {

/// Exact rank by fraction-free (Bareiss) elimination over the integers after
/// clearing row denominators. No floating point anywhere.
int exact_rank(const SparseMat<Rational>& m);
int exact_rank_dense(std::vector<std::vector<BigInt>> a);

/// Columns spanning the kernel of m (cols x nullity), by exact reduced row
/// echelon form.
SparseMat<Rational> nullspace_basis(const SparseMat<Rational>& m);

/// Stacks matrices vertically (all must share the column count).
SparseMat<Rational> vstack(const std::vector<SparseMat<Rational>>& mats);

} // namespace qloop
