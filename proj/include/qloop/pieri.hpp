#pragma once

#include <vector>

#include "qloop/subset.hpp"

namespace qloop {

/// Subsets C with |C| = |A| whose diagram extends lambda^A by r boxes, no two
/// in any one row (a vertical strip), inside the |A| x (n-|A|) frame.
/// Multiplication by e_r moves along these sets.
std::vector<Subset> pieri_e(const Subset& A, int r);

/// Same with no two boxes in any one column (a horizontal strip); the h_r
/// moves.
std::vector<Subset> pieri_h(const Subset& A, int r);

/// Largest r with pieri_e(A, r) nonempty is bounded by the number of rows;
/// for pieri_h by the number of columns of the frame.
inline int max_vertical_strip(const Subset& A) { return A.size(); }
inline int max_horizontal_strip(const Subset& A) { return A.n() - A.size(); }

/// Partitions obtained from lam by adding a vertical (resp. horizontal)
/// strip of r boxes, with parts capped at maxPart and the stored number of
/// rows. Used both by the subset-level moves and by the classical
/// (unbounded-frame) Pieri rule in tests via a large maxPart.
std::vector<Partition> add_vertical_strips(const Partition& lam, int r, int maxPart);
std::vector<Partition> add_horizontal_strips(const Partition& lam, int r, int maxPart);

} // namespace qloop
