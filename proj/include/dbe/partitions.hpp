#pragma once

// Left-right ordered partitions of subsets of the line and their diameter
// sums, the finite counterpart of H^1_delta.

#include "dbe/interval.hpp"

#include <vector>

namespace dbe {

/// Blocks need not be convex. A partition is left-right ordered when every
/// pair of distinct blocks F1, F2 has sup F1 <= inf F2 or inf F1 >= sup F2.
struct LRPartition {
    std::vector<IntervalUnion> blocks;

    /// Union of all blocks.
    IntervalUnion domain() const;

    friend bool operator==(const LRPartition&, const LRPartition&) = default;
};

struct CoverSum {
    Rational value;      ///< sum of block diameters
    Rational delta;      ///< largest block diameter
    std::size_t block_count = 0;
};

bool is_left_right_ordered(const LRPartition& p);

/// Blocks nonempty and pairwise disjoint.
bool is_partition(const LRPartition& p);

Rational diam_sum(const LRPartition& p);
CoverSum cover_sum(const LRPartition& p);

/// Common refinement {V_i ∩ W_j}, empty intersections dropped, blocks sorted
/// by infimum. Both inputs must be left-right ordered partitions of the same
/// set (std::invalid_argument otherwise). The diameter-sum inequality against
/// both inputs is checked exactly on every call; a violation throws
/// std::logic_error.
LRPartition refine(const LRPartition& p, const LRPartition& q);

/// Left-to-right greedy partition of u into blocks u ∩ [t, t + delta].
LRPartition greedy_partition(const IntervalUnion& u, const Rational& delta);

} // namespace dbe
