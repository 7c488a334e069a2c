#pragma once

// Finite-depth construction of functions that carry a null set onto a set of
// full measure: a nested binary tree of intervals J_s inside I, the staircase
// c ∘ Φ that sends the level-d leaves onto the level-d Cantor cover, and the
// weighted sum of such staircases over an enumeration of rational intervals.

#include "dbe/interval.hpp"
#include "dbe/monotone.hpp"

#include <stdexcept>
#include <vector>

namespace dbe {

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// levels[k] holds the 2^k nodes J_s, s in {0,1}^k, in left-to-right order
/// (node i at level k has children 2i and 2i+1 at level k+1).
struct NestedIntervalTree {
    Interval root;
    IntervalUnion excluded;
    std::vector<std::vector<Interval>> levels;

    std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
    const std::vector<Interval>& leaves() const { return levels.back(); }
};

/// Largest admissible node length at level k: 1 / ((k + 1) 2^k).
Rational level_length_bound(std::size_t k);

/// Checks nesting, strict left/right separation of siblings, the per-level
/// length bound and avoidance of the excluded set below the root. Returns an
/// empty string when all hold, otherwise a description of the first failure.
std::string check_tree_conditions(const NestedIntervalTree& tree);

struct StaircaseResult {
    NestedIntervalTree tree;
    IntervalUnion null_set; ///< union of the leaves, λ <= 1/(d+1)
    MonotoneFn staircase;   ///< c ∘ Φ on [0,1]: 0 left of I, 1 right of I
};

/// Builds the depth-d tree inside I avoiding `excluded`. Children of a node
/// are the leftmost and rightmost aligned dyadic cells of the node's free
/// part, at the coarsest dyadic width allowed by the level bound that keeps
/// them strictly separated.
StaircaseResult build_interval_staircase(const Interval& I, const IntervalUnion& excluded, std::size_t depth);

/// The piecewise linear Φ for a finished tree: a -> 0, leaf J_s -> Cantor
/// interval C_s, b -> 1, linear in between.
MonotoneFn staircase_from_tree(const NestedIntervalTree& tree);

/// Closed intervals [p, q] with rational 0 <= p < q <= 1 ordered by the
/// largest denominator b = 1, 2, 3, ... and then lexicographically.
class RationalIntervalEnumeration {
public:
    Interval next();

private:
    void fill();
    unsigned bound_ = 0;
    std::vector<Interval> batch_;
    std::size_t pos_ = 0;
};

struct MapperResult {
    MonotoneFn f;                             ///< strictly increasing, f(0)=0, f(1)=1
    IntervalUnion null_set;                   ///< union of the N_{I_m}
    std::vector<StaircaseResult> staircases;  ///< per used interval
    std::vector<Interval> intervals;          ///< the I_m actually used
    std::size_t terms = 0;                    ///< M
    Rational image_lower_bound;               ///< 1 - 2^-M
};

struct MapperOptions {
    std::size_t staircase_depth = 3;
    /// Enumerated intervals tried before giving up.
    std::size_t max_candidates = 4096;
};

/// f = sum_{m<M} 2^-(m+1) g_m + 2^-M id. Intervals whose staircase cannot be
/// placed outside `excluded` and the earlier null sets are skipped.
MapperResult build_full_measure_mapper(const IntervalUnion& excluded, std::size_t M, const MapperOptions& opts = {});

/// Exact λ(f(N_trunc)).
Rational mapper_image_measure(const MapperResult& r);

} // namespace dbe
