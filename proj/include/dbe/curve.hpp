#pragma once

// Curves {(x, f_1(x), ..., f_{n-2}(x), alpha) : x in [0,1]} and the check that
// every two of their points agree in exactly one coordinate.

#include "dbe/monotone.hpp"
#include "dbe/partitions.hpp"
#include "dbe/staircase.hpp"

#include <optional>
#include <vector>

namespace dbe {

using Point = std::vector<Rational>;

struct CurveSpec {
    std::size_t n = 3;
    std::vector<MonotoneFn> components; ///< f_1 .. f_{n-2}
    Rational alpha{1, 2};
    /// Pieces S_j on which every component is monotone; absent means [0,1].
    std::optional<LRPartition> piece_domains;

    /// Throws std::invalid_argument when the shape is inconsistent.
    void validate() const;
    /// (x, f_1(x), ..., f_{n-2}(x), alpha)
    Point at(const Rational& x) const;
    /// The declared pieces, or the single piece [0,1].
    LRPartition pieces() const;
};

/// Preimage h^-1(N) bracketed by unions of dyadic cells: h(inner) ⊂ N and
/// N ∩ [0,1] ⊂ h(outer), both at the stated cell depth.
struct PreimageBracket {
    IntervalUnion inner;
    IntervalUnion outer;
    unsigned cell_depth = 0;
};

struct Theorem3Curve {
    CurveSpec base;
    MonotoneFn h;                      ///< Riesz-Nagy R_a
    std::vector<MapperResult> mappers; ///< f_1 .. f_{n-3}
    std::vector<PreimageBracket> W;    ///< W_j = h^-1(N_j)
    IntervalUnion Q1;                  ///< [0,1] minus the outer W_j
};

struct Theorem3Options {
    MapperOptions mapper{};
    /// Dyadic depth of the W_j brackets.
    unsigned preimage_depth = 10;
};

/// n = 3 gives (x, h(x), alpha); n >= 4 composes n-3 full-measure mappers
/// with h, each built outside the null sets of the ones before it.
Theorem3Curve build_theorem3_curve(std::size_t n, const Rational& a, std::size_t M, const Rational& alpha,
                                   const Theorem3Options& opts = {});

/// 2^d + 1 points at x = k 2^-d.
std::vector<Point> sample(const CurveSpec& curve, unsigned depth);

struct DbeViolation {
    std::size_t i = 0, j = 0;  ///< indices into the checked point list
    std::size_t matches = 0;   ///< number of equal coordinates
};

struct DbeReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::vector<DbeViolation> violations;
};

/// Every unordered pair must agree in exactly one coordinate. Duplicate
/// points or ragged dimensions throw std::invalid_argument.
DbeReport check_dbe_property(const std::vector<Point>& points);

/// True when all points share one fixed coordinate (the shape every
/// 2-dimensional dBE set is forced into).
bool lies_on_axis_line(const std::vector<Point>& points);

/// Coordinate i (1-based) of each point.
std::vector<Rational> project(const std::vector<Point>& points, std::size_t i);

/// Image of `domain` under the i-th coordinate map (1-based): identity for
/// i = 1, the constant alpha for i = n, the component f_{i-1} otherwise.
IntervalUnion projection_image(const CurveSpec& curve, std::size_t i, const IntervalUnion& domain);

/// Cells of [0,1] at the given dyadic depth whose h-image lies inside
/// (inner) or meets (outer) the set N.
PreimageBracket preimage_bracket(const MonotoneFn& h, const IntervalUnion& N, unsigned depth);

} // namespace dbe
