#pragma once

// Slow reference implementations used to cross-check the estimators. Nothing
// here calls into the estimator, partition or singular-function code.

#include "dbe/interval.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace dbe::oracle {

/// Exact values at x = k base^-m, k = 0 .. base^m.
struct RasterFn {
    unsigned base = 2;
    unsigned m = 0;
    std::vector<Rational> values;

    Rational x(std::size_t k) const;
    std::size_t cells() const { return values.size() - 1; }
};

/// Cantor function on the ternary grid, built by self-similarity.
RasterFn cantor_raster(unsigned m);
/// Riesz-Nagy function on the dyadic grid, built by midpoint subdivision.
RasterFn riesz_nagy_raster(const Rational& a, unsigned m);
RasterFn raster_from(const std::function<Rational(const Rational&)>& f, unsigned base, unsigned m);
/// The identity on the dyadic grid.
RasterFn identity_raster(unsigned m);

/// Bracket for λ(f(u)) from grid values: lower is the measure of the union
/// of the sampled ranges per component, upper the summed absolute increments.
/// Endpoints of u must lie on the grid.
std::pair<Rational, Rational> raster_image_measure(const RasterFn& r, const IntervalUnion& u);

/// Chord sum of the graph x -> (x, r_1(x), ..., r_k(x)) in 256-bit floating
/// point, returned exactly as the rational value of the float result.
Rational naive_polyline(const std::vector<RasterFn>& rasters);
/// Rounding error bound of naive_polyline.
Rational naive_polyline_radius();

/// Greedy left-to-right cover sum: blocks start at the leftmost uncovered
/// point and span delta.
Rational brute_cover_sum(std::vector<Rational> points, const Rational& delta);
Rational brute_cover_sum(const IntervalUnion& u, const Rational& delta);

} // namespace dbe::oracle
