#pragma once

// Two-sided bounds on the 1-dimensional Hausdorff measure of curves, box
// counting, and exact checkers for the measure inequalities behind them.

#include "dbe/curve.hpp"
#include "dbe/monotone.hpp"
#include "dbe/partitions.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dbe {

/// A real number known to lie in [lo, hi]; both ends exact.
struct Enclosure {
    Rational lo;
    Rational hi;

    Rational value() const { return (lo + hi) / 2; }
    Rational radius() const { return (hi - lo) / 2; }
};

struct H1Certificate {
    Rational upper;
    Enclosure lower;
    unsigned lower_depth = 0;
    unsigned precision_bits = 0;
    std::string upper_method;
    std::string lower_method;

    /// lower.value - lower.radius <= upper
    bool consistent() const { return lower.lo <= upper; }
};

constexpr unsigned kDefaultPrecisionBits = 64;

/// sum_j ( λ(S_j) + sum_k λ(f_k(S_j)) ) over the curve's monotone pieces.
Rational upper_bound_h1(const CurveSpec& curve);

/// Length of the inscribed polyline through the points x = k base^-depth.
/// Each chord is enclosed with 2^-precision_bits resolution, so
/// hi - lo <= cells * 2^-precision_bits.
Enclosure polyline_length(const std::vector<MonotoneFn>& components, unsigned depth,
                          unsigned precision_bits = kDefaultPrecisionBits, unsigned base = 2);

/// Dispatches to the collapsed Riesz-Nagy sum for (x, R_a(x), alpha) curves
/// and to the chord sum otherwise.
Enclosure polyline_length(const CurveSpec& curve, unsigned depth, unsigned precision_bits = kDefaultPrecisionBits);

/// Polyline length of the graph of R_a at depth d in O(d) terms:
/// sum_k C(d,k) sqrt(4^-d + (a^(d-k) (1-a)^k)^2).
Enclosure riesz_nagy_polyline_collapsed(const Rational& a, unsigned depth,
                                        unsigned precision_bits = kDefaultPrecisionBits);

H1Certificate certify(const CurveSpec& curve, unsigned depth, unsigned precision_bits = kDefaultPrecisionBits);

/// Non-certifying split of the depth-d grid cells into flat cells
/// (|Δf_1| <= θ Δx), measured by their x-extent, and steep cells, measured by
/// their f_1-extent.
struct ThetaDecomposition {
    Rational flat_x_measure;
    Rational steep_y_measure;
    std::size_t flat_cells = 0;
    std::size_t steep_cells = 0;
};
ThetaDecomposition theta_decomposition(const CurveSpec& curve, unsigned depth, const Rational& theta = pow2_neg(8));

struct BoxCount {
    unsigned m = 0;
    Rational delta; ///< 2^-m
    std::size_t count = 0;
};

struct BoxCountSeries {
    std::vector<BoxCount> rows;
    double slope_estimate = 0; ///< least-squares slope of log2 count against m
};

std::size_t box_count(const std::vector<Point>& points, unsigned m);
BoxCountSeries box_count_series(const std::vector<Point>& points, unsigned m_lo, unsigned m_hi);
/// Samples at depth m_hi + extra_depth once and counts every m in range.
BoxCountSeries box_count_series(const CurveSpec& curve, unsigned m_lo, unsigned m_hi, unsigned extra_depth = 2);

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

class LipschitzViolation : public std::runtime_error {
public:
    LipschitzViolation(Rational x, Rational y, const std::string& what)
        : std::runtime_error(what), x_(std::move(x)), y_(std::move(y)) {}
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

private:
    Rational x_, y_;
};

/// Verifies |f(x) - f(y)| <= c |x - y| on consecutive points of F sampled at
/// dyadic depth `sample_depth` (plus the endpoints of F), throwing
/// LipschitzViolation with the witness pair otherwise, then returns whether
/// λ(f(F)) <= c λ(F).
bool check_lipschitz_image(const MonotoneFn& f, const Rational& c, const IntervalUnion& F, unsigned sample_depth = 8);

struct SumLemmaReport {
    bool ok = false;
    Rational cover_sum_2delta;  ///< sum over the pulled-back refinement of diam((f1+f2)(F))
    Rational cover_sum_f1;      ///< greedy delta-fine partition of f1(D)
    Rational cover_sum_f2;      ///< greedy delta-fine partition of f2(D)
    std::size_t refinement_blocks = 0;
    unsigned cell_depth = 0;
};

/// Builds delta-fine left-right ordered partitions of f1(D) and f2(D) from a
/// subdivision of D, pulls them back, and compares the 2 delta cover sum of
/// (f1 + f2)(D) against the two delta cover sums, exactly.
SumLemmaReport check_sum_lemma(const MonotoneFn& f1, const MonotoneFn& f2, const IntervalUnion& D,
                               const Rational& delta, unsigned min_cell_depth = 2);

struct DerivativeBoundReport {
    bool ok = false;
    Rational image_measure;
    Rational integral; ///< sum over pieces of |slope| λ(E ∩ piece)
};

/// For a piecewise linear f: λ(f(E)) <= ∫_E |f'|, exact.
DerivativeBoundReport check_derivative_bound(const MonotoneFn& f, const IntervalUnion& E);

/// Randomized lemma suites; each returns the number of violating trials.
struct LemmaSuiteResult {
    std::size_t trials = 0;
    std::size_t violations = 0;
};
LemmaSuiteResult run_partition_suite(std::mt19937_64& rng, std::size_t trials);
LemmaSuiteResult run_sum_lemma_suite(std::mt19937_64& rng, std::size_t trials);
LemmaSuiteResult run_lipschitz_suite(std::mt19937_64& rng, std::size_t trials);
LemmaSuiteResult run_derivative_suite(std::mt19937_64& rng, std::size_t trials);

/// Random generators shared by the suites and the tests.
namespace gen {
Rational unit_rational(std::mt19937_64& rng, long max_den = 64);
IntervalUnion interval_union(std::mt19937_64& rng, std::size_t max_parts = 4, long max_den = 64);
/// Two left-right ordered partitions of the same random set.
std::pair<LRPartition, LRPartition> partition_pair(std::mt19937_64& rng);
/// Strictly increasing continuous piecewise linear map of [0,1] onto [0,1].
MonotoneFn increasing_piecewise_linear(std::mt19937_64& rng, std::size_t max_pieces = 5);
/// Continuous piecewise linear map with arbitrary (possibly zero) slopes.
MonotoneFn piecewise_linear_any(std::mt19937_64& rng, std::size_t max_pieces = 5);
} // namespace gen

} // namespace dbe
