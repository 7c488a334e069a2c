#pragma once

// Symbolic monotone functions on [0,1] with exact evaluation at rational
// points and exact image sets of interval unions.

#include "dbe/interval.hpp"
#include "dbe/singular.hpp"

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dbe {

struct NestedIntervalTree;

enum class Monotonicity {
    StrictlyIncreasing,
    StrictlyDecreasing,
    NonDecreasing,
    NonIncreasing,
    PiecewiseMonotone, ///< monotone on each declared piece only
};

bool is_strict(Monotonicity m);
bool is_increasing_kind(Monotonicity m);
std::string to_string(Monotonicity m);

/// Which value to take at a point where a piecewise descriptor may jump.
enum class Side { Exact, FromLeft, FromRight };

class MonotoneFn;

namespace fn {

struct Cantor {};
struct RieszNagy {
    Rational a;
};
struct Affine {
    Rational slope;
    Rational offset;
};
/// Continuous piecewise linear interpolation of (xs[i], ys[i]); constant
/// outside [xs.front(), xs.back()].
struct PiecewiseLinear {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
};
/// c ∘ Φ for a nested interval tree, extended by 0 left and 1 right of the
/// root interval.
struct IntervalStaircase {
    std::shared_ptr<const NestedIntervalTree> tree;
    PiecewiseLinear phi;
};
struct WeightedSum {
    std::vector<MonotoneFn> terms;
    std::vector<Rational> weights;
};
struct Composition {
    std::shared_ptr<const MonotoneFn> outer;
    std::shared_ptr<const MonotoneFn> inner;
};
struct Restriction {
    std::shared_ptr<const MonotoneFn> fn;
    IntervalUnion domain;
};
/// Disjoint pieces; the function is monotone on each piece.
struct Piecewise {
    std::vector<std::pair<Interval, MonotoneFn>> pieces;
};

using Descriptor = std::variant<Cantor, RieszNagy, Affine, PiecewiseLinear, IntervalStaircase, WeightedSum,
                                Composition, Restriction, Piecewise>;

} // namespace fn

/// Immutable handle to a function descriptor. Copies share the descriptor.
class MonotoneFn {
public:
    MonotoneFn();
    explicit MonotoneFn(fn::Descriptor d);

    const fn::Descriptor& descriptor() const { return *desc_; }
    std::string kind() const;
    Monotonicity monotonicity() const;
    bool is_strictly_monotone() const { return is_strict(monotonicity()); }

    Rational operator()(const Rational& x, Side side = Side::Exact) const;

    /// Exact image of u. Images of components are [f(lo), f(hi)] (swapped for
    /// decreasing functions) with the component's closedness, which is exact
    /// for strictly monotone functions and exact up to endpoints otherwise.
    IntervalUnion image(const IntervalUnion& u) const;

private:
    std::shared_ptr<const fn::Descriptor> desc_;
};

MonotoneFn cantor();
MonotoneFn riesz_nagy(const Rational& a);
MonotoneFn affine(const Rational& slope, const Rational& offset);
MonotoneFn identity();
MonotoneFn piecewise_linear(std::vector<Rational> xs, std::vector<Rational> ys);
MonotoneFn weighted_sum(std::vector<MonotoneFn> terms, std::vector<Rational> weights);
MonotoneFn compose(const MonotoneFn& outer, const MonotoneFn& inner);
MonotoneFn restrict_to(const MonotoneFn& f, IntervalUnion domain);
MonotoneFn piecewise(std::vector<std::pair<Interval, MonotoneFn>> pieces);

/// λ(f(u)), exact. Throws NotEvaluable when an endpoint cannot be evaluated.
Rational image_measure(const MonotoneFn& f, const IntervalUnion& u);

} // namespace dbe
