#pragma once

#include "dbe/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace dbe {

/// A real interval with rational endpoints and independent closedness flags.
/// lo == hi with both ends closed is a single point; with either end open it
/// is empty.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
    static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
    static Interval closed_open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, false}; }
    static Interval open_closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, true}; }
    static Interval point(const Rational& x) { return {x, x, true, true}; }

    bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    Rational length() const { return empty() ? Rational(0) : hi - lo; }
    bool contains(const Rational& x) const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

enum class SetOp { Union, Intersect, Subtract };

/// Finite union of pairwise disjoint intervals, sorted ascending, with no two
/// components that could be merged into one. Every constructor normalizes.
class IntervalUnion {
public:
    IntervalUnion() = default;
    IntervalUnion(std::initializer_list<Interval> parts);
    explicit IntervalUnion(std::vector<Interval> parts);
    static IntervalUnion unit() { return IntervalUnion{Interval::closed(0, 1)}; }

    const std::vector<Interval>& components() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    /// Exact Lebesgue measure.
    Rational measure() const;

    /// inf and sup of the set; both require a nonempty union.
    const Rational& inf() const;
    const Rational& sup() const;
    Rational diameter() const { return empty() ? Rational(0) : sup() - inf(); }

    bool contains(const Rational& x) const;
    bool contains(const IntervalUnion& other) const;
    bool intersects(const IntervalUnion& other) const;

    /// Closure of the set: every component with both endpoints closed.
    IntervalUnion closure() const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    std::vector<Interval> parts_;
};

IntervalUnion set_op(const IntervalUnion& a, const IntervalUnion& b, SetOp kind);

inline IntervalUnion operator|(const IntervalUnion& a, const IntervalUnion& b) { return set_op(a, b, SetOp::Union); }
inline IntervalUnion operator&(const IntervalUnion& a, const IntervalUnion& b) { return set_op(a, b, SetOp::Intersect); }
inline IntervalUnion operator-(const IntervalUnion& a, const IntervalUnion& b) { return set_op(a, b, SetOp::Subtract); }

inline Rational measure(const IntervalUnion& u) { return u.measure(); }

std::string to_string(const IntervalUnion& u);

} // namespace dbe
