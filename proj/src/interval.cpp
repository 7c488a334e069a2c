#include "dbe/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbe {

namespace {

// a ∩ (-inf, x] (include = true) or a ∩ (-inf, x)
Interval clip_above(Interval a, const Rational& x, bool include) {
    if (x < a.hi) {
        a.hi = x;
        a.hi_closed = include;
    } else if (x == a.hi) {
        a.hi_closed = a.hi_closed && include;
    }
    return a;
}

// a ∩ [x, +inf) (include = true) or a ∩ (x, +inf)
Interval clip_below(Interval a, const Rational& x, bool include) {
    if (x > a.lo) {
        a.lo = x;
        a.lo_closed = include;
    } else if (x == a.lo) {
        a.lo_closed = a.lo_closed && include;
    }
    return a;
}

Interval intersect(const Interval& a, const Interval& b) {
    return clip_below(clip_above(a, b.hi, b.hi_closed), b.lo, b.lo_closed);
}

// b starts no earlier than a; true when a ∪ b is a single interval.
bool touches(const Interval& a, const Interval& b) {
    return b.lo < a.hi || (b.lo == a.hi && (a.hi_closed || b.lo_closed));
}

std::vector<Interval> normalize(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& iv) { return iv.empty(); });
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> out;
    for (auto& iv : parts) {
        if (!out.empty() && touches(out.back(), iv)) {
            Interval& cur = out.back();
            if (iv.hi > cur.hi) {
                cur.hi = iv.hi;
                cur.hi_closed = iv.hi_closed;
            } else if (iv.hi == cur.hi) {
                cur.hi_closed = cur.hi_closed || iv.hi_closed;
            }
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

} // namespace

bool Interval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::string to_string(const Interval& iv) {
    return std::string(iv.lo_closed ? "[" : "(") + iv.lo.str() + ", " + iv.hi.str() + (iv.hi_closed ? "]" : ")");
}

IntervalUnion::IntervalUnion(std::initializer_list<Interval> parts)
    : parts_(normalize(std::vector<Interval>(parts))) {}

IntervalUnion::IntervalUnion(std::vector<Interval> parts) : parts_(normalize(std::move(parts))) {}

Rational IntervalUnion::measure() const {
    Rational total;
    for (const auto& iv : parts_) total += iv.hi - iv.lo;
    return total;
}

const Rational& IntervalUnion::inf() const {
    if (parts_.empty()) throw std::domain_error("inf of empty set");
    return parts_.front().lo;
}

const Rational& IntervalUnion::sup() const {
    if (parts_.empty()) throw std::domain_error("sup of empty set");
    return parts_.back().hi;
}

bool IntervalUnion::contains(const Rational& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const Interval& iv) { return v < iv.lo; });
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(x);
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
    return set_op(other, *this, SetOp::Subtract).empty();
}

bool IntervalUnion::intersects(const IntervalUnion& other) const {
    return !set_op(*this, other, SetOp::Intersect).empty();
}

IntervalUnion IntervalUnion::closure() const {
    std::vector<Interval> parts = parts_;
    for (auto& iv : parts) iv.lo_closed = iv.hi_closed = true;
    return IntervalUnion(std::move(parts));
}

IntervalUnion set_op(const IntervalUnion& a, const IntervalUnion& b, SetOp kind) {
    switch (kind) {
    case SetOp::Union: {
        std::vector<Interval> parts = a.components();
        parts.insert(parts.end(), b.components().begin(), b.components().end());
        return IntervalUnion(std::move(parts));
    }
    case SetOp::Intersect: {
        std::vector<Interval> parts;
        for (const auto& x : a.components())
            for (const auto& y : b.components()) {
                if (y.lo > x.hi) break;
                Interval z = intersect(x, y);
                if (!z.empty()) parts.push_back(std::move(z));
            }
        return IntervalUnion(std::move(parts));
    }
    case SetOp::Subtract: {
        std::vector<Interval> pieces = a.components();
        for (const auto& cut : b.components()) {
            std::vector<Interval> next;
            for (const auto& p : pieces) {
                Interval left = clip_above(p, cut.lo, !cut.lo_closed);
                Interval right = clip_below(p, cut.hi, !cut.hi_closed);
                if (!left.empty()) next.push_back(std::move(left));
                if (!right.empty()) next.push_back(std::move(right));
            }
            pieces = std::move(next);
        }
        return IntervalUnion(std::move(pieces));
    }
    }
    throw std::logic_error("unknown set operation");
}

std::string to_string(const IntervalUnion& u) {
    if (u.empty()) return "{}";
    std::string out;
    for (const auto& iv : u.components()) {
        if (!out.empty()) out += " u ";
        out += to_string(iv);
    }
    return out;
}

} // namespace dbe
