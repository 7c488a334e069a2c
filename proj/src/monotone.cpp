#include "dbe/monotone.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbe {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Monotonicity classify_sequence(const std::vector<Rational>& ys) {
    bool inc = true, dec = true, strict_inc = true, strict_dec = true;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        if (ys[i] < ys[i - 1]) inc = strict_inc = false;
        if (ys[i] > ys[i - 1]) dec = strict_dec = false;
        if (ys[i] == ys[i - 1]) strict_inc = strict_dec = false;
    }
    if (strict_inc) return Monotonicity::StrictlyIncreasing;
    if (strict_dec) return Monotonicity::StrictlyDecreasing;
    if (inc) return Monotonicity::NonDecreasing;
    if (dec) return Monotonicity::NonIncreasing;
    return Monotonicity::PiecewiseMonotone;
}

Rational eval_linear(const fn::PiecewiseLinear& pl, const Rational& x) {
    const auto& xs = pl.xs;
    if (x <= xs.front()) return pl.ys.front();
    if (x >= xs.back()) return pl.ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const Rational t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return pl.ys[i - 1] + t * (pl.ys[i] - pl.ys[i - 1]);
}

Side flip(Side s) {
    switch (s) {
    case Side::FromLeft: return Side::FromRight;
    case Side::FromRight: return Side::FromLeft;
    default: return s;
    }
}

IntervalUnion monotone_image(const MonotoneFn& f, const IntervalUnion& u, bool increasing) {
    std::vector<Interval> out;
    out.reserve(u.size());
    for (const auto& c : u.components()) {
        if (c.lo == c.hi) {
            out.push_back(Interval::point(f(c.lo)));
            continue;
        }
        const Rational lo = f(c.lo, Side::FromRight);
        const Rational hi = f(c.hi, Side::FromLeft);
        if (increasing)
            out.push_back({lo, hi, c.lo_closed, c.hi_closed});
        else
            out.push_back({hi, lo, c.hi_closed, c.lo_closed});
    }
    return IntervalUnion(std::move(out));
}

IntervalUnion linear_image(const fn::PiecewiseLinear& pl, const IntervalUnion& u) {
    std::vector<Interval> out;
    for (const auto& c : u.components()) {
        std::vector<Rational> pts{c.lo};
        for (const auto& x : pl.xs)
            if (x > c.lo && x < c.hi) pts.push_back(x);
        pts.push_back(c.hi);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Rational a = eval_linear(pl, pts[i]);
            const Rational b = eval_linear(pl, pts[i + 1]);
            out.push_back(Interval::closed(min(a, b), max(a, b)));
        }
        if (pts.size() == 2 && c.lo == c.hi) out.push_back(Interval::point(eval_linear(pl, c.lo)));
    }
    return IntervalUnion(std::move(out));
}

} // namespace

bool is_strict(Monotonicity m) {
    return m == Monotonicity::StrictlyIncreasing || m == Monotonicity::StrictlyDecreasing;
}

bool is_increasing_kind(Monotonicity m) {
    return m == Monotonicity::StrictlyIncreasing || m == Monotonicity::NonDecreasing;
}

std::string to_string(Monotonicity m) {
    switch (m) {
    case Monotonicity::StrictlyIncreasing: return "strictly-increasing";
    case Monotonicity::StrictlyDecreasing: return "strictly-decreasing";
    case Monotonicity::NonDecreasing: return "non-decreasing";
    case Monotonicity::NonIncreasing: return "non-increasing";
    case Monotonicity::PiecewiseMonotone: return "piecewise-monotone";
    }
    return "unknown";
}

MonotoneFn::MonotoneFn() : MonotoneFn(fn::Affine{1, 0}) {}

MonotoneFn::MonotoneFn(fn::Descriptor d) : desc_(std::make_shared<const fn::Descriptor>(std::move(d))) {}

std::string MonotoneFn::kind() const {
    return std::visit(overloaded{
                          [](const fn::Cantor&) { return std::string("cantor"); },
                          [](const fn::RieszNagy&) { return std::string("riesz_nagy"); },
                          [](const fn::Affine&) { return std::string("affine"); },
                          [](const fn::PiecewiseLinear&) { return std::string("piecewise_linear"); },
                          [](const fn::IntervalStaircase&) { return std::string("interval_staircase"); },
                          [](const fn::WeightedSum&) { return std::string("weighted_sum"); },
                          [](const fn::Composition&) { return std::string("composition"); },
                          [](const fn::Restriction&) { return std::string("restriction"); },
                          [](const fn::Piecewise&) { return std::string("piecewise"); },
                      },
                      *desc_);
}

Monotonicity MonotoneFn::monotonicity() const {
    using M = Monotonicity;
    return std::visit(
        overloaded{
            [](const fn::Cantor&) { return M::NonDecreasing; },
            [](const fn::RieszNagy&) { return M::StrictlyIncreasing; },
            [](const fn::Affine& a) {
                const int s = a.slope.sign();
                return s > 0 ? M::StrictlyIncreasing : s < 0 ? M::StrictlyDecreasing : M::NonDecreasing;
            },
            [](const fn::PiecewiseLinear& pl) {
                M m = classify_sequence(pl.ys);
                // constant extension outside the breakpoints
                const bool covers = pl.xs.front() <= Rational(0) && pl.xs.back() >= Rational(1);
                if (!covers && m == M::StrictlyIncreasing) m = M::NonDecreasing;
                if (!covers && m == M::StrictlyDecreasing) m = M::NonIncreasing;
                return m;
            },
            [](const fn::IntervalStaircase&) { return M::NonDecreasing; },
            [](const fn::WeightedSum& ws) {
                bool inc = true, dec = true, strict = false;
                for (const auto& t : ws.terms) {
                    const M m = t.monotonicity();
                    inc = inc && is_increasing_kind(m);
                    dec = dec && (m == M::StrictlyDecreasing || m == M::NonIncreasing);
                    strict = strict || is_strict(m);
                }
                if (inc) return strict ? M::StrictlyIncreasing : M::NonDecreasing;
                if (dec) return strict ? M::StrictlyDecreasing : M::NonIncreasing;
                return M::PiecewiseMonotone;
            },
            [](const fn::Composition& c) {
                const M o = c.outer->monotonicity(), i = c.inner->monotonicity();
                if (o == M::PiecewiseMonotone || i == M::PiecewiseMonotone) return M::PiecewiseMonotone;
                const bool inc = is_increasing_kind(o) == is_increasing_kind(i);
                const bool strict = is_strict(o) && is_strict(i);
                if (inc) return strict ? M::StrictlyIncreasing : M::NonDecreasing;
                return strict ? M::StrictlyDecreasing : M::NonIncreasing;
            },
            [](const fn::Restriction& r) { return r.fn->monotonicity(); },
            [](const fn::Piecewise& p) {
                return p.pieces.size() == 1 ? p.pieces.front().second.monotonicity() : M::PiecewiseMonotone;
            },
        },
        *desc_);
}

Rational MonotoneFn::operator()(const Rational& x, Side side) const {
    return std::visit(
        overloaded{
            [&](const fn::Cantor&) { return eval_cantor(x); },
            [&](const fn::RieszNagy& r) { return eval_riesz_nagy(r.a, x); },
            [&](const fn::Affine& a) { return a.slope * x + a.offset; },
            [&](const fn::PiecewiseLinear& pl) { return eval_linear(pl, x); },
            [&](const fn::IntervalStaircase& s) { return eval_cantor(eval_linear(s.phi, x)); },
            [&](const fn::WeightedSum& ws) {
                Rational total;
                for (std::size_t i = 0; i < ws.terms.size(); ++i) total += ws.weights[i] * ws.terms[i](x, side);
                return total;
            },
            [&](const fn::Composition& c) {
                const Rational y = (*c.inner)(x, side);
                const Side s = is_increasing_kind(c.inner->monotonicity()) ? side : flip(side);
                return (*c.outer)(y, s);
            },
            [&](const fn::Restriction& r) {
                if (!r.domain.contains(x) && !(side != Side::Exact && r.domain.closure().contains(x)))
                    throw std::domain_error("restricted function evaluated outside its domain at " + x.str());
                return (*r.fn)(x, side);
            },
            [&](const fn::Piecewise& p) {
                for (const auto& [iv, f] : p.pieces) {
                    const bool hit = side == Side::FromLeft    ? (iv.lo < x && x <= iv.hi)
                                     : side == Side::FromRight ? (iv.lo <= x && x < iv.hi)
                                                               : iv.contains(x);
                    if (hit) return f(x, side);
                }
                for (const auto& [iv, f] : p.pieces)
                    if (iv.contains(x)) return f(x, side);
                throw std::domain_error("piecewise function has no piece at " + x.str());
            },
        },
        *desc_);
}

IntervalUnion MonotoneFn::image(const IntervalUnion& u) const {
    if (u.empty()) return {};
    return std::visit(
        overloaded{
            [&](const fn::PiecewiseLinear& pl) {
                if (monotonicity() == Monotonicity::PiecewiseMonotone) return linear_image(pl, u);
                return monotone_image(*this, u, is_increasing_kind(monotonicity()));
            },
            [&](const fn::Composition& c) { return c.outer->image(c.inner->image(u)); },
            [&](const fn::Restriction& r) { return r.fn->image(u & r.domain); },
            [&](const fn::Piecewise& p) {
                IntervalUnion out;
                for (const auto& [iv, f] : p.pieces) out = out | f.image(u & IntervalUnion{iv});
                return out;
            },
            [&](const auto&) {
                const Monotonicity m = monotonicity();
                if (m == Monotonicity::PiecewiseMonotone)
                    throw NotEvaluable("image of a " + kind() + " that is not monotone");
                return monotone_image(*this, u, is_increasing_kind(m));
            },
        },
        *desc_);
}

MonotoneFn cantor() { return MonotoneFn(fn::Cantor{}); }

MonotoneFn riesz_nagy(const Rational& a) {
    if (a.sign() <= 0 || a >= Rational(1)) throw std::domain_error("riesz_nagy: need 0 < a < 1, got " + a.str());
    return MonotoneFn(fn::RieszNagy{a});
}

MonotoneFn affine(const Rational& slope, const Rational& offset) { return MonotoneFn(fn::Affine{slope, offset}); }

MonotoneFn identity() { return affine(1, 0); }

MonotoneFn piecewise_linear(std::vector<Rational> xs, std::vector<Rational> ys) {
    if (xs.size() < 2 || xs.size() != ys.size())
        throw std::invalid_argument("piecewise_linear: need at least two breakpoints and matching values");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] < xs[i])) throw std::invalid_argument("piecewise_linear: breakpoints must increase strictly");
    return MonotoneFn(fn::PiecewiseLinear{std::move(xs), std::move(ys)});
}

MonotoneFn weighted_sum(std::vector<MonotoneFn> terms, std::vector<Rational> weights) {
    if (terms.empty() || terms.size() != weights.size())
        throw std::invalid_argument("weighted_sum: terms and weights must be nonempty and of equal length");
    Rational total;
    for (const auto& w : weights) {
        if (w.sign() <= 0) throw std::invalid_argument("weighted_sum: weights must be positive");
        total += w;
    }
    if (total > Rational(1)) throw std::invalid_argument("weighted_sum: weights sum to " + total.str() + " > 1");
    return MonotoneFn(fn::WeightedSum{std::move(terms), std::move(weights)});
}

MonotoneFn compose(const MonotoneFn& outer, const MonotoneFn& inner) {
    return MonotoneFn(
        fn::Composition{std::make_shared<const MonotoneFn>(outer), std::make_shared<const MonotoneFn>(inner)});
}

MonotoneFn restrict_to(const MonotoneFn& f, IntervalUnion domain) {
    return MonotoneFn(fn::Restriction{std::make_shared<const MonotoneFn>(f), std::move(domain)});
}

MonotoneFn piecewise(std::vector<std::pair<Interval, MonotoneFn>> pieces) {
    if (pieces.empty()) throw std::invalid_argument("piecewise: no pieces");
    std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].first.empty()) throw std::invalid_argument("piecewise: empty piece");
        if (i > 0 && IntervalUnion{pieces[i - 1].first}.intersects(IntervalUnion{pieces[i].first}))
            throw std::invalid_argument("piecewise: overlapping pieces");
    }
    return MonotoneFn(fn::Piecewise{std::move(pieces)});
}

Rational image_measure(const MonotoneFn& f, const IntervalUnion& u) { return f.image(u).measure(); }

} // namespace dbe
