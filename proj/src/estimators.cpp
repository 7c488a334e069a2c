#include "dbe/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dbe {

namespace {

BigInt pow_int(unsigned base, unsigned e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

// floor(sqrt(q) * 2^bits) and whether it is exact.
std::pair<BigInt, bool> fixed_sqrt(const Rational& q, unsigned bits) {
    const BigInt scaled_num = q.numerator() << (2 * bits);
    BigInt n;
    mpz_fdiv_q(n.get_mpz_t(), scaled_num.get_mpz_t(), q.denominator().get_mpz_t());
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    const bool exact = (s * s == n) && Rational(scaled_num, q.denominator()).is_integer();
    return {s, exact};
}

struct FixedSum {
    BigInt lo = 0;
    BigInt slack = 0;

    void add(const Rational& squared) {
        // caller passes the exact square of a nonnegative quantity
        auto [s, exact] = fixed_sqrt(squared, bits);
        lo += s;
        if (!exact) slack += 1;
    }
    Enclosure finish() const {
        const BigInt den = BigInt(1) << bits;
        return {Rational(lo, den), Rational(lo + slack, den)};
    }
    unsigned bits = kDefaultPrecisionBits;
};

bool is_plain_riesz_nagy_graph(const CurveSpec& curve) {
    return curve.n == 3 && curve.components.size() == 1 &&
           std::holds_alternative<fn::RieszNagy>(curve.components.front().descriptor());
}

struct Cell {
    Interval iv;
    Rational f1_lo, f1_hi, f2_lo, f2_hi;
};

std::vector<Cell> subdivide(const MonotoneFn& f1, const MonotoneFn& f2, const IntervalUnion& D, unsigned depth) {
    std::vector<Cell> cells;
    const long parts = 1L << depth;
    for (const auto& c : D.components()) {
        if (c.lo == c.hi) {
            const Rational v1 = f1(c.lo), v2 = f2(c.lo);
            cells.push_back({c, v1, v1, v2, v2});
            continue;
        }
        const Rational step = (c.hi - c.lo) / Rational(parts);
        for (long i = 0; i < parts; ++i) {
            const Rational lo = c.lo + Rational(i) * step;
            const Rational hi = i + 1 == parts ? c.hi : c.lo + Rational(i + 1) * step;
            Interval iv{lo, hi, i == 0 ? c.lo_closed : true, i + 1 == parts ? c.hi_closed : false};
            cells.push_back({iv, f1(lo, Side::FromRight), f1(hi, Side::FromLeft), f2(lo, Side::FromRight),
                             f2(hi, Side::FromLeft)});
        }
    }
    return cells;
}

// Greedy grouping: indices where a new group starts.
std::vector<std::size_t> greedy_cuts(const std::vector<Cell>& cells, const Rational& delta, bool first) {
    std::vector<std::size_t> starts;
    std::size_t s = 0;
    while (s < cells.size()) {
        starts.push_back(s);
        const Rational& base = first ? cells[s].f1_lo : cells[s].f2_lo;
        std::size_t e = s + 1;
        while (e < cells.size() && (first ? cells[e].f1_hi : cells[e].f2_hi) - base <= delta) ++e;
        s = e;
    }
    return starts;
}

// Image partition of f1(D) for a grouping of cells.
LRPartition image_partition(const std::vector<Cell>& cells, const std::vector<std::size_t>& starts) {
    LRPartition p;
    for (std::size_t g = 0; g < starts.size(); ++g) {
        const std::size_t end = g + 1 < starts.size() ? starts[g + 1] : cells.size();
        std::vector<Interval> parts;
        for (std::size_t k = starts[g]; k < end; ++k) {
            const Cell& c = cells[k];
            parts.push_back({c.f1_lo, c.f1_hi, c.iv.lo_closed, c.iv.hi_closed});
        }
        IntervalUnion block(std::move(parts));
        if (!block.empty()) p.blocks.push_back(std::move(block));
    }
    return p;
}

template <class Get>
Rational grouped_diameter_sum(const std::vector<Cell>& cells, const std::vector<std::size_t>& starts, Get get) {
    Rational total;
    for (std::size_t g = 0; g < starts.size(); ++g) {
        const std::size_t end = g + 1 < starts.size() ? starts[g + 1] : cells.size();
        total += get(cells[end - 1], true) - get(cells[starts[g]], false);
    }
    return total;
}

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

} // namespace

Rational upper_bound_h1(const CurveSpec& curve) {
    curve.validate();
    Rational total;
    for (const auto& piece : curve.pieces().blocks) {
        total += piece.measure();
        for (const auto& f : curve.components) total += image_measure(f, piece);
    }
    return total;
}

Enclosure polyline_length(const std::vector<MonotoneFn>& components, unsigned depth, unsigned precision_bits,
                          unsigned base) {
    if (base != 2 && base != 3) throw std::invalid_argument("polyline_length: grid base must be 2 or 3");
    const BigInt cells = pow_int(base, depth);
    const Rational dx = Rational(1, cells);
    const std::size_t count = cells.get_ui();
    std::vector<Rational> prev(components.size()), cur(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) prev[c] = components[c](0);
    FixedSum sum;
    sum.bits = precision_bits;
    for (std::size_t k = 1; k <= count; ++k) {
        const Rational x = Rational(BigInt(static_cast<unsigned long>(k)), cells);
        Rational sq = dx * dx;
        for (std::size_t c = 0; c < components.size(); ++c) {
            cur[c] = components[c](x);
            const Rational d = cur[c] - prev[c];
            sq += d * d;
        }
        sum.add(sq);
        std::swap(prev, cur);
    }
    return sum.finish();
}

Enclosure riesz_nagy_polyline_collapsed(const Rational& a, unsigned depth, unsigned precision_bits) {
    if (a.sign() <= 0 || a >= Rational(1)) throw std::domain_error("Riesz-Nagy weight must satisfy 0 < a < 1");
    const Rational b = Rational(1) - a;
    const Rational dx2 = Rational(1, pow_int(4, depth));
    FixedSum sum;
    sum.bits = precision_bits;
    for (unsigned k = 0; k <= depth; ++k) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), depth, k);
        const Rational inc = pow(a, depth - k) * pow(b, k);
        // C * sqrt(X) = sqrt(C^2 X)
        sum.add(Rational(binom * binom) * (dx2 + inc * inc));
    }
    return sum.finish();
}

Enclosure polyline_length(const CurveSpec& curve, unsigned depth, unsigned precision_bits) {
    curve.validate();
    if (is_plain_riesz_nagy_graph(curve)) {
        const auto& r = std::get<fn::RieszNagy>(curve.components.front().descriptor());
        return riesz_nagy_polyline_collapsed(r.a, depth, precision_bits);
    }
    return polyline_length(curve.components, depth, precision_bits, 2);
}

H1Certificate certify(const CurveSpec& curve, unsigned depth, unsigned precision_bits) {
    H1Certificate cert;
    cert.upper = upper_bound_h1(curve);
    cert.lower = polyline_length(curve, depth, precision_bits);
    cert.lower_depth = depth;
    cert.precision_bits = precision_bits;
    cert.upper_method = "monotone-piece-partition-sum";
    cert.lower_method = is_plain_riesz_nagy_graph(curve) ? "inscribed-polyline-collapsed" : "inscribed-polyline";
    return cert;
}

ThetaDecomposition theta_decomposition(const CurveSpec& curve, unsigned depth, const Rational& theta) {
    curve.validate();
    if (curve.components.empty()) throw std::invalid_argument("theta_decomposition: curve has no components");
    const auto pts = sample(curve, depth);
    const Rational dx = pow2_neg(depth);
    ThetaDecomposition out;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const Rational dy = abs(pts[k + 1][1] - pts[k][1]);
        if (dy <= theta * dx) {
            out.flat_x_measure += dx;
            ++out.flat_cells;
        } else {
            out.steep_y_measure += dy;
            ++out.steep_cells;
        }
    }
    return out;
}

std::size_t box_count(const std::vector<Point>& points, unsigned m) {
    const BigInt side = BigInt(1) << m;
    std::set<std::vector<unsigned long>> boxes;
    for (const auto& p : points) {
        std::vector<unsigned long> key;
        key.reserve(p.size());
        for (const auto& c : p) {
            BigInt idx = floor(c * Rational(side));
            if (idx >= side) idx = side - 1;
            if (idx < 0) idx = 0;
            key.push_back(idx.get_ui());
        }
        boxes.insert(std::move(key));
    }
    return boxes.size();
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("least_squares_slope: need >= 2 points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

BoxCountSeries box_count_series(const std::vector<Point>& points, unsigned m_lo, unsigned m_hi) {
    if (m_lo > m_hi) throw std::invalid_argument("box_count_series: empty m range");
    BoxCountSeries out;
    std::vector<double> xs, ys;
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        const std::size_t count = box_count(points, m);
        out.rows.push_back({m, pow2_neg(m), count});
        xs.push_back(m);
        ys.push_back(std::log2(static_cast<double>(count)));
    }
    out.slope_estimate = xs.size() >= 2 ? least_squares_slope(xs, ys) : 0.0;
    return out;
}

BoxCountSeries box_count_series(const CurveSpec& curve, unsigned m_lo, unsigned m_hi, unsigned extra_depth) {
    return box_count_series(sample(curve, m_hi + extra_depth), m_lo, m_hi);
}

bool check_lipschitz_image(const MonotoneFn& f, const Rational& c, const IntervalUnion& F, unsigned sample_depth) {
    if (c.sign() < 0) throw std::invalid_argument("check_lipschitz_image: negative constant");
    std::set<Rational> xs;
    const Rational w = pow2_neg(sample_depth);
    for (const auto& comp : F.components()) {
        xs.insert(comp.lo);
        xs.insert(comp.hi);
        for (BigInt k = ceil(comp.lo / w); Rational(k) * w < comp.hi; ++k) {
            const Rational x = Rational(k) * w;
            if (comp.contains(x)) xs.insert(x);
        }
    }
    std::vector<Rational> pts(xs.begin(), xs.end());
    std::vector<Rational> vals;
    vals.reserve(pts.size());
    for (const auto& x : pts) vals.push_back(f(x));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (abs(vals[i + 1] - vals[i]) > c * (pts[i + 1] - pts[i]))
            throw LipschitzViolation(pts[i], pts[i + 1],
                                     "Lipschitz constant " + c.str() + " violated between " + pts[i].str() + " and " +
                                         pts[i + 1].str());
    }
    return image_measure(f, F) <= c * F.measure();
}

SumLemmaReport check_sum_lemma(const MonotoneFn& f1, const MonotoneFn& f2, const IntervalUnion& D,
                               const Rational& delta, unsigned min_cell_depth) {
    if (delta.sign() <= 0) throw std::invalid_argument("check_sum_lemma: delta must be positive");
    for (const auto* f : {&f1, &f2})
        if (!is_increasing_kind(f->monotonicity()))
            throw std::invalid_argument("check_sum_lemma: functions must be increasing");
    SumLemmaReport report;
    if (D.empty()) {
        report.ok = true;
        return report;
    }

    std::vector<Cell> cells;
    unsigned depth = min_cell_depth;
    for (;; ++depth) {
        if (depth > min_cell_depth + 24) throw std::runtime_error("check_sum_lemma: cannot make cells delta-fine");
        cells = subdivide(f1, f2, D, depth);
        const bool fine = std::all_of(cells.begin(), cells.end(), [&](const Cell& c) {
            return c.f1_hi - c.f1_lo <= delta && c.f2_hi - c.f2_lo <= delta;
        });
        if (fine) break;
    }
    report.cell_depth = depth;

    const auto cuts1 = greedy_cuts(cells, delta, true);
    const auto cuts2 = greedy_cuts(cells, delta, false);
    std::vector<std::size_t> common;
    std::set_union(cuts1.begin(), cuts1.end(), cuts2.begin(), cuts2.end(), std::back_inserter(common));

    auto g1 = [](const Cell& c, bool hi) { return hi ? c.f1_hi : c.f1_lo; };
    auto g2 = [](const Cell& c, bool hi) { return hi ? c.f2_hi : c.f2_lo; };
    auto gsum = [](const Cell& c, bool hi) { return hi ? c.f1_hi + c.f2_hi : c.f1_lo + c.f2_lo; };
    report.cover_sum_f1 = grouped_diameter_sum(cells, cuts1, g1);
    report.cover_sum_f2 = grouped_diameter_sum(cells, cuts2, g2);
    report.cover_sum_2delta = grouped_diameter_sum(cells, common, gsum);
    report.refinement_blocks = common.size();

    bool fine = true;
    for (std::size_t g = 0; g < common.size(); ++g) {
        const std::size_t end = g + 1 < common.size() ? common[g + 1] : cells.size();
        if (gsum(cells[end - 1], true) - gsum(cells[common[g]], false) > 2 * delta) fine = false;
    }
    report.ok = fine && report.cover_sum_2delta <= report.cover_sum_f1 + report.cover_sum_f2;

    if (f1.is_strictly_monotone()) {
        // The pulled-back family is a refinement of the f1-partition; check
        // the refinement inequality on the image side as well.
        const LRPartition v1 = image_partition(cells, cuts1);
        const LRPartition pulled = image_partition(cells, common);
        const LRPartition both = refine(v1, pulled);
        report.ok = report.ok && diam_sum(both) <= diam_sum(v1) && diam_sum(v1) == report.cover_sum_f1;
    }
    return report;
}

DerivativeBoundReport check_derivative_bound(const MonotoneFn& f, const IntervalUnion& E) {
    DerivativeBoundReport r;
    if (const auto* a = std::get_if<fn::Affine>(&f.descriptor())) {
        r.integral = abs(a->slope) * E.measure();
    } else if (const auto* pl = std::get_if<fn::PiecewiseLinear>(&f.descriptor())) {
        for (std::size_t i = 0; i + 1 < pl->xs.size(); ++i) {
            const Rational slope = (pl->ys[i + 1] - pl->ys[i]) / (pl->xs[i + 1] - pl->xs[i]);
            r.integral += abs(slope) * measure(E & IntervalUnion{Interval::closed(pl->xs[i], pl->xs[i + 1])});
        }
    } else {
        throw std::invalid_argument("check_derivative_bound: f must be affine or piecewise linear");
    }
    r.image_measure = image_measure(f, E);
    r.ok = r.image_measure <= r.integral;
    return r;
}

namespace gen {

Rational unit_rational(std::mt19937_64& rng, long max_den) {
    const long q = uniform(rng, 1, max_den);
    return Rational(uniform(rng, 0, q), q);
}

IntervalUnion interval_union(std::mt19937_64& rng, std::size_t max_parts, long max_den) {
    std::vector<Interval> parts;
    const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_parts)));
    while (parts.size() < k) {
        Rational a = unit_rational(rng, max_den), b = unit_rational(rng, max_den);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        parts.push_back({a, b, uniform(rng, 0, 3) != 0, uniform(rng, 0, 3) != 0});
    }
    return IntervalUnion(std::move(parts));
}

namespace {

LRPartition random_ordered_partition(std::mt19937_64& rng, const IntervalUnion& A) {
    std::set<Rational> cut_set;
    const long cuts = uniform(rng, 0, 6);
    for (long i = 0; i < cuts; ++i) {
        const Rational t = A.inf() + unit_rational(rng, 32) * A.diameter();
        cut_set.insert(t);
    }
    std::vector<IntervalUnion> segments;
    Rational prev = A.inf();
    bool prev_closed = true;
    for (const auto& t : cut_set) {
        const bool left_takes_cut = uniform(rng, 0, 1) == 1;
        IntervalUnion seg = A & IntervalUnion{Interval{prev, t, prev_closed, left_takes_cut}};
        if (!seg.empty()) segments.push_back(std::move(seg));
        prev = t;
        prev_closed = !left_takes_cut;
    }
    IntervalUnion last = A & IntervalUnion{Interval{prev, A.sup(), prev_closed, true}};
    if (!last.empty()) segments.push_back(std::move(last));

    LRPartition p;
    for (auto& s : segments) {
        if (!p.blocks.empty() && uniform(rng, 0, 2) == 0)
            p.blocks.back() = p.blocks.back() | s;
        else
            p.blocks.push_back(std::move(s));
    }
    return p;
}

std::vector<Rational> distinct_sorted(std::mt19937_64& rng, std::size_t count, long max_den) {
    std::set<Rational> s;
    while (s.size() < count) {
        const Rational r = unit_rational(rng, max_den);
        if (r.sign() > 0 && r < Rational(1)) s.insert(r);
    }
    return {s.begin(), s.end()};
}

} // namespace

std::pair<LRPartition, LRPartition> partition_pair(std::mt19937_64& rng) {
    const IntervalUnion A = interval_union(rng, 4, 48);
    return {random_ordered_partition(rng, A), random_ordered_partition(rng, A)};
}

MonotoneFn increasing_piecewise_linear(std::mt19937_64& rng, std::size_t max_pieces) {
    const auto inner = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_pieces) - 1));
    std::vector<Rational> xs{0}, ys{0};
    for (auto& x : distinct_sorted(rng, inner, 64)) xs.push_back(x);
    for (auto& y : distinct_sorted(rng, inner, 64)) ys.push_back(y);
    xs.push_back(1);
    ys.push_back(1);
    return piecewise_linear(std::move(xs), std::move(ys));
}

MonotoneFn piecewise_linear_any(std::mt19937_64& rng, std::size_t max_pieces) {
    const auto inner = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_pieces) - 1));
    std::vector<Rational> xs{0};
    for (auto& x : distinct_sorted(rng, inner, 64)) xs.push_back(x);
    xs.push_back(1);
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // repeat the previous value now and then to get flat pieces
        if (!ys.empty() && uniform(rng, 0, 4) == 0)
            ys.push_back(ys.back());
        else
            ys.push_back(unit_rational(rng, 32));
    }
    return piecewise_linear(std::move(xs), std::move(ys));
}

} // namespace gen

LemmaSuiteResult run_partition_suite(std::mt19937_64& rng, std::size_t trials) {
    LemmaSuiteResult r{trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [p, q] = gen::partition_pair(rng);
        try {
            const LRPartition both = refine(p, q);
            if (!is_left_right_ordered(both) || diam_sum(both) > min(diam_sum(p), diam_sum(q))) ++r.violations;
        } catch (const std::logic_error&) {
            ++r.violations;
        }
    }
    return r;
}

LemmaSuiteResult run_sum_lemma_suite(std::mt19937_64& rng, std::size_t trials) {
    LemmaSuiteResult r{trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const MonotoneFn f1 = gen::increasing_piecewise_linear(rng);
        const MonotoneFn f2 = gen::increasing_piecewise_linear(rng);
        const IntervalUnion D = gen::interval_union(rng, 3, 32);
        const Rational delta(1, uniform(rng, 2, 24));
        if (!check_sum_lemma(f1, f2, D, delta).ok) ++r.violations;
    }
    return r;
}

LemmaSuiteResult run_lipschitz_suite(std::mt19937_64& rng, std::size_t trials) {
    LemmaSuiteResult r{trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const MonotoneFn f = gen::piecewise_linear_any(rng);
        const auto& pl = std::get<fn::PiecewiseLinear>(f.descriptor());
        Rational c;
        for (std::size_t i = 0; i + 1 < pl.xs.size(); ++i)
            c = max(c, abs((pl.ys[i + 1] - pl.ys[i]) / (pl.xs[i + 1] - pl.xs[i])));
        const IntervalUnion F = gen::interval_union(rng, 3, 32);
        try {
            if (!check_lipschitz_image(f, c, F)) ++r.violations;
        } catch (const LipschitzViolation&) {
            ++r.violations;
        }
    }
    return r;
}

LemmaSuiteResult run_derivative_suite(std::mt19937_64& rng, std::size_t trials) {
    LemmaSuiteResult r{trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const MonotoneFn f = gen::piecewise_linear_any(rng);
        const IntervalUnion E = gen::interval_union(rng, 4, 32);
        if (!check_derivative_bound(f, E).ok) ++r.violations;
    }
    return r;
}

} // namespace dbe
