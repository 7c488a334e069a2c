#include "dbe/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbe {

void CurveSpec::validate() const {
    if (n < 2) throw std::invalid_argument("curve dimension must be at least 2");
    if (components.size() != n - 2)
        throw std::invalid_argument("curve of dimension " + std::to_string(n) + " needs " + std::to_string(n - 2) +
                                    " component functions, got " + std::to_string(components.size()));
    if (alpha.sign() < 0 || alpha > Rational(1)) throw std::invalid_argument("alpha must lie in [0,1]");
    if (piece_domains) {
        if (!is_partition(*piece_domains) || piece_domains->domain() != IntervalUnion::unit())
            throw std::invalid_argument("piece domains must partition [0,1]");
    }
}

Point CurveSpec::at(const Rational& x) const {
    Point p;
    p.reserve(n);
    p.push_back(x);
    for (const auto& f : components) p.push_back(f(x));
    p.push_back(alpha);
    return p;
}

LRPartition CurveSpec::pieces() const {
    if (piece_domains) return *piece_domains;
    return LRPartition{{IntervalUnion::unit()}};
}

PreimageBracket preimage_bracket(const MonotoneFn& h, const IntervalUnion& N, unsigned depth) {
    const std::size_t cells = std::size_t{1} << depth;
    const Rational w = pow2_neg(depth);
    std::vector<Rational> grid(cells + 1);
    for (std::size_t k = 0; k <= cells; ++k) grid[k] = h(Rational(static_cast<long>(k)) * w);

    std::vector<Interval> inner, outer;
    for (std::size_t k = 0; k < cells; ++k) {
        const IntervalUnion img{Interval::closed(grid[k], grid[k + 1])};
        const Interval cell = Interval::closed(Rational(static_cast<long>(k)) * w, Rational(static_cast<long>(k + 1)) * w);
        if (N.contains(img)) inner.push_back(cell);
        if (img.intersects(N)) outer.push_back(cell);
    }
    return {IntervalUnion(std::move(inner)), IntervalUnion(std::move(outer)), depth};
}

Theorem3Curve build_theorem3_curve(std::size_t n, const Rational& a, std::size_t M, const Rational& alpha,
                                   const Theorem3Options& opts) {
    if (n < 3) throw std::invalid_argument("construction needs n >= 3; the 2-dimensional case is a line");
    if (a.sign() <= 0 || a >= Rational(1) || a == Rational(1, 2))
        throw std::invalid_argument("Riesz-Nagy weight must satisfy 0 < a < 1, a != 1/2");

    Theorem3Curve out;
    out.h = riesz_nagy(a);
    out.base.n = n;
    out.base.alpha = alpha;
    out.base.components.push_back(out.h);

    // S_1 = h({h' != 0}) has full measure; its complement is represented by
    // the empty union. Each later S_j drops the null set of the mapper before.
    IntervalUnion excluded;
    for (std::size_t j = 0; j + 3 < n; ++j) {
        MapperResult mapper = build_full_measure_mapper(excluded, M, opts.mapper);
        excluded = excluded | mapper.null_set;
        out.base.components.push_back(compose(mapper.f, out.h));
        out.W.push_back(preimage_bracket(out.h, mapper.null_set, opts.preimage_depth));
        out.mappers.push_back(std::move(mapper));
    }
    IntervalUnion covered;
    for (const auto& w : out.W) covered = covered | w.outer;
    out.Q1 = IntervalUnion::unit() - covered;
    out.base.validate();
    return out;
}

std::vector<Point> sample(const CurveSpec& curve, unsigned depth) {
    curve.validate();
    const std::size_t cells = std::size_t{1} << depth;
    const Rational w = pow2_neg(depth);
    std::vector<Point> pts;
    pts.reserve(cells + 1);
    for (std::size_t k = 0; k <= cells; ++k) pts.push_back(curve.at(Rational(static_cast<long>(k)) * w));
    return pts;
}

DbeReport check_dbe_property(const std::vector<Point>& points) {
    if (points.size() < 2) throw std::invalid_argument("check_dbe_property: need at least two points");
    const std::size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw std::invalid_argument("check_dbe_property: points of different dimension");

    DbeReport report;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            std::size_t matches = 0;
            for (std::size_t c = 0; c < dim; ++c)
                if (points[i][c] == points[j][c]) ++matches;
            if (matches == dim) throw std::invalid_argument("check_dbe_property: duplicate points");
            ++report.pairs_checked;
            if (matches != 1) report.violations.push_back({i, j, matches});
        }
    report.ok = report.violations.empty();
    return report;
}

bool lies_on_axis_line(const std::vector<Point>& points) {
    if (points.empty()) return true;
    const std::size_t dim = points.front().size();
    for (std::size_t c = 0; c < dim; ++c) {
        const bool shared = std::all_of(points.begin(), points.end(),
                                        [&](const Point& p) { return p[c] == points.front()[c]; });
        if (shared) return true;
    }
    return false;
}

std::vector<Rational> project(const std::vector<Point>& points, std::size_t i) {
    std::vector<Rational> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (i < 1 || i > p.size()) throw std::out_of_range("project: coordinate index out of range");
        out.push_back(p[i - 1]);
    }
    return out;
}

IntervalUnion projection_image(const CurveSpec& curve, std::size_t i, const IntervalUnion& domain) {
    if (i < 1 || i > curve.n) throw std::out_of_range("projection_image: coordinate index out of range");
    if (domain.empty()) return {};
    if (i == 1) return domain;
    if (i == curve.n) return IntervalUnion{Interval::point(curve.alpha)};
    return curve.components[i - 2].image(domain);
}

} // namespace dbe
