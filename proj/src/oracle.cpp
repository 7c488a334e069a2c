#include "dbe/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbe::oracle {

namespace {

constexpr unsigned kFloatBits = 256;

BigInt grid_size(unsigned base, unsigned m) {
    BigInt out = 1;
    for (unsigned i = 0; i < m; ++i) out *= base;
    return out;
}

std::size_t grid_index(const RasterFn& r, const Rational& x) {
    const Rational scaled = x * Rational(grid_size(r.base, r.m));
    if (!scaled.is_integer()) throw std::invalid_argument("raster: point " + x.str() + " is not on the grid");
    return scaled.numerator().get_ui();
}

// Sort-and-sweep measure of a list of closed intervals.
Rational sweep_measure(std::vector<std::pair<Rational, Rational>> ivs) {
    std::sort(ivs.begin(), ivs.end());
    Rational total;
    bool open = false;
    Rational lo, hi;
    for (auto& [a, b] : ivs) {
        if (open && a <= hi) {
            if (b > hi) hi = b;
            continue;
        }
        if (open) total += hi - lo;
        lo = a;
        hi = b;
        open = true;
    }
    if (open) total += hi - lo;
    return total;
}

} // namespace

Rational RasterFn::x(std::size_t k) const {
    return Rational(BigInt(static_cast<unsigned long>(k)), grid_size(base, m));
}

RasterFn cantor_raster(unsigned m) {
    std::vector<Rational> v{Rational(0), Rational(1)};
    const Rational half(1, 2);
    for (unsigned level = 0; level < m; ++level) {
        const std::size_t n = v.size() - 1;
        std::vector<Rational> next(3 * n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            next[k] = v[k] * half;
            next[2 * n + k] = half + v[k] * half;
        }
        for (std::size_t k = n; k <= 2 * n; ++k) next[k] = half;
        v = std::move(next);
    }
    return {3, m, std::move(v)};
}

RasterFn riesz_nagy_raster(const Rational& a, unsigned m) {
    std::vector<Rational> v{Rational(0), Rational(1)};
    for (unsigned level = 0; level < m; ++level) {
        std::vector<Rational> next;
        next.reserve(2 * v.size() - 1);
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
            next.push_back(v[k]);
            next.push_back(v[k] + a * (v[k + 1] - v[k]));
        }
        next.push_back(v.back());
        v = std::move(next);
    }
    return {2, m, std::move(v)};
}

RasterFn raster_from(const std::function<Rational(const Rational&)>& f, unsigned base, unsigned m) {
    RasterFn r{base, m, {}};
    const std::size_t cells = grid_size(base, m).get_ui();
    r.values.reserve(cells + 1);
    for (std::size_t k = 0; k <= cells; ++k) r.values.push_back(f(r.x(k)));
    return r;
}

RasterFn identity_raster(unsigned m) {
    return raster_from([](const Rational& x) { return x; }, 2, m);
}

std::pair<Rational, Rational> raster_image_measure(const RasterFn& r, const IntervalUnion& u) {
    std::vector<std::pair<Rational, Rational>> ranges;
    Rational upper;
    for (const auto& c : u.components()) {
        const std::size_t i0 = grid_index(r, c.lo), i1 = grid_index(r, c.hi);
        Rational lo = r.values[i0], hi = r.values[i0];
        for (std::size_t k = i0; k <= i1; ++k) {
            lo = std::min(lo, r.values[k]);
            hi = std::max(hi, r.values[k]);
            if (k < i1) upper += abs(r.values[k + 1] - r.values[k]);
        }
        ranges.emplace_back(lo, hi);
    }
    return {sweep_measure(std::move(ranges)), upper};
}

Rational naive_polyline(const std::vector<RasterFn>& rasters) {
    if (rasters.empty()) throw std::invalid_argument("naive_polyline: no rasters");
    const std::size_t cells = rasters.front().cells();
    for (const auto& r : rasters)
        if (r.cells() != cells || r.base != rasters.front().base)
            throw std::invalid_argument("naive_polyline: rasters on different grids");
    const mpf_class dx(mpq_class(1, 1) / mpq_class(grid_size(rasters.front().base, rasters.front().m)), kFloatBits);
    mpf_class total(0, kFloatBits);
    for (std::size_t k = 0; k < cells; ++k) {
        mpf_class sq(dx * dx, kFloatBits);
        for (const auto& r : rasters) {
            const mpf_class d(mpq_class(r.values[k + 1].raw() - r.values[k].raw()), kFloatBits);
            sq += d * d;
        }
        total += sqrt(sq);
    }
    return Rational(mpq_class(total));
}

Rational naive_polyline_radius() { return pow2_neg(200); }

Rational brute_cover_sum(std::vector<Rational> points, const Rational& delta) {
    if (delta.sign() <= 0) throw std::invalid_argument("brute_cover_sum: delta must be positive");
    std::sort(points.begin(), points.end());
    Rational total;
    std::size_t i = 0;
    while (i < points.size()) {
        const Rational start = points[i];
        Rational last = start;
        while (i < points.size() && points[i] - start <= delta) last = points[i++];
        total += last - start;
    }
    return total;
}

Rational brute_cover_sum(const IntervalUnion& u, const Rational& delta) {
    if (delta.sign() <= 0) throw std::invalid_argument("brute_cover_sum: delta must be positive");
    std::vector<std::pair<Rational, Rational>> comps;
    for (const auto& c : u.components()) comps.emplace_back(c.lo, c.hi);
    std::sort(comps.begin(), comps.end());
    if (comps.empty()) return 0;
    Rational total;
    Rational t = comps.front().first;
    for (;;) {
        const Rational end = t + delta;
        Rational top = t;
        for (const auto& [lo, hi] : comps)
            if (lo <= end && hi >= t) top = std::max(top, std::min(hi, end));
        total += top - t;
        // next uncovered point of the closure
        bool found = false;
        Rational next;
        for (const auto& [lo, hi] : comps) {
            if (lo <= end && end < hi) {
                next = end;
                found = true;
                break;
            }
            if (lo > end) {
                next = lo;
                found = true;
                break;
            }
        }
        if (!found) break;
        t = next;
    }
    return total;
}

} // namespace dbe::oracle
