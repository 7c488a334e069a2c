#include "dbe/staircase.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <set>

namespace dbe {

namespace {

constexpr unsigned kMaxExtraHalvings = 48;

// Leftmost or rightmost closed cell [k w, (k+1) w] inside the free set.
std::optional<Interval> aligned_cell(const IntervalUnion& free, const Rational& w, bool leftmost) {
    const auto& parts = free.components();
    auto try_component = [&](const Interval& c) -> std::optional<Interval> {
        Rational first = Rational(ceil(c.lo / w)) * w;
        if (first == c.lo && !c.lo_closed) first += w;
        Rational last = Rational(floor(c.hi / w)) * w - w;
        if (last + w == c.hi && !c.hi_closed) last -= w;
        if (first > last) return std::nullopt;
        const Rational& start = leftmost ? first : last;
        return Interval::closed(start, start + w);
    };
    if (leftmost) {
        for (const auto& c : parts)
            if (auto cell = try_component(c)) return cell;
    } else {
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            if (auto cell = try_component(*it)) return cell;
    }
    return std::nullopt;
}

std::pair<Interval, Interval> split_node(const Interval& node, const IntervalUnion& excluded, std::size_t child_level) {
    const IntervalUnion free = IntervalUnion{node} - excluded;
    const Rational bound = level_length_bound(child_level);
    unsigned g = 0;
    while (pow2_neg(g) > bound) ++g;
    for (unsigned extra = 0; extra <= kMaxExtraHalvings; ++extra, ++g) {
        const Rational w = pow2_neg(g);
        auto left = aligned_cell(free, w, true);
        auto right = aligned_cell(free, w, false);
        if (left && right && left->hi < right->lo) return {*left, *right};
    }
    throw ConstructionError("cannot place two separated subintervals of " + to_string(node) +
                            " avoiding the excluded set at level " + std::to_string(child_level));
}

} // namespace

Rational level_length_bound(std::size_t k) {
    return Rational(1) / (Rational(static_cast<long>(k) + 1) * Rational(BigInt(BigInt(1) << static_cast<unsigned>(k))));
}

std::string check_tree_conditions(const NestedIntervalTree& tree) {
    if (tree.levels.empty() || tree.levels[0].size() != 1 || tree.levels[0][0] != tree.root)
        return "level 0 must hold exactly the root interval";
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
        const auto& level = tree.levels[k];
        if (level.size() != (std::size_t{1} << k)) return "level " + std::to_string(k) + " has wrong node count";
        const Rational bound = level_length_bound(k);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Interval& node = level[i];
            if (node.length() > bound) return "length bound violated at " + to_string(node);
            if (k > 0 && IntervalUnion{node}.intersects(tree.excluded))
                return "node " + to_string(node) + " meets the excluded set";
            if (k + 1 < tree.levels.size()) {
                const Interval& c0 = tree.levels[k + 1][2 * i];
                const Interval& c1 = tree.levels[k + 1][2 * i + 1];
                if (!IntervalUnion{node}.contains(IntervalUnion{c0, c1}))
                    return "children of " + to_string(node) + " not nested";
                if (!(c0.hi < c1.lo)) return "children of " + to_string(node) + " not separated";
            }
        }
    }
    return {};
}

MonotoneFn staircase_from_tree(const NestedIntervalTree& tree) {
    const std::size_t d = tree.depth();
    const auto& leaves = tree.leaves();
    const Rational cell = Rational(1) / pow(Rational(3), static_cast<unsigned>(d));
    std::vector<Rational> xs{tree.root.lo}, ys{0};
    auto push = [&](const Rational& x, const Rational& y) {
        if (x == xs.back()) {
            if (y != ys.back()) throw std::logic_error("staircase: conflicting values at " + x.str());
            return;
        }
        xs.push_back(x);
        ys.push_back(y);
    };
    for (std::size_t k = 0; k < leaves.size(); ++k) {
        // Cantor interval with address = binary digits of k (most significant first)
        Rational lo;
        Rational scale = Rational(1) / 3;
        for (std::size_t i = 0; i < d; ++i) {
            if ((k >> (d - 1 - i)) & 1u) lo += 2 * scale;
            scale /= 3;
        }
        push(leaves[k].lo, lo);
        push(leaves[k].hi, lo + cell);
    }
    push(tree.root.hi, 1);
    fn::IntervalStaircase s;
    s.tree = std::make_shared<const NestedIntervalTree>(tree);
    s.phi = fn::PiecewiseLinear{std::move(xs), std::move(ys)};
    return MonotoneFn(std::move(s));
}

StaircaseResult build_interval_staircase(const Interval& I, const IntervalUnion& excluded, std::size_t depth) {
    if (!(I.lo < I.hi) || !I.lo_closed || !I.hi_closed)
        throw std::invalid_argument("build_interval_staircase: I must be a nondegenerate closed interval");
    if (I.lo.sign() < 0 || I.hi > Rational(1))
        throw std::invalid_argument("build_interval_staircase: I must lie in [0,1]");
    const IntervalUnion whole{I};
    if (measure(whole & excluded) >= I.length())
        throw std::invalid_argument("build_interval_staircase: excluded set covers I up to a null set");

    NestedIntervalTree tree;
    tree.root = I;
    tree.excluded = excluded;
    tree.levels.push_back({I});
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<Interval> next;
        next.reserve(tree.levels[k].size() * 2);
        for (const auto& node : tree.levels[k]) {
            auto [l, r] = split_node(node, excluded, k + 1);
            next.push_back(std::move(l));
            next.push_back(std::move(r));
        }
        tree.levels.push_back(std::move(next));
    }

    StaircaseResult out;
    out.null_set = IntervalUnion(tree.leaves());
    out.staircase = staircase_from_tree(tree);
    out.tree = std::move(tree);
    return out;
}

void RationalIntervalEnumeration::fill() {
    while (pos_ >= batch_.size()) {
        ++bound_;
        std::set<Rational> points;
        for (long q = 1; q <= static_cast<long>(bound_); ++q)
            for (long p = 0; p <= q; ++p) points.insert(Rational(p, q));
        std::vector<Rational> pts(points.begin(), points.end());
        batch_.clear();
        pos_ = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const BigInt di = pts[i].denominator(), dj = pts[j].denominator();
                if ((di > dj ? di : dj) == static_cast<long>(bound_)) batch_.push_back(Interval::closed(pts[i], pts[j]));
            }
        // pts is sorted, so (i, j) iteration is already lexicographic in (lo, hi)
    }
}

Interval RationalIntervalEnumeration::next() {
    fill();
    return batch_[pos_++];
}

MapperResult build_full_measure_mapper(const IntervalUnion& excluded, std::size_t M, const MapperOptions& opts) {
    if (M == 0) throw std::invalid_argument("build_full_measure_mapper: M must be at least 1");
    if (opts.staircase_depth == 0)
        throw std::invalid_argument("build_full_measure_mapper: staircase depth must be at least 1");

    MapperResult out;
    out.terms = M;
    RationalIntervalEnumeration intervals;
    for (std::size_t tried = 0; out.staircases.size() < M; ++tried) {
        if (tried >= opts.max_candidates)
            throw ConstructionError("only " + std::to_string(out.staircases.size()) + " of " + std::to_string(M) +
                                    " intervals could be placed avoiding the excluded set");
        const Interval I = intervals.next();
        const IntervalUnion blocked = excluded | out.null_set;
        if (measure(IntervalUnion{I} & blocked) >= I.length()) continue;
        try {
            StaircaseResult s = build_interval_staircase(I, blocked, opts.staircase_depth);
            out.null_set = out.null_set | s.null_set;
            out.intervals.push_back(I);
            out.staircases.push_back(std::move(s));
        } catch (const ConstructionError&) {
            continue;
        }
    }

    std::vector<MonotoneFn> terms;
    std::vector<Rational> weights;
    for (std::size_t m = 0; m < M; ++m) {
        terms.push_back(out.staircases[m].staircase);
        weights.push_back(pow2_neg(static_cast<unsigned>(m + 1)));
    }
    terms.push_back(identity());
    weights.push_back(pow2_neg(static_cast<unsigned>(M)));
    out.f = weighted_sum(std::move(terms), std::move(weights));
    out.image_lower_bound = Rational(1) - pow2_neg(static_cast<unsigned>(M));
    return out;
}

Rational mapper_image_measure(const MapperResult& r) { return image_measure(r.f, r.null_set); }

} // namespace dbe
