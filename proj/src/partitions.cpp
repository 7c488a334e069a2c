#include "dbe/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbe {

IntervalUnion LRPartition::domain() const {
    IntervalUnion out;
    for (const auto& b : blocks) out = out | b;
    return out;
}

bool is_partition(const LRPartition& p) {
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (p.blocks[i].empty()) return false;
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j)
            if (p.blocks[i].intersects(p.blocks[j])) return false;
    }
    return true;
}

bool is_left_right_ordered(const LRPartition& p) {
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const auto& a = p.blocks[i];
        if (a.empty()) return false;
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
            const auto& b = p.blocks[j];
            if (b.empty()) return false;
            if (!(a.sup() <= b.inf() || a.inf() >= b.sup())) return false;
        }
    }
    return true;
}

Rational diam_sum(const LRPartition& p) {
    Rational total;
    for (const auto& b : p.blocks) total += b.diameter();
    return total;
}

CoverSum cover_sum(const LRPartition& p) {
    CoverSum out;
    out.block_count = p.blocks.size();
    for (const auto& b : p.blocks) {
        const Rational d = b.diameter();
        out.value += d;
        out.delta = max(out.delta, d);
    }
    return out;
}

LRPartition refine(const LRPartition& p, const LRPartition& q) {
    if (!is_partition(p) || !is_partition(q) || !is_left_right_ordered(p) || !is_left_right_ordered(q))
        throw std::invalid_argument("refine: inputs must be left-right ordered partitions");
    if (p.domain() != q.domain())
        throw std::invalid_argument("refine: partitions of different sets");

    LRPartition out;
    for (const auto& v : p.blocks)
        for (const auto& w : q.blocks) {
            IntervalUnion b = v & w;
            if (!b.empty()) out.blocks.push_back(std::move(b));
        }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const IntervalUnion& a, const IntervalUnion& b) { return a.inf() < b.inf(); });

    if (!is_left_right_ordered(out))
        throw std::logic_error("refine: refinement is not left-right ordered");
    const Rational s = diam_sum(out);
    if (s > min(diam_sum(p), diam_sum(q)))
        throw std::logic_error("refine: diameter sum of refinement exceeds " + min(diam_sum(p), diam_sum(q)).str());
    return out;
}

LRPartition greedy_partition(const IntervalUnion& u, const Rational& delta) {
    if (delta.sign() <= 0) throw std::invalid_argument("greedy_partition: delta must be positive");
    LRPartition out;
    IntervalUnion rest = u;
    while (!rest.empty()) {
        const Rational start = rest.inf();
        IntervalUnion window{Interval::closed(start, start + delta)};
        IntervalUnion block = rest & window;
        rest = rest - window;
        out.blocks.push_back(std::move(block));
    }
    return out;
}

} // namespace dbe
