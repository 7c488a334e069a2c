// Randomized invariants over hand-rolled generators.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dbe/estimators.hpp"

#include <random>

using namespace dbe;

namespace {
constexpr std::uint64_t kSeed = 20240611;

Rational random_dyadic(std::mt19937_64& rng, unsigned depth) {
    const long k = static_cast<long>(rng() % ((1u << depth) + 1));
    return Rational(k) * pow2_neg(depth);
}

Rational random_rational(std::mt19937_64& rng) { return gen::unit_rational(rng, 60); }
} // namespace

TEST_CASE("inclusion-exclusion for measures") {
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 500; ++t) {
        const auto a = gen::interval_union(rng, 5, 30), b = gen::interval_union(rng, 5, 30);
        CHECK(measure(a | b) + measure(a & b) == measure(a) + measure(b));
        CHECK(measure(a - b) == measure(a) - measure(a & b));
    }
}

TEST_CASE("set algebra laws and normalization idempotence") {
    std::mt19937_64 rng(kSeed + 1);
    for (int t = 0; t < 300; ++t) {
        const auto a = gen::interval_union(rng, 4, 20), b = gen::interval_union(rng, 4, 20),
                   c = gen::interval_union(rng, 4, 20);
        CHECK((a | b) == (b | a));
        CHECK((a & b) == (b & a));
        CHECK(((a | b) | c) == (a | (b | c)));
        CHECK(((a & b) & c) == (a & (b & c)));
        CHECK((a & (b | c)) == ((a & b) | (a & c)));
        CHECK(IntervalUnion(a.components()) == a);
        for (std::size_t i = 0; i + 1 < a.components().size(); ++i)
            CHECK(a.components()[i].hi <= a.components()[i + 1].lo);
    }
}

TEST_CASE("refinement inequality and commutativity") {
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < 500; ++t) {
        const auto [p, r] = gen::partition_pair(rng);
        const auto pr = refine(p, r), rp = refine(r, p);
        CHECK(diam_sum(pr) <= min(diam_sum(p), diam_sum(r)));
        CHECK(is_left_right_ordered(pr));
        CHECK(pr == rp);
        CHECK(refine(p, p) == p);
    }
}

TEST_CASE("strict monotonicity of strictly increasing descriptors") {
    std::mt19937_64 rng(kSeed + 3);
    const auto mapper = build_full_measure_mapper({}, 3);
    const std::vector<MonotoneFn> fns{riesz_nagy(Rational(1, 4)), riesz_nagy(Rational(2, 3)), mapper.f,
                                      compose(mapper.f, riesz_nagy(Rational(1, 4)))};
    for (const auto& f : fns)
        for (int t = 0; t < 200; ++t) {
            Rational x = random_dyadic(rng, 12), y = random_dyadic(rng, 12);
            if (x == y) continue;
            if (y < x) std::swap(x, y);
            CHECK(f(x) < f(y));
        }
}

TEST_CASE("cantor self-similarity") {
    std::mt19937_64 rng(kSeed + 4);
    for (int t = 0; t < 1000; ++t) {
        const Rational x = random_rational(rng);
        CHECK(eval_cantor(x / 3) == eval_cantor(x) / 2);
        CHECK(eval_cantor(1 - x) == 1 - eval_cantor(x));
        CHECK(eval_cantor(x / 3 + Rational(2, 3)) == eval_cantor(x) / 2 + Rational(1, 2));
    }
}

TEST_CASE("cantor is non-decreasing") {
    std::mt19937_64 rng(kSeed + 5);
    for (int t = 0; t < 1000; ++t) {
        Rational x = random_rational(rng), y = random_rational(rng);
        if (y < x) std::swap(x, y);
        CHECK(eval_cantor(x) <= eval_cantor(y));
    }
}

TEST_CASE("staircases at every depth up to 12") {
    for (std::size_t d = 0; d <= 12; ++d) {
        const auto s = build_interval_staircase(Interval::closed(0, 1), {}, d);
        CHECK(check_tree_conditions(s.tree).empty());
        CHECK(s.null_set.measure() <= Rational(1, static_cast<long>(d) + 1));
        CHECK(image_measure(s.staircase, s.null_set) == 1);
    }
}

TEST_CASE("mapper truncations up to 10 terms") {
    for (std::size_t M = 1; M <= 10; ++M) {
        const auto m = build_full_measure_mapper({}, M);
        CHECK(m.image_lower_bound == 1 - pow2_neg(static_cast<unsigned>(M)));
        CHECK(mapper_image_measure(m) >= m.image_lower_bound);
        for (std::size_t i = 0; i < m.staircases.size(); ++i)
            for (std::size_t j = i + 1; j < m.staircases.size(); ++j)
                CHECK_FALSE(m.staircases[i].null_set.intersects(m.staircases[j].null_set));
    }
}

TEST_CASE("polyline length is nondecreasing in depth") {
    const auto c = build_theorem3_curve(3, Rational(1, 4), 4, Rational(1, 2)).base;
    Enclosure previous = polyline_length(c, 0);
    for (unsigned d = 1; d <= 16; ++d) {
        const auto e = polyline_length(c, d);
        CHECK(previous.lo <= e.hi);
        CHECK(e.lo <= 2);
        previous = e;
    }
    const auto c4 = build_theorem3_curve(4, Rational(1, 4), 3, Rational(1, 2)).base;
    previous = polyline_length(c4, 0);
    for (unsigned d = 1; d <= 9; ++d) {
        const auto e = polyline_length(c4, d);
        CHECK(previous.lo <= e.hi);
        CHECK(e.lo <= 3);
        previous = e;
    }
}

TEST_CASE("taxicab bounds per cell") {
    const auto c = build_theorem3_curve(5, Rational(1, 4), 3, Rational(1, 2)).base;
    const unsigned d = 8;
    const auto pts = sample(c, d);
    Rational max_sum, taxicab;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        Rational biggest, total;
        for (std::size_t i = 0; i < pts[k].size(); ++i) {
            const Rational inc = abs(pts[k + 1][i] - pts[k][i]);
            biggest = max(biggest, inc);
            total += inc;
        }
        max_sum += biggest;
        taxicab += total;
    }
    const auto e = polyline_length(c, d);
    CHECK(max_sum <= e.hi);
    CHECK(e.lo <= taxicab);
    CHECK(taxicab == 4);
}

TEST_CASE("collapsed sum matches chord sum within 2^-40") {
    std::mt19937_64 rng(kSeed + 6);
    for (int t = 0; t < 6; ++t) {
        Rational a = gen::unit_rational(rng, 12);
        if (a.sign() == 0 || a == 1 || a == Rational(1, 2)) a = Rational(1, 5);
        const unsigned d = 8 + static_cast<unsigned>(rng() % 9);
        const auto fast = riesz_nagy_polyline_collapsed(a, d);
        const auto slow = polyline_length(std::vector<MonotoneFn>{riesz_nagy(a)}, d);
        CHECK(abs(fast.value() - slow.value()) <= pow2_neg(40));
    }
}

TEST_CASE("projection image measures grow with the domain") {
    std::mt19937_64 rng(kSeed + 7);
    const auto c = build_theorem3_curve(4, Rational(1, 4), 3, Rational(1, 2)).base;
    for (int t = 0; t < 100; ++t) {
        Rational a = random_dyadic(rng, 6), b = random_dyadic(rng, 6);
        if (b < a) std::swap(a, b);
        const IntervalUnion small{Interval::closed(a, b)};
        const IntervalUnion big = small | IntervalUnion{Interval::closed(random_dyadic(rng, 6), 1)};
        for (std::size_t i = 1; i <= 4; ++i)
            CHECK(projection_image(c, i, small).measure() <= projection_image(c, i, big).measure());
    }
}

TEST_CASE("lemma suites") {
    std::mt19937_64 rng(kSeed + 8);
    CHECK(run_sum_lemma_suite(rng, 500).violations == 0);
    CHECK(run_lipschitz_suite(rng, 500).violations == 0);
    CHECK(run_derivative_suite(rng, 500).violations == 0);
    CHECK(run_partition_suite(rng, 500).violations == 0);
}
