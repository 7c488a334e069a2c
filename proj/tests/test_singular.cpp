#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dbe/monotone.hpp"
#include "dbe/singular.hpp"
#include "dbe/staircase.hpp"

using namespace dbe;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
IntervalUnion cl(const Rational& a, const Rational& b) { return IntervalUnion{Interval::closed(a, b)}; }
} // namespace

TEST_CASE("cantor function values") {
    CHECK(eval_cantor(0) == 0);
    CHECK(eval_cantor(1) == 1);
    CHECK(eval_cantor(q("1/3")) == q("1/2"));
    CHECK(eval_cantor(q("2/3")) == q("1/2"));
    CHECK(eval_cantor(q("1/4")) == q("1/3"));
    CHECK(eval_cantor(q("3/4")) == q("2/3"));
    CHECK(eval_cantor(q("1/2")) == q("1/2"));
    CHECK(eval_cantor(q("2/9")) == q("1/4"));
    CHECK(eval_cantor(q("1/10")) == q("1/5"));
    CHECK_THROWS_AS(eval_cantor(q("3/2")), std::domain_error);
}

TEST_CASE("Riesz-Nagy values") {
    CHECK(eval_riesz_nagy(q("1/2"), q("3/8")) == q("3/8"));
    CHECK(eval_riesz_nagy(q("1/4"), q("1/2")) == q("1/4"));
    CHECK(eval_riesz_nagy(q("1/4"), q("3/4")) == q("7/16"));
    CHECK(eval_riesz_nagy(q("1/4"), 0) == 0);
    CHECK(eval_riesz_nagy(q("1/4"), 1) == 1);
    CHECK(eval_riesz_nagy(q("1/4"), q("1/4")) == q("1/16"));
    CHECK_THROWS_AS(eval_riesz_nagy(q("1/4"), q("1/3")), NotEvaluable);
    CHECK_THROWS_AS(eval_riesz_nagy(Rational(0), q("1/2")), std::domain_error);
    CHECK_THROWS_AS(eval_riesz_nagy(Rational(1), q("1/2")), std::domain_error);
}

TEST_CASE("dyadic increments") {
    const Rational a = q("1/4");
    CHECK(dyadic_increment(a, DigitString(2, {})) == 1);
    CHECK(dyadic_increment(a, DigitString(2, {0})) == a);
    CHECK(dyadic_increment(a, DigitString(2, {0, 1})) == a * (1 - a));
    CHECK_THROWS(dyadic_increment(a, DigitString(3, {0})));
    for (unsigned d = 0; d <= 10; ++d) {
        Rational total;
        for (unsigned k = 0; k < (1u << d); ++k) {
            const Rational lo = Rational(static_cast<long>(k)) * pow2_neg(d);
            const Rational inc = dyadic_increment(a, expand_digits(lo, 2, d));
            CHECK(inc == eval_riesz_nagy(a, lo + pow2_neg(d)) - eval_riesz_nagy(a, lo));
            total += inc;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("Riesz-Nagy inverse") {
    const Rational a = q("1/4");
    for (const char* x : {"0", "1", "1/2", "3/8", "13/64", "255/256"}) {
        const auto back = riesz_nagy_inverse(a, eval_riesz_nagy(a, q(x)));
        REQUIRE(back.has_value());
        CHECK(*back == q(x));
    }
    CHECK_FALSE(riesz_nagy_inverse(a, q("1/3")).has_value());
    CHECK_THROWS_AS(riesz_nagy_inverse(a, q("3/2")), std::domain_error);
}

TEST_CASE("descriptor kinds and monotonicity") {
    CHECK(cantor().kind() == "cantor");
    CHECK(cantor().monotonicity() == Monotonicity::NonDecreasing);
    CHECK_FALSE(cantor().is_strictly_monotone());
    CHECK(riesz_nagy(q("1/4")).is_strictly_monotone());
    CHECK(affine(q("-1"), 1).monotonicity() == Monotonicity::StrictlyDecreasing);
    CHECK(affine(0, q("1/2")).monotonicity() == Monotonicity::NonDecreasing);
    CHECK(identity().kind() == "affine");
    CHECK(compose(riesz_nagy(q("1/4")), identity()).kind() == "composition");
    CHECK(piecewise_linear({0, q("1/2"), 1}, {0, 1, 0}).monotonicity() == Monotonicity::PiecewiseMonotone);
    CHECK_THROWS_AS(riesz_nagy(q("3/2")), std::domain_error);
    CHECK_THROWS_AS(piecewise_linear({0, 0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_sum({identity()}, {q("3/2")}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_sum({identity(), identity()}, {q("1/2")}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_sum({identity()}, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("image measures") {
    CHECK(image_measure(identity(), cl(0, q("1/2"))) == q("1/2"));
    CHECK(image_measure(cantor(), IntervalUnion{Interval::open(q("1/3"), q("2/3"))}) == 0);
    CHECK(image_measure(riesz_nagy(q("1/4")), cl(0, q("1/2"))) == q("1/4"));
    CHECK(image_measure(affine(q("1/2"), 0), IntervalUnion::unit()) == q("1/2"));
    CHECK(image_measure(affine(-1, 1), cl(0, q("1/4"))) == q("1/4"));
    CHECK(image_measure(piecewise_linear({0, q("1/2"), 1}, {0, 1, 0}), IntervalUnion::unit()) == 1);
    CHECK_THROWS_AS(image_measure(riesz_nagy(q("1/4")), cl(0, q("1/3"))), NotEvaluable);
    const auto img = cantor().image(cl(q("1/3"), q("2/3")));
    CHECK(img == IntervalUnion{Interval::point(q("1/2"))});
}

TEST_CASE("compositions, sums, restrictions, pieces") {
    const auto h = riesz_nagy(q("1/4"));
    const auto twice = compose(h, h);
    CHECK(twice(q("1/2")) == h(q("1/4")));
    const auto ws = weighted_sum({h, identity()}, {q("1/2"), q("1/2")});
    CHECK(ws(q("1/2")) == q("3/8"));
    CHECK(ws.is_strictly_monotone());
    const auto r = restrict_to(h, cl(0, q("1/2")));
    CHECK(r(q("1/4")) == q("1/16"));
    CHECK_THROWS(r(q("3/4")));
    const auto pw = piecewise({{Interval::closed_open(0, q("1/2")), identity()},
                               {Interval::closed(q("1/2"), 1), affine(-1, 1)}});
    CHECK(pw(q("1/4")) == q("1/4"));
    CHECK(pw(q("3/4")) == q("1/4"));
    CHECK(pw.monotonicity() == Monotonicity::PiecewiseMonotone);
    CHECK(image_measure(pw, IntervalUnion::unit()) == q("1/2"));
}

TEST_CASE("interval staircase, depth 0") {
    const auto s = build_interval_staircase(Interval::closed(q("1/4"), q("3/4")), {}, 0);
    CHECK(s.null_set == cl(q("1/4"), q("3/4")));
    for (const char* x : {"1/4", "1/3", "1/2", "5/8", "3/4"})
        CHECK(s.staircase(q(x)) == eval_cantor((q(x) - q("1/4")) * 2));
    CHECK(s.staircase(0) == 0);
    CHECK(s.staircase(1) == 1);
}

TEST_CASE("interval staircase, depth 2 and the central gap") {
    const auto s = build_interval_staircase(Interval::closed(0, 1), {}, 2);
    CHECK(check_tree_conditions(s.tree).empty());
    CHECK(s.null_set.measure() <= q("1/3"));
    CHECK(image_measure(s.staircase, s.null_set) == 1);
    const auto& level1 = s.tree.levels[1];
    CHECK(s.staircase(level1[0].hi) == q("1/2"));
    CHECK(s.staircase(level1[1].lo) == q("1/2"));
    CHECK(s.staircase(0) == 0);
    CHECK(s.staircase(1) == 1);
}

TEST_CASE("interval staircase avoids the excluded set") {
    const IntervalUnion excluded{Interval::closed(q("1/8"), q("3/8")), Interval::point(q("7/8"))};
    const auto s = build_interval_staircase(Interval::closed(0, 1), excluded, 5);
    CHECK(check_tree_conditions(s.tree).empty());
    CHECK_FALSE(s.null_set.intersects(excluded));
    CHECK(image_measure(s.staircase, s.null_set) == 1);
}

TEST_CASE("interval staircase preconditions") {
    CHECK_THROWS_AS(build_interval_staircase(Interval::closed(q("1/2"), q("1/2")), {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_interval_staircase(Interval::open(0, 1), {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_interval_staircase(Interval::closed(0, 2), {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_interval_staircase(Interval::closed(0, q("1/2")), IntervalUnion::unit(), 1),
                    std::invalid_argument);
}

TEST_CASE("tree condition checker reports failures") {
    auto s = build_interval_staircase(Interval::closed(0, 1), {}, 2);
    auto bad = s.tree;
    std::swap(bad.levels[2][0], bad.levels[2][1]);
    CHECK_FALSE(check_tree_conditions(bad).empty());
    bad = s.tree;
    bad.excluded = IntervalUnion{Interval::point(bad.levels[2][3].lo)};
    CHECK(check_tree_conditions(bad).find("excluded") != std::string::npos);
    bad = s.tree;
    bad.levels[1][0] = Interval::closed(0, q("1/2"));
    CHECK(check_tree_conditions(bad).find("length") != std::string::npos);
}

TEST_CASE("rational interval enumeration order") {
    RationalIntervalEnumeration e;
    CHECK(e.next() == Interval::closed(0, 1));
    CHECK(e.next() == Interval::closed(0, q("1/2")));
    CHECK(e.next() == Interval::closed(q("1/2"), 1));
    CHECK(e.next() == Interval::closed(0, q("1/3")));
    CHECK(e.next() == Interval::closed(0, q("2/3")));
    CHECK(e.next() == Interval::closed(q("1/3"), q("1/2")));
}

TEST_CASE("full-measure mapper") {
    const auto m1 = build_full_measure_mapper({}, 1);
    CHECK(m1.intervals.front() == Interval::closed(0, 1));
    CHECK(m1.image_lower_bound == q("1/2"));
    CHECK(mapper_image_measure(m1) >= q("1/2"));

    const auto m3 = build_full_measure_mapper({}, 3);
    CHECK(m3.image_lower_bound == q("7/8"));
    CHECK(mapper_image_measure(m3) >= q("7/8"));
    CHECK(m3.f(0) == 0);
    CHECK(m3.f(1) == 1);
    CHECK(m3.f.is_strictly_monotone());
    for (unsigned k = 0; k < 64; ++k) {
        const Rational x = Rational(static_cast<long>(k)) / 64, y = Rational(static_cast<long>(k + 1)) / 64;
        CHECK(m3.f(y) - m3.f(x) >= pow2_neg(3) * (y - x));
    }
    CHECK_THROWS_AS(build_full_measure_mapper({}, 0), std::invalid_argument);
    MapperOptions tight;
    tight.max_candidates = 1;
    CHECK_THROWS_AS(build_full_measure_mapper(IntervalUnion::unit(), 1, tight), ConstructionError);
}
