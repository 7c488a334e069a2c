// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "dbe/estimators.hpp"
#include "dbe/oracle.hpp"
#include "dbe/serialize.hpp"
#include "dbe/set_family.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace dbe;

namespace {

// Pinned values and tolerances.
const Rational kRieszA(1, 4);
const Rational kLengthTarget(19, 10);
constexpr unsigned kDStar = 35;           // first depth with certified length >= 1.9 at a = 1/4
constexpr unsigned kMaxDepth = 64;
constexpr double kCantorTolerance = 1e-6;
constexpr double kSlopeLo = 0.9, kSlopeHi = 1.1;
constexpr std::size_t kTrials = 500;
constexpr std::uint64_t kSeed = 1;
constexpr double kUpperBoundSeconds = 1.0;
constexpr double kLowerBoundSeconds = 1.0;
constexpr double kFamilySeconds = 60.0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

Outcome criterion_upper_bound() {
    Outcome o;
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto curve = build_theorem3_curve(n, kRieszA, 4, Rational(1, 2));
        const Rational upper = upper_bound_h1(curve.base);
        const double t = seconds_since(t0);
        o.detail << " n=" << n << ":" << upper << " (" << t << "s)";
        o.require(upper == Rational(static_cast<long>(n) - 1), "upper != n-1 at n=" + std::to_string(n));
        o.require(t < kUpperBoundSeconds, "runtime at n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion_lower_bound() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto curve = build_theorem3_curve(3, kRieszA, 4, Rational(1, 2)).base;
    const Rational upper = upper_bound_h1(curve);
    std::optional<unsigned> first;
    Enclosure previous = polyline_length(curve, 0);
    for (unsigned d = 0; d <= kMaxDepth; ++d) {
        const auto e = polyline_length(curve, d);
        o.require(e.lo <= upper, "exceeds upper bound at d=" + std::to_string(d));
        if (d > 0) o.require(previous.lo <= e.hi, "decrease at d=" + std::to_string(d));
        if (!first && e.lo >= kLengthTarget) first = d;
        previous = e;
    }
    const double t = seconds_since(t0);
    o.require(first.has_value(), "1.9 never reached by depth 64");
    if (first) {
        o.detail << " first depth with lower >= 19/10: " << *first << " (pinned " << kDStar << ")";
        o.require(*first == kDStar, "d* differs from pinned value");
    }
    o.detail << "; L_64 in [" << decimal(previous.lo, 12) << ", " << decimal(previous.hi, 12, true) << "]"
             << " (" << t << "s)";
    o.require(t < kLowerBoundSeconds, "runtime");
    return o;
}

Outcome criterion_cantor_graph() {
    Outcome o;
    Rational previous;
    for (unsigned m = 0; m <= 10; ++m) {
        const Rational len = oracle::naive_polyline({oracle::cantor_raster(m)});
        o.require(len <= 2, "exceeds 2 at m=" + std::to_string(m));
        if (m > 0) o.require(previous <= len, "decrease at m=" + std::to_string(m));
        previous = len;
    }
    const double closed = 1 - std::pow(2.0 / 3, 10) + std::sqrt(1 + std::pow(2.0 / 3, 20));
    const double err = std::abs(previous.to_double() - closed);
    o.detail << " L_10=" << decimal(previous, 9) << " closed form " << closed << " |diff|=" << err;
    o.require(err <= kCantorTolerance, "closed form mismatch");
    return o;
}

Outcome criterion_mapper() {
    Outcome o;
    for (std::size_t M = 1; M <= 10; ++M) {
        const auto m = build_full_measure_mapper({}, M);
        const Rational img = mapper_image_measure(m);
        o.require(img >= 1 - pow2_neg(static_cast<unsigned>(M)), "image bound at M=" + std::to_string(M));
        o.require(m.f.is_strictly_monotone() && m.f(0) == 0 && m.f(1) == 1, "f endpoints/strictness");
        for (std::size_t i = 0; i < m.staircases.size(); ++i) {
            o.require(image_measure(m.f, m.staircases[i].null_set) >= pow2_neg(static_cast<unsigned>(i + 1)),
                      "per-term bound at m=" + std::to_string(i));
            for (std::size_t j = i + 1; j < m.staircases.size(); ++j)
                o.require(!m.staircases[i].null_set.intersects(m.staircases[j].null_set), "null sets overlap");
        }
        const Rational slope = pow2_neg(static_cast<unsigned>(M));
        Rational prev = m.f(0);
        for (long k = 1; k <= 1024; ++k) {
            const Rational cur = m.f(Rational(k) / 1024);
            if (cur - prev < slope / 1024) o.require(false, "f not strictly increasing");
            prev = cur;
        }
        if (M == 10) o.detail << " M=10: λ(f(N)) = " << decimal(img, 6) << " >= 1 - 2^-10";
    }
    return o;
}

Outcome criterion_staircase() {
    Outcome o;
    for (std::size_t d = 1; d <= 12; ++d) {
        const auto s = build_interval_staircase(Interval::closed(0, 1), {}, d);
        o.require(s.null_set.measure() <= Rational(1, static_cast<long>(d) + 1), "λ(N) at d=" + std::to_string(d));
        o.require(image_measure(s.staircase, s.null_set) == 1, "λ(f(N)) at d=" + std::to_string(d));
        o.require(check_tree_conditions(s.tree).empty(), "tree conditions at d=" + std::to_string(d));
        if (d == 12) o.detail << " d=12: λ(N) = " << s.null_set.measure() << ", λ(f(N)) = 1";
    }
    return o;
}

Outcome criterion_dbe() {
    Outcome o;
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto curve = build_theorem3_curve(n, kRieszA, 4, Rational(1, 2)).base;
        const auto r = check_dbe_property(sample(curve, 8));
        o.require(r.ok && r.pairs_checked == 257 * 256 / 2, "violation at n=" + std::to_string(n));
    }
    CurveSpec devil;
    devil.components = {cantor()};
    const auto control = check_dbe_property(sample(devil, 8));
    o.detail << " n=3..6: 32896 pairs each ok; Cantor control violations=" << control.violations.size();
    o.require(!control.ok, "Cantor control found no violation");
    return o;
}

Outcome criterion_lemmas() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    const std::pair<const char*, LemmaSuiteResult (*)(std::mt19937_64&, std::size_t)> runs[] = {
        {"refinement", run_partition_suite},
        {"sum", run_sum_lemma_suite},
        {"lipschitz", run_lipschitz_suite},
        {"derivative", run_derivative_suite},
    };
    for (const auto& [name, run] : runs) {
        const auto r = run(rng, kTrials);
        o.detail << " " << name << ": " << r.violations << "/" << r.trials;
        o.require(r.violations == 0 && r.trials == kTrials, name);
    }
    return o;
}

Outcome criterion_families() {
    Outcome o;
    for (unsigned n = 2; n <= 5; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = max_family_size(n);
        const double t = seconds_since(t0);
        o.detail << " n=" << n << ":" << r.max_size;
        o.require(r.max_size == n, "max != n at n=" + std::to_string(n));
        if (n == 5) {
            o.detail << " (" << t << "s)";
            o.require(t < kFamilySeconds, "runtime at n=5");
        }
        if (n >= 3) {
            const auto p = near_pencil(n);
            o.require(unique_intersection(p) && p.members.size() == r.max_size, "near-pencil witness");
        }
    }
    return o;
}

Outcome criterion_box_count() {
    Outcome o;
    const auto curve = build_theorem3_curve(3, kRieszA, 4, Rational(1, 2)).base;
    const auto s = box_count_series(curve, 4, 10);
    o.detail << " slope=" << s.slope_estimate;
    o.require(s.slope_estimate >= kSlopeLo && s.slope_estimate <= kSlopeHi, "slope outside [0.9, 1.1]");
    return o;
}

Rational from_decimal(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::parse(s);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(BigInt(s.substr(0, dot) + s.substr(dot + 1)), den);
}

Outcome criterion_oracles() {
    Outcome o;
    std::ifstream in(DBE_FIXTURE_DIR "/regression_corpus.json");
    if (!in) {
        o.require(false, "regression corpus missing");
        return o;
    }
    const Json cases = Json::parse(in).at("cases");
    std::size_t checked = 0;
    auto check = [&](bool cond, const std::string& what) {
        ++checked;
        o.require(cond, what);
    };
    auto closed_set = [](const Json& j) {
        std::vector<Interval> parts;
        for (const auto& e : j) parts.push_back(Interval::closed(rational_from_json(e[0]), rational_from_json(e[1])));
        return IntervalUnion(std::move(parts));
    };

    for (const auto& it : cases.at("cantor_values").at("items"))
        check(eval_cantor(rational_from_json(it.at("x"))) == rational_from_json(it.at("value")), "cantor value");
    for (const auto& it : cases.at("riesz_nagy_values").at("items"))
        check(eval_riesz_nagy(rational_from_json(it.at("a")), rational_from_json(it.at("x"))) ==
                  rational_from_json(it.at("value")),
              "Riesz-Nagy value");
    for (const auto& it : cases.at("riesz_nagy_polyline").at("items")) {
        const Rational a = rational_from_json(it.at("a"));
        const unsigned d = it.at("depth").get<unsigned>();
        const Rational truth = from_decimal(it.at("value").get<std::string>());
        const auto e = riesz_nagy_polyline_collapsed(a, d);
        const Rational slack = pow2_neg(120);
        check(e.lo <= truth + slack && truth - slack <= e.hi, "collapsed length vs mpmath");
        if (d <= 12) {
            const Rational naive = oracle::naive_polyline({oracle::riesz_nagy_raster(a, d)});
            check(abs(naive - e.value()) <= e.radius() + oracle::naive_polyline_radius(), "collapsed vs raster");
        }
    }
    for (const auto& it : cases.at("cantor_polyline").at("items")) {
        const unsigned m = it.at("depth").get<unsigned>();
        const Rational truth = from_decimal(it.at("value").get<std::string>());
        const auto e = polyline_length(std::vector<MonotoneFn>{cantor()}, m, 64, 3);
        check(e.lo <= truth + pow2_neg(120) && truth <= e.hi + pow2_neg(120), "cantor polyline vs closed form");
        const Rational naive = oracle::naive_polyline({oracle::cantor_raster(m)});
        check(abs(naive - e.value()) <= e.radius() + oracle::naive_polyline_radius(), "cantor polyline vs raster");
    }
    for (const auto& it : cases.at("image_measure").at("items")) {
        const MonotoneFn f = fn_from_json(it.at("fn"));
        const IntervalUnion u = closed_set(it.at("set"));
        const Rational est = image_measure(f, u);
        check(est == rational_from_json(it.at("value")), "image measure vs corpus");
        const auto raster = f.kind() == "cantor"
                                ? oracle::cantor_raster(6)
                                : oracle::riesz_nagy_raster(std::get<fn::RieszNagy>(f.descriptor()).a, 8);
        const auto [lo, hi] = oracle::raster_image_measure(raster, u);
        check(lo <= est && est <= hi, "image measure vs raster bracket");
    }
    for (const auto& it : cases.at("greedy_cover_sum").at("items")) {
        const IntervalUnion u = closed_set(it.at("set"));
        const Rational delta = rational_from_json(it.at("delta"));
        const Rational truth = rational_from_json(it.at("value"));
        check(diam_sum(greedy_partition(u, delta)) == truth, "greedy partition vs corpus");
        check(oracle::brute_cover_sum(u, delta) == truth, "brute cover sum vs corpus");
    }
    {
        const auto& bc = cases.at("box_count");
        CurveSpec curve;
        curve.components = {riesz_nagy(rational_from_json(bc.at("a")))};
        const auto ms = bc.at("m").get<std::vector<unsigned>>();
        const auto s = box_count_series(curve, ms.front(), ms.back(), bc.at("sample_depth").get<unsigned>() - ms.back());
        const auto counts = bc.at("counts").get<std::vector<std::size_t>>();
        for (std::size_t i = 0; i < counts.size(); ++i) check(s.rows.at(i).count == counts[i], "box count");
        check(std::abs(s.slope_estimate - bc.at("slope").get<double>()) < 1e-12, "box-count slope");
    }
    for (const auto& it : cases.at("family_max").at("items"))
        check(max_family_size(it.at("n").get<unsigned>()).max_size == it.at("max_size").get<std::size_t>(),
              "family maximum");
    {
        const auto& th = cases.at("riesz_nagy_threshold");
        check(th.at("depth").get<unsigned>() == kDStar, "pinned d* vs corpus");
    }
    o.detail << " " << checked << " corpus checks";
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"upper bound equals n-1 for n = 3..6", criterion_upper_bound},
        {"n = 3 polyline lower bound reaches 1.9 at pinned depth", criterion_lower_bound},
        {"Cantor graph polyline matches closed form", criterion_cantor_graph},
        {"full-measure mapper truncations M = 1..10", criterion_mapper},
        {"interval staircase depths 1..12", criterion_staircase},
        {"unique-coordinate property on 257 samples", criterion_dbe},
        {"randomized measure inequality suites", criterion_lemmas},
        {"largest unique-intersection family", criterion_families},
        {"box-count slope in [0.9, 1.1]", criterion_box_count},
        {"oracle agreement on regression corpus", criterion_oracles},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " |" << o.detail.str()
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
