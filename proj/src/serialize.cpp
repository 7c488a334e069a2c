#include "dbe/serialize.hpp"

#include <ostream>
#include <stdexcept>

namespace dbe {

namespace {

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

std::vector<Rational> rationals_from(const Json& j) {
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

Json endpoints(const Interval& iv) { return Json::array({to_json(iv.lo), to_json(iv.hi)}); }

Interval closed_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [lo, hi]");
    return Interval::closed(rational_from_json(j[0]), rational_from_json(j[1]));
}

BigInt pow10(unsigned digits) {
    BigInt s = 1;
    for (unsigned i = 0; i < digits; ++i) s *= 10;
    return s;
}

std::shared_ptr<const MonotoneFn> boxed(const Json& j) { return std::make_shared<const MonotoneFn>(fn_from_json(j)); }

} // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("rational must be a \"p/q\" string");
}

Json to_json(const Interval& iv) {
    return {{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"lo_closed", iv.lo_closed}, {"hi_closed", iv.hi_closed}};
}

Interval interval_from_json(const Json& j) {
    return {rational_from_json(j.at("lo")), rational_from_json(j.at("hi")), j.value("lo_closed", true),
            j.value("hi_closed", true)};
}

Json to_json(const IntervalUnion& u) {
    Json a = Json::array();
    for (const auto& c : u.components()) a.push_back(to_json(c));
    return a;
}

IntervalUnion union_from_json(const Json& j) {
    std::vector<Interval> parts;
    for (const auto& e : j) parts.push_back(interval_from_json(e));
    return IntervalUnion(std::move(parts));
}

Json to_json(const LRPartition& p) {
    Json a = Json::array();
    for (const auto& b : p.blocks) a.push_back(to_json(b));
    return a;
}

LRPartition partition_from_json(const Json& j) {
    LRPartition p;
    for (const auto& b : j) p.blocks.push_back(union_from_json(b));
    return p;
}

Json to_json(const NestedIntervalTree& t) {
    Json levels = Json::array();
    for (const auto& level : t.levels) {
        Json row = Json::array();
        for (const auto& iv : level) row.push_back(endpoints(iv));
        levels.push_back(std::move(row));
    }
    return {{"root", endpoints(t.root)}, {"excluded", to_json(t.excluded)}, {"levels", std::move(levels)}};
}

NestedIntervalTree tree_from_json(const Json& j) {
    NestedIntervalTree t;
    t.root = closed_from(j.at("root"));
    t.excluded = union_from_json(j.at("excluded"));
    for (const auto& row : j.at("levels")) {
        std::vector<Interval> level;
        for (const auto& e : row) level.push_back(closed_from(e));
        t.levels.push_back(std::move(level));
    }
    if (const auto problem = check_tree_conditions(t); !problem.empty())
        throw std::invalid_argument("staircase tree: " + problem);
    return t;
}

Json to_json(const MonotoneFn& f) {
    Json j = std::visit(
        [](const auto& d) -> Json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, fn::Cantor>) {
                return Json::object();
            } else if constexpr (std::is_same_v<T, fn::RieszNagy>) {
                return {{"a", to_json(d.a)}};
            } else if constexpr (std::is_same_v<T, fn::Affine>) {
                return {{"slope", to_json(d.slope)}, {"offset", to_json(d.offset)}};
            } else if constexpr (std::is_same_v<T, fn::PiecewiseLinear>) {
                return {{"xs", rationals(d.xs)}, {"ys", rationals(d.ys)}};
            } else if constexpr (std::is_same_v<T, fn::IntervalStaircase>) {
                return {{"tree", to_json(*d.tree)}};
            } else if constexpr (std::is_same_v<T, fn::WeightedSum>) {
                Json terms = Json::array();
                for (const auto& t : d.terms) terms.push_back(to_json(t));
                return {{"terms", std::move(terms)}, {"weights", rationals(d.weights)}};
            } else if constexpr (std::is_same_v<T, fn::Composition>) {
                return {{"outer", to_json(*d.outer)}, {"inner", to_json(*d.inner)}};
            } else if constexpr (std::is_same_v<T, fn::Restriction>) {
                return {{"fn", to_json(*d.fn)}, {"domain", to_json(d.domain)}};
            } else {
                Json pieces = Json::array();
                for (const auto& [iv, g] : d.pieces) pieces.push_back({{"on", to_json(iv)}, {"fn", to_json(g)}});
                return {{"pieces", std::move(pieces)}};
            }
        },
        f.descriptor());
    j["kind"] = f.kind();
    return j;
}

MonotoneFn fn_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cantor") return cantor();
    if (kind == "riesz_nagy") return riesz_nagy(rational_from_json(j.at("a")));
    if (kind == "affine") return affine(rational_from_json(j.at("slope")), rational_from_json(j.at("offset")));
    if (kind == "piecewise_linear") return piecewise_linear(rationals_from(j.at("xs")), rationals_from(j.at("ys")));
    if (kind == "interval_staircase") return staircase_from_tree(tree_from_json(j.at("tree")));
    if (kind == "weighted_sum") {
        std::vector<MonotoneFn> terms;
        for (const auto& t : j.at("terms")) terms.push_back(fn_from_json(t));
        return weighted_sum(std::move(terms), rationals_from(j.at("weights")));
    }
    if (kind == "composition") return compose(*boxed(j.at("outer")), *boxed(j.at("inner")));
    if (kind == "restriction") return restrict_to(fn_from_json(j.at("fn")), union_from_json(j.at("domain")));
    if (kind == "piecewise") {
        std::vector<std::pair<Interval, MonotoneFn>> pieces;
        for (const auto& p : j.at("pieces")) pieces.emplace_back(interval_from_json(p.at("on")), fn_from_json(p.at("fn")));
        return piecewise(std::move(pieces));
    }
    throw std::invalid_argument("unknown function kind \"" + kind + "\"");
}

Json to_json(const CurveSpec& c) {
    Json comps = Json::array();
    for (const auto& f : c.components) comps.push_back(to_json(f));
    Json j = {{"schema_version", kSchemaVersion},
              {"n", c.n},
              {"alpha", to_json(c.alpha)},
              {"components", std::move(comps)}};
    if (c.piece_domains) j["piece_domains"] = to_json(*c.piece_domains);
    return j;
}

CurveSpec curve_from_json(const Json& j) {
    if (j.value("schema_version", kSchemaVersion) != kSchemaVersion)
        throw std::invalid_argument("unsupported schema_version");
    CurveSpec c;
    c.n = j.at("n").get<std::size_t>();
    c.alpha = rational_from_json(j.at("alpha"));
    for (const auto& f : j.at("components")) c.components.push_back(fn_from_json(f));
    if (j.contains("piece_domains")) c.piece_domains = partition_from_json(j.at("piece_domains"));
    c.validate();
    return c;
}

Json to_json(const Theorem3Curve& c, const Theorem3Params& p) {
    Json mappers = Json::array();
    for (const auto& m : c.mappers) {
        Json intervals = Json::array();
        for (const auto& iv : m.intervals) intervals.push_back(endpoints(iv));
        mappers.push_back({{"terms", m.terms},
                           {"intervals", std::move(intervals)},
                           {"null_set", to_json(m.null_set)},
                           {"image_lower_bound", to_json(m.image_lower_bound)},
                           {"image_measure", to_json(mapper_image_measure(m))}});
    }
    Json W = Json::array();
    for (const auto& w : c.W)
        W.push_back({{"inner", to_json(w.inner)}, {"outer", to_json(w.outer)}, {"cell_depth", w.cell_depth}});
    return {{"schema_version", kSchemaVersion},
            {"parameters",
             {{"n", p.n},
              {"a", to_json(p.a)},
              {"M", p.M},
              {"alpha", to_json(p.alpha)},
              {"staircase_depth", p.options.mapper.staircase_depth},
              {"preimage_depth", p.options.preimage_depth}}},
            {"curve", to_json(c.base)},
            {"mappers", std::move(mappers)},
            {"W", std::move(W)},
            {"Q1", to_json(c.Q1)}};
}

CurveSpec curve_from_document(const Json& j) {
    if (j.contains("curve")) return curve_from_json(j.at("curve"));
    return curve_from_json(j);
}

std::string decimal(const Rational& r, unsigned digits, bool round_up) {
    const BigInt scale = pow10(digits);
    BigInt q = round_up ? ceil(r * Rational(scale)) : floor(r * Rational(scale));
    const bool negative = q < 0;
    if (negative) q = -q;
    std::string s = q.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

Json to_json(const H1Certificate& c) {
    constexpr unsigned digits = 24;
    const Rational mid = c.lower.value();
    const std::string lower = decimal(mid, digits);
    // the rounded midpoint is at most 10^-digits below the true one
    const Rational slack(1, pow10(digits));
    return {{"schema_version", kSchemaVersion},
            {"upper", to_json(c.upper)},
            {"lower", lower},
            {"error_radius", decimal(c.lower.radius() + slack, digits, true)},
            {"lower_enclosure", Json::array({to_json(c.lower.lo), to_json(c.lower.hi)})},
            {"depth", c.lower_depth},
            {"precision_bits", c.precision_bits},
            {"method", {{"upper", c.upper_method}, {"lower", c.lower_method}}},
            {"consistent", c.consistent()}};
}

Json to_json(const SetFamily& f) {
    Json a = Json::array();
    for (auto m : f.members) a.push_back(elements_of(m));
    return a;
}

SetFamily family_from_json(unsigned n, const Json& j) {
    SetFamily f{n, {}};
    for (const auto& e : j) f.members.push_back(mask_of(e.get<std::vector<unsigned>>()));
    f.validate();
    return f;
}

void write_samples_csv(std::ostream& os, const std::vector<Point>& pts) {
    const std::size_t dim = pts.empty() ? 0 : pts.front().size();
    for (std::size_t c = 0; c < dim; ++c) os << (c ? "," : "") << "x" << c + 1;
    os << "\n";
    for (const auto& p : pts) {
        for (std::size_t c = 0; c < p.size(); ++c) os << (c ? "," : "") << p[c].str();
        os << "\n";
    }
}

} // namespace dbe
