#pragma once

// JSON and CSV encodings. Rationals are always written as "p/q" strings.

#include "dbe/curve.hpp"
#include "dbe/estimators.hpp"
#include "dbe/set_family.hpp"

#include <json.hpp>

#include <iosfwd>

namespace dbe {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

/// Array of {lo, hi, lo_closed, hi_closed}.
Json to_json(const IntervalUnion& u);
IntervalUnion union_from_json(const Json& j);

/// Array of interval-union encodings.
Json to_json(const LRPartition& p);
LRPartition partition_from_json(const Json& j);

/// Nested arrays of [lo, hi] per level, plus the excluded set.
Json to_json(const NestedIntervalTree& t);
NestedIntervalTree tree_from_json(const Json& j);

/// Object tagged with "kind".
Json to_json(const MonotoneFn& f);
MonotoneFn fn_from_json(const Json& j);

Json to_json(const CurveSpec& c);
CurveSpec curve_from_json(const Json& j);

struct Theorem3Params {
    std::size_t n = 3;
    Rational a{1, 4};
    std::size_t M = 4;
    Rational alpha{1, 2};
    Theorem3Options options{};
};

/// The curve plus construction parameters, null sets, W brackets and Q1.
Json to_json(const Theorem3Curve& c, const Theorem3Params& params);

/// Accepts either a bare curve encoding or a document with a "curve" member.
CurveSpec curve_from_document(const Json& j);

/// Decimal string of r with `digits` fractional digits, rounded toward
/// -infinity or +infinity.
std::string decimal(const Rational& r, unsigned digits, bool round_up = false);

/// {schema_version, upper, lower, error_radius, depth, precision_bits,
/// method, lower_enclosure}; lower and error_radius are decimals chosen so
/// that [lower - error_radius, lower + error_radius] contains the enclosure.
Json to_json(const H1Certificate& c);

/// Array of sorted element lists.
Json to_json(const SetFamily& f);
SetFamily family_from_json(unsigned n, const Json& j);

/// One row per point, "p/q" cells, header x1..xn.
void write_samples_csv(std::ostream& os, const std::vector<Point>& pts);

} // namespace dbe
