// Command-line front end: construct, certify, verify, emit.

#include "dbe/estimators.hpp"
#include "dbe/serialize.hpp"
#include "dbe/set_family.hpp"
#include "dbe/singular.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace dbe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CurveArgs {
    std::string spec;
    std::size_t n = 3;
    std::string a = "1/4";
    std::size_t M = 4;
    std::string alpha = "1/2";
    std::size_t staircase_depth = 3;
    unsigned preimage_depth = 10;

    void add_to(CLI::App* cmd, bool with_spec) {
        if (with_spec) cmd->add_option("--spec", spec, "Curve JSON written by `construct`");
        cmd->add_option("--n", n, "Dimension (>= 3)");
        cmd->add_option("--a", a, "Riesz-Nagy weight, p/q, not 1/2");
        cmd->add_option("--M", M, "Terms kept in each full-measure mapper");
        cmd->add_option("--alpha", alpha, "Last coordinate, p/q in [0,1]");
        cmd->add_option("--staircase-depth", staircase_depth, "Depth of each interval staircase");
        cmd->add_option("--preimage-depth", preimage_depth, "Dyadic depth of the W_j brackets");
    }

    Theorem3Params params() const {
        Theorem3Params p;
        p.n = n;
        p.a = Rational::parse(a);
        p.M = M;
        p.alpha = Rational::parse(alpha);
        p.options.mapper.staircase_depth = staircase_depth;
        p.options.preimage_depth = preimage_depth;
        return p;
    }

    Theorem3Curve build() const {
        const auto p = params();
        if (p.n < 3) throw UsageError("--n must be at least 3; a 2-dimensional dBE set is a segment");
        return build_theorem3_curve(p.n, p.a, p.M, p.alpha, p.options);
    }

    CurveSpec curve() const {
        if (spec.empty()) return build().base;
        std::ifstream in(spec);
        if (!in) throw UsageError("cannot read " + spec);
        return curve_from_document(Json::parse(in));
    }
};

struct Output {
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << text;
    }
};

std::pair<unsigned, unsigned> parse_range(const std::string& text, unsigned default_lo) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {default_lo, static_cast<unsigned>(std::stoul(text))};
        return {static_cast<unsigned>(std::stoul(text.substr(0, dots))),
                static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
    } catch (const std::logic_error&) {
        throw UsageError("malformed range \"" + text + "\"; expected lo..hi");
    }
}

int run_construct(const CurveArgs& args, const Output& out) {
    const auto curve = args.build();
    out.write(to_json(curve, args.params()).dump(2) + "\n");
    return kExitOk;
}

int run_certify(const CurveArgs& args, unsigned depth, unsigned precision, const Output& out) {
    if (precision < 32) throw UsageError("--precision must be at least 32");
    const auto cert = certify(args.curve(), depth, precision);
    out.write(to_json(cert).dump(2) + "\n");
    return cert.consistent() ? kExitOk : kExitFailed;
}

Json dbe_report(const CurveArgs& args, unsigned depth) {
    const auto curve = args.curve();
    const auto report = check_dbe_property(sample(curve, depth));
    Json violations = Json::array();
    for (std::size_t k = 0; k < report.violations.size() && k < 10; ++k) {
        const auto& v = report.violations[k];
        violations.push_back({{"i", v.i}, {"j", v.j}, {"matches", v.matches}});
    }
    return {{"suite", "dbe"},
            {"n", curve.n},
            {"depth", depth},
            {"points", (std::size_t{1} << depth) + 1},
            {"pairs_checked", report.pairs_checked},
            {"violation_count", report.violations.size()},
            {"violations", std::move(violations)},
            {"ok", report.ok}};
}

Json family_report(unsigned n) {
    const auto search = max_family_size(n);
    Json j = {{"suite", "family"},
              {"n", n},
              {"max_size", search.max_size},
              {"witness", to_json(search.witness)},
              {"search_nodes", search.nodes}};
    bool ok = search.max_size == n && unique_intersection(search.witness);
    if (n >= 3) {
        const auto pencil = near_pencil(n);
        const bool pencil_ok = unique_intersection(pencil) && pencil.members.size() == search.max_size;
        j["near_pencil"] = to_json(pencil);
        j["near_pencil_attains_max"] = pencil_ok;
        ok = ok && pencil_ok;
    }
    j["ok"] = ok;
    return j;
}

Json lemma_report(std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Json suites = Json::array();
    bool ok = true;
    const std::pair<const char*, LemmaSuiteResult (*)(std::mt19937_64&, std::size_t)> runs[] = {
        {"partition_refinement", run_partition_suite},
        {"sum_cover", run_sum_lemma_suite},
        {"lipschitz_image", run_lipschitz_suite},
        {"derivative_bound", run_derivative_suite},
    };
    for (const auto& [name, run] : runs) {
        const auto r = run(rng, trials);
        suites.push_back({{"name", name}, {"trials", r.trials}, {"violations", r.violations}});
        ok = ok && r.violations == 0;
    }
    return {{"suite", "lemmas"}, {"seed", seed}, {"results", std::move(suites)}, {"ok", ok}};
}

std::string length_series_csv(const CurveSpec& curve, unsigned lo, unsigned hi, unsigned precision) {
    std::ostringstream os;
    os << "depth,length,error_radius\n";
    for (unsigned d = lo; d <= hi; ++d) {
        const auto e = polyline_length(curve, d, precision);
        os << d << "," << decimal(e.value(), 20) << "," << decimal(e.radius(), 20, true) << "\n";
    }
    return os.str();
}

std::string boxcount_csv(const CurveSpec& curve, unsigned lo, unsigned hi, unsigned extra) {
    std::ostringstream os;
    os << "m,count\n";
    for (const auto& row : box_count_series(curve, lo, hi, extra).rows) os << row.m << "," << row.count << "\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build de Bruijn-Erdos curves and certify their 1-dimensional Hausdorff measure"};
    app.require_subcommand(1);

    CurveArgs construct_args;
    Output construct_out;
    auto* construct = app.add_subcommand("construct", "Build a curve and write its JSON description");
    construct_args.add_to(construct, false);
    construct->get_option("--n")->required();
    construct->add_option("-o,--output", construct_out.path, "Output file (default stdout)");

    CurveArgs certify_args;
    Output certify_out;
    unsigned certify_depth = 14;
    unsigned precision = kDefaultPrecisionBits;
    auto* certify_cmd = app.add_subcommand("certify", "Exact upper and certified lower bound for H^1");
    certify_args.add_to(certify_cmd, true);
    certify_cmd->add_option("--depth", certify_depth, "Polyline depth");
    certify_cmd->add_option("--precision", precision, "Fractional bits of the chord enclosures (>= 32)")
        ->envname("DBE_PRECISION");
    certify_cmd->add_option("-o,--output", certify_out.path, "Output file (default stdout)");

    CurveArgs verify_args;
    Output verify_out;
    bool verify_dbe = false, verify_family = false, verify_lemmas = false;
    unsigned verify_depth = 8;
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    verify_args.add_to(verify, true);
    auto* modes = verify->add_option_group("suite");
    modes->add_flag("--dbe", verify_dbe, "Pairwise unique-coordinate check on curve samples");
    modes->add_flag("--family", verify_family, "Largest unique-intersection family on [n]");
    modes->add_flag("--lemmas", verify_lemmas, "Randomized measure inequality suites");
    modes->require_option(1);
    verify->add_option("--d", verify_depth, "Sample depth for --dbe");
    verify->add_option("--trials", trials, "Trials per suite for --lemmas");
    verify->add_option("--seed", seed, "Seed for --lemmas");
    verify->add_option("-o,--output", verify_out.path, "Output file (default stdout)");

    CurveArgs emit_args;
    Output emit_out;
    bool emit_samples = false, emit_lengths = false, emit_boxes = false;
    std::string emit_d = "8", emit_m = "4..10";
    unsigned extra_depth = 2;
    unsigned emit_precision = kDefaultPrecisionBits;
    auto* emit = app.add_subcommand("emit", "Write CSV data for plotting");
    emit_args.add_to(emit, true);
    auto* series = emit->add_option_group("series");
    series->add_flag("--samples", emit_samples, "Curve points at x = k 2^-d");
    series->add_flag("--length-series", emit_lengths, "Polyline length for each depth in --d lo..hi");
    series->add_flag("--boxcount", emit_boxes, "Box counts for each m in --m lo..hi");
    series->require_option(1);
    emit->add_option("--d", emit_d, "Depth, or depth range lo..hi");
    emit->add_option("--m", emit_m, "Box-count range lo..hi");
    emit->add_option("--extra-depth", extra_depth, "Sampling depth above the finest box-count grid");
    emit->add_option("--precision", emit_precision, "Fractional bits for lengths")->envname("DBE_PRECISION");
    emit->add_option("-o,--output", emit_out.path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(construct_args, construct_out);
        if (certify_cmd->parsed()) return run_certify(certify_args, certify_depth, precision, certify_out);
        if (verify->parsed()) {
            Json report;
            if (verify_dbe) report = dbe_report(verify_args, verify_depth);
            if (verify_family) report = family_report(static_cast<unsigned>(verify_args.n));
            if (verify_lemmas) report = lemma_report(trials, seed);
            report["schema_version"] = kSchemaVersion;
            verify_out.write(report.dump(2) + "\n");
            return report["ok"].get<bool>() ? kExitOk : kExitFailed;
        }
        if (emit->parsed()) {
            const CurveSpec curve = emit_args.curve();
            if (emit_samples) {
                const auto [lo, hi] = parse_range(emit_d, 0);
                if (lo != hi && emit_d.find("..") != std::string::npos)
                    throw UsageError("--samples takes a single depth");
                std::ostringstream os;
                write_samples_csv(os, sample(curve, hi));
                emit_out.write(os.str());
            } else if (emit_lengths) {
                if (emit_precision < 32) throw UsageError("--precision must be at least 32");
                const auto [lo, hi] = parse_range(emit_d, 1);
                if (lo > hi) throw UsageError("empty depth range");
                emit_out.write(length_series_csv(curve, lo, hi, emit_precision));
            } else {
                const auto [lo, hi] = parse_range(emit_m, 1);
                if (lo > hi) throw UsageError("empty box-count range");
                emit_out.write(boxcount_csv(curve, lo, hi, extra_depth));
            }
            return kExitOk;
        }
    } catch (const NotEvaluable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
