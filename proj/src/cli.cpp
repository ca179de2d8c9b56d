#include "cuspfill/cli.hpp"

#include "cuspfill/cusp_lattice.hpp"
#include "cuspfill/error.hpp"
#include "cuspfill/filling_bounds.hpp"
#include "cuspfill/report_io.hpp"
#include "cuspfill/verifiers.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>

namespace cuspfill::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ShapeFlags {
    std::string tau_alpha;
    std::string tau_beta;
    double height = 0.0;

    bool any() const { return !tau_alpha.empty() || !tau_beta.empty() || height != 0.0; }
};

std::complex<double> complex_flag(const std::string& name, const std::string& text)
{
    const auto value = io::parse_complex_literal(text);
    if (!value)
        throw UsageError("cannot parse " + name + " '" + text + "' (expected e.g. 1.5-0.25i)");
    return *value;
}

std::optional<cusp::CuspShape> shape_from(const ShapeFlags& flags, bool required)
{
    if (!required && !flags.any())
        return std::nullopt;
    if (flags.tau_alpha.empty() || flags.tau_beta.empty() || flags.height == 0.0)
        throw UsageError("--tau-alpha, --tau-beta and --height must be given together");
    return cusp::CuspShape(complex_flag("--tau-alpha", flags.tau_alpha), complex_flag("--tau-beta", flags.tau_beta),
                           flags.height);
}

void add_shape_flags(CLI::App* cmd, ShapeFlags& flags)
{
    cmd->add_option("--tau-alpha", flags.tau_alpha, "translation of alpha, e.g. 1+0i");
    cmd->add_option("--tau-beta", flags.tau_beta, "translation of beta, e.g. 0.5+2i");
    cmd->add_option("--height", flags.height, "height T of the cusp horosphere");
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed)
{
    for (const auto f : allowed)
        if (format == f)
            return;
    throw UsageError("format '" + format + "' is not valid for this command");
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Length bounds for Dehn fillings along twisted slopes, with geometric verifiers"};
    app.require_subcommand(1);

    std::string format = "text";

    // bounds
    auto* bounds = app.add_subcommand("bounds", "length interval for the core geodesic");
    int genus = 0;
    std::int64_t twist = 0;
    bool outward = false;
    ShapeFlags bounds_shape;
    bounds->add_option("--genus", genus, "handlebody genus (>= 2)")->required();
    bounds->add_option("--n", twist, "Dehn twist power")->required();
    bounds->add_option("--format", format, "text|json");
    bounds->add_flag("--outward", outward, "widen each bound by 8 ulps");
    add_shape_flags(bounds, bounds_shape);

    // cusp
    auto* cusp_cmd = app.add_subcommand("cusp", "flat geometry of a cusp torus");
    ShapeFlags cusp_shape;
    std::string slope_text;
    add_shape_flags(cusp_cmd, cusp_shape);
    cusp_cmd->add_option("--slope", slope_text, "slope p,q")->required();
    cusp_cmd->add_option("--format", format, "text|json");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "randomized verification suites");
    std::string suite;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    bool timing = false;
    double separation = verify::kFact2Separation;
    verify_cmd->add_option("suite", suite, "lemma|fact1|fact2|torus-area|cusp-area|all")
        ->required()
        ->check(CLI::IsMember({"lemma", "fact1", "fact2", "torus-area", "cusp-area", "all"}));
    verify_cmd->add_option("--trials", trials, "number of trials (grid size for torus-area)");
    verify_cmd->add_option("--seed", seed, "master seed");
    verify_cmd->add_option("--format", format, "text|json");
    verify_cmd->add_flag("--timing", timing, "report wall-clock time");
    verify_cmd->add_option("--separation", separation, "fact2 only: minimal projected distance (default 2)");

    // table
    auto* table = app.add_subcommand("table", "CSV table of length bounds");
    std::string genus_range;
    std::string n_range;
    std::string out_path;
    std::string table_format = "csv";
    table->add_option("--genus", genus_range, "genus range a..b")->required();
    table->add_option("--n", n_range, "twist power range c..d")->required();
    table->add_option("--out", out_path, "output path (stdout when omitted)");
    table->add_option("--format", table_format, "csv");

    std::vector<std::string> argv_storage{"cuspfill"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const int digits = io::precision_digits();
    try {
        if (*bounds) {
            require_format(format, {"text", "json"});
            const auto shape = shape_from(bounds_shape, false);
            const auto rounding = outward ? filling::Rounding::outward : filling::Rounding::nearest;
            const filling::PipelineReport report = filling::evaluate_pipeline({genus, twist}, shape, rounding);
            if (format == "json")
                out << io::to_json(report).dump() << '\n';
            else
                io::write_text(out, report, digits);
            return report.admissible ? kExitOk : kExitInapplicable;
        }

        if (*cusp_cmd) {
            require_format(format, {"text", "json"});
            const auto slope_pair = io::parse_slope(slope_text);
            if (!slope_pair)
                throw UsageError("cannot parse --slope '" + slope_text + "' (expected p,q)");
            const cusp::Slope slope(slope_pair->first, slope_pair->second);
            const cusp::CuspShape shape = *shape_from(cusp_shape, true);
            const double flat = cusp::flat_length(shape, slope);
            const double area = cusp::torus_area(shape);
            const double inj = cusp::injectivity_radius(shape);
            const double normalized = cusp::normalized_length(shape, slope);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["slope"] = {slope.p(), slope.q()};
                j["flat_length"] = flat;
                j["area"] = area;
                j["injectivity_radius"] = inj;
                j["normalized_length"] = normalized;
                out << j.dump() << '\n';
            } else {
                out << "slope: " << slope.p() << ',' << slope.q() << '\n'
                    << "flat_length: " << io::format_number(flat, digits) << '\n'
                    << "area: " << io::format_number(area, digits) << '\n'
                    << "injectivity_radius: " << io::format_number(inj, digits) << '\n'
                    << "normalized_length: " << io::format_number(normalized, digits) << '\n';
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            require_format(format, {"text", "json"});
            if (trials < 1)
                throw UsageError("--trials must be at least 1");
            if (suite == "torus-area" && trials < 100)
                throw UsageError("torus-area needs --trials (grid size) of at least 100");

            // `all` scans the torus at the reference grid of 300.
            constexpr int kReferenceGrid = 300;
            const int grid = suite == "torus-area" ? static_cast<int>(trials) : kReferenceGrid;
            const std::map<std::string, std::function<verify::TrialReport()>> suites{
                {"lemma", [&] { return verify::run_lemma_campaign(trials, seed); }},
                {"fact1", [&] { return verify::run_fact1_sweep(trials, seed); }},
                {"fact2", [&] { return verify::run_fact2_sweep(trials, seed, separation); }},
                {"torus-area", [&] { return verify::run_torus_area_suite(grid); }},
                {"cusp-area", [&] { return verify::run_cusp_area_sweep(trials, seed); }},
            };
            const std::vector<std::string> order =
                suite == "all" ? std::vector<std::string>{"lemma", "fact1", "fact2", "torus-area", "cusp-area"}
                               : std::vector<std::string>{suite};

            bool failed = false;
            nlohmann::ordered_json combined;
            for (const auto& name : order) {
                const auto start = Clock::now();
                verify::TrialReport report = suites.at(name)();
                if (timing)
                    report.wall_ms = elapsed_ms(start);
                failed = failed || report.failures > 0;
                if (format == "json") {
                    combined[name] = io::to_json(report);
                } else {
                    if (order.size() > 1)
                        out << "[" << name << "]\n";
                    io::write_text(out, report, digits);
                }
            }
            if (format == "json")
                out << (order.size() > 1 ? combined : combined[suite]).dump() << '\n';
            return failed ? kExitVerificationFailed : kExitOk;
        }

        if (*table) {
            require_format(table_format, {"csv"});
            const auto g = io::parse_range(genus_range);
            const auto n = io::parse_range(n_range);
            if (!g || !n)
                throw UsageError("ranges must look like a..b with a <= b");
            if (out_path.empty()) {
                io::write_bounds_table(out, *g, *n, digits);
                return kExitOk;
            }
            if (g->first < 2)
                throw Error(Errc::GenusTooSmall, "genus must be at least 2");
            std::ofstream file(out_path, std::ios::binary);
            if (!file)
                throw UsageError("cannot write '" + out_path + "'");
            io::write_bounds_table(file, *g, *n, digits);
            if (!file.flush())
                throw UsageError("cannot write '" + out_path + "'");
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace cuspfill::cli
