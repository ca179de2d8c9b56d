#include "cuspfill/report_io.hpp"

#include "cuspfill/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <regex>
#include <sstream>

namespace cuspfill::io {

namespace {

template <typename T>
std::optional<T> parse_integer(std::string_view text)
{
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        return std::nullopt;
    return value;
}

nlohmann::ordered_json optional_number(const std::optional<double>& v)
{
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

int precision_digits()
{
    const char* raw = std::getenv("CUSPFILL_PRECISION_DIGITS");
    if (raw == nullptr)
        return kDefaultPrecisionDigits;
    const auto digits = parse_integer<int>(raw);
    if (!digits || *digits < 1 || *digits > 17)
        return kDefaultPrecisionDigits;
    return *digits;
}

std::string format_number(double value, int digits)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(digits) << value;
    return os.str();
}

std::optional<std::complex<double>> parse_complex_literal(std::string_view text)
{
    static const std::regex grammar(R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)");
    std::match_results<std::string_view::const_iterator> match;
    if (!std::regex_match(text.begin(), text.end(), match, grammar))
        return std::nullopt;
    const double re = std::strtod(match[1].str().c_str(), nullptr);
    const double im = std::strtod(match[2].str().c_str(), nullptr);
    if (!std::isfinite(re) || !std::isfinite(im))
        return std::nullopt;
    return std::complex<double>(re, im);
}

std::optional<std::pair<std::int64_t, std::int64_t>> parse_slope(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        return std::nullopt;
    const auto p = parse_integer<std::int64_t>(text.substr(0, comma));
    const auto q = parse_integer<std::int64_t>(text.substr(comma + 1));
    if (!p || !q)
        return std::nullopt;
    return std::pair{*p, *q};
}

std::optional<IntRange> parse_range(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos)
        return std::nullopt;
    const auto first = parse_integer<std::int64_t>(text.substr(0, dots));
    const auto last = parse_integer<std::int64_t>(text.substr(dots + 2));
    if (!first || !last || *first > *last)
        return std::nullopt;
    return IntRange{*first, *last};
}

nlohmann::ordered_json to_json(const filling::PipelineReport& r)
{
    nlohmann::ordered_json j;
    j["genus"] = r.genus;
    j["n"] = r.n;
    j["epsilon"] = r.epsilon;
    j["r_eps"] = r.r_eps;
    j["mode"] = filling::mode_name(r.mode);
    j["L_squared_lo"] = r.length_squared_lo;
    j["L_squared_hi"] = r.length_squared_hi;
    j["length_lo"] = optional_number(r.length_lo);
    j["length_hi"] = optional_number(r.length_hi);
    j["admissible"] = r.admissible;
    j["min_n"] = r.min_n;
    return j;
}

nlohmann::ordered_json to_json(const verify::TrialReport& r)
{
    nlohmann::ordered_json j;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["worst_margin"] = r.worst_margin;
    j["seed"] = r.seed;
    j["wall_ms"] = optional_number(r.wall_ms);
    return j;
}

void write_text(std::ostream& out, const filling::PipelineReport& r, int digits)
{
    const auto num = [digits](double v) { return format_number(v, digits); };
    const auto opt = [&num](const std::optional<double>& v) { return v ? num(*v) : std::string("n/a"); };
    out << "genus: " << r.genus << '\n'
        << "n: " << r.n << '\n'
        << "epsilon: " << num(r.epsilon) << '\n'
        << "r_eps: " << num(r.r_eps) << '\n'
        << "mode: " << filling::mode_name(r.mode) << '\n'
        << "L_squared: [" << num(r.length_squared_lo) << ", " << num(r.length_squared_hi) << "]\n"
        << "length: (" << opt(r.length_lo) << ", " << opt(r.length_hi) << ")\n"
        << "admissible: " << (r.admissible ? "true" : "false") << '\n'
        << "min_n: " << r.min_n << '\n';
}

void write_text(std::ostream& out, const verify::TrialReport& r, int digits)
{
    out << "trials: " << r.trials << '\n'
        << "failures: " << r.failures << '\n'
        << "worst_margin: " << format_number(r.worst_margin, digits) << '\n'
        << "seed: " << r.seed << '\n';
    if (r.wall_ms)
        out << "wall_ms: " << format_number(*r.wall_ms, digits) << '\n';
}

void write_bounds_table(std::ostream& out, const IntRange& genus, const IntRange& n, int digits)
{
    if (genus.first < 2)
        throw Error(Errc::GenusTooSmall, "genus must be at least 2");
    const auto num = [digits](double v) { return format_number(v, digits); };
    out << "genus,n,admissible,min_n,length_lo,length_hi,intro_lo,intro_hi\n";
    for (std::int64_t g = genus.first; g <= genus.last; ++g) {
        const filling::TheoremInput input{static_cast<int>(g), 0};
        const std::int64_t min_n = filling::min_admissible_twist(input.genus);
        for (std::int64_t k = n.first; k <= n.last; ++k) {
            const filling::TheoremInput row{input.genus, k};
            const bool admissible = k >= min_n;
            out << g << ',' << k << ',' << (admissible ? "true" : "false") << ',' << min_n << ',';
            if (admissible) {
                const filling::BoundInterval b = filling::theorem_bounds(row);
                out << num(b.lo) << ',' << num(b.hi);
            } else {
                out << ',';
            }
            out << ',';
            if (g >= 3 && k >= filling::kIntroMinTwist) {
                const filling::BoundInterval b = filling::intro_bounds(row);
                out << num(b.lo) << ',' << num(b.hi);
            } else {
                out << ',';
            }
            out << '\n';
        }
    }
}

} // namespace cuspfill::io
