#include "cuspfill/filling_bounds.hpp"

#include "cuspfill/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cuspfill::filling {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this twist power the worst-case bound is not monotone in a/b.
constexpr std::int64_t kMonotoneFrom = 5;

void require_genus(int genus)
{
    if (genus < 2)
        throw Error(Errc::GenusTooSmall, "genus must be at least 2");
}

double widen(double x, double toward, Rounding rounding)
{
    if (rounding == Rounding::nearest)
        return x;
    for (int i = 0; i < kOutwardUlps; ++i)
        x = std::nextafter(x, toward);
    return x;
}

BoundInterval widen(BoundInterval b, Rounding rounding)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    return BoundInterval{widen(b.lo, -inf, rounding), widen(b.hi, inf, rounding)};
}

} // namespace

MargulisChoice margulis(int genus)
{
    require_genus(genus);
    const double epsilon = genus >= 3 ? std::log(3.0) : 2.0 * std::asinh(std::pow(2.0, 0.25) / 4.0);
    return MargulisChoice{genus, epsilon, 2.0 * std::sinh(epsilon / 2.0)};
}

BoundInterval hk_window(double normalized_length, Rounding rounding)
{
    if (std::isnan(normalized_length))
        throw Error(Errc::InvalidArgument, "normalized length is NaN");
    if (normalized_length < kFillingGate)
        throw Error(Errc::NormalizedLengthTooShort, "normalized length below 7.823; filling theorem does not apply");
    const double l2 = normalized_length * normalized_length;
    return widen(BoundInterval{kTwoPi / (l2 + kWindowLowerShift), kTwoPi / (l2 - kWindowUpperShift)}, rounding);
}

double worst_case_length_squared(double r_eps, std::int64_t n)
{
    const double nd = static_cast<double>(n);
    return nd * nd * (r_eps / 2.5) - 2.0 * nd + 2.5 / r_eps;
}

double capped_length_squared(int genus, double r_eps, std::int64_t n)
{
    const double span = kTwoPi * static_cast<double>(n) * (genus - 1) + kBetaCap;
    return span * span / (2.0 * std::sqrt(3.0) * r_eps * r_eps);
}

std::int64_t min_admissible_twist(int genus)
{
    const double r_eps = margulis(genus).r_eps;
    const double gate = kFillingGate * kFillingGate;
    std::int64_t n = kMonotoneFrom;
    while (!(worst_case_length_squared(r_eps, n) > gate))
        ++n;
    return n;
}

BoundInterval theorem_bounds(const TheoremInput& input, Rounding rounding)
{
    const MargulisChoice m = margulis(input.genus);
    const std::int64_t min_n = min_admissible_twist(input.genus);
    if (input.twist_power < min_n)
        throw TwistPowerTooSmall(input.twist_power, min_n);
    const double lo = kTwoPi / (capped_length_squared(input.genus, m.r_eps, input.twist_power) + kWindowLowerShift);
    const double hi = kTwoPi / (worst_case_length_squared(m.r_eps, input.twist_power) - kWindowUpperShift);
    return widen(BoundInterval{lo, hi}, rounding);
}

BoundInterval intro_bounds(const TheoremInput& input)
{
    require_genus(input.genus);
    if (input.genus < 3 || input.twist_power < kIntroMinTwist)
        throw Error(Errc::OutOfSimplifiedRange, "simplified bounds need genus >= 3 and n >= 14");
    const double g = input.genus;
    const double n = static_cast<double>(input.twist_power);
    return BoundInterval{kIntroLowerCoefficient / (g * g * n * n), kIntroUpperCoefficient / (n * n)};
}

PropositionCaps proposition_caps(int genus)
{
    require_genus(genus);
    return PropositionCaps{kTwoPi * (genus - 1), kBetaCap};
}

std::string_view mode_name(PipelineMode mode)
{
    return mode == PipelineMode::shape ? "shape" : "worst-case";
}

PipelineReport evaluate_pipeline(const TheoremInput& input, const std::optional<cusp::CuspShape>& shape,
                                 Rounding rounding)
{
    const MargulisChoice m = margulis(input.genus);
    PipelineReport report;
    report.genus = input.genus;
    report.n = input.twist_power;
    report.epsilon = m.epsilon;
    report.r_eps = m.r_eps;
    report.min_n = min_admissible_twist(input.genus);

    if (shape) {
        // The cusp torus sits in the thick part: its systole is at least r_eps.
        if (2.0 * cusp::injectivity_radius(*shape) < m.r_eps)
            throw Error(Errc::InvalidShape, "cusp shape violates the thick-part constraint 2*injectivity_radius >= r_eps");
        report.mode = PipelineMode::shape;
        const double l = cusp::normalized_length(*shape, cusp::twist_slope(input.twist_power));
        report.length_squared_lo = l * l;
        report.length_squared_hi = l * l;
        report.admissible = l >= kFillingGate;
        if (report.admissible) {
            const BoundInterval w = hk_window(l, rounding);
            report.length_lo = w.lo;
            report.length_hi = w.hi;
        }
        return report;
    }

    report.mode = PipelineMode::worst_case;
    report.length_squared_lo = worst_case_length_squared(m.r_eps, input.twist_power);
    report.length_squared_hi = capped_length_squared(input.genus, m.r_eps, input.twist_power);
    report.admissible = input.twist_power >= report.min_n;
    if (report.admissible) {
        const BoundInterval b = theorem_bounds(input, rounding);
        report.length_lo = b.lo;
        report.length_hi = b.hi;
    }
    return report;
}

PipelineReport pipeline(const TheoremInput& input, const std::optional<cusp::CuspShape>& shape, Rounding rounding)
{
    PipelineReport report = evaluate_pipeline(input, shape, rounding);
    if (!report.admissible) {
        if (report.mode == PipelineMode::shape)
            hk_window(std::sqrt(report.length_squared_lo), rounding);
        throw TwistPowerTooSmall(input.twist_power, report.min_n);
    }
    return report;
}

} // namespace cuspfill::filling
