#ifndef CUSPFILL_FILLING_BOUNDS_HPP
#define CUSPFILL_FILLING_BOUNDS_HPP

// Length bounds for the core geodesic of the filling along mu_n = n alpha + beta.
//
// Constants are taken verbatim as decimals. Arithmetic is round-to-nearest
// and NOT certified; Rounding::outward only widens each endpoint by
// kOutwardUlps ulps for conservative reporting.

#include "cuspfill/cusp_lattice.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace cuspfill::filling {

inline constexpr double kFillingGate = 7.823;        // minimal normalized length
inline constexpr double kWindowLowerShift = 16.17;   // 2 pi / (L^2 + shift)
inline constexpr double kWindowUpperShift = 28.78;   // 2 pi / (L^2 - shift)
inline constexpr double kBetaCap = 5.0;
inline constexpr double kIntroLowerCoefficient = 0.7;
inline constexpr double kIntroUpperCoefficient = 34.3;
inline constexpr std::int64_t kIntroMinTwist = 14;
inline constexpr int kOutwardUlps = 8;

enum class Rounding { nearest, outward };

struct MargulisChoice {
    int genus = 0;
    double epsilon = 0.0;
    double r_eps = 0.0;
};

// Open interval (lo, hi) for a geodesic length.
struct BoundInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(const BoundInterval& inner) const { return lo < inner.lo && inner.hi < hi; }
};

struct TheoremInput {
    int genus = 0;
    std::int64_t twist_power = 0;
};

struct PropositionCaps {
    double alpha_cap = 0.0;
    double beta_cap = 0.0;
};

MargulisChoice margulis(int genus);

// 2 pi / (L^2 + 16.17) < length < 2 pi / (L^2 - 28.78) for L >= 7.823.
BoundInterval hk_window(double normalized_length, Rounding rounding = Rounding::nearest);

// Worst-case lower bound on L(mu_n)^2 forced by a/b >= r_eps/2.5:
// n^2 r_eps / 2.5 - 2n + 2.5 / r_eps.
double worst_case_length_squared(double r_eps, std::int64_t n);

// Worst-case upper bound on L(mu_n)^2 from the alpha/beta caps:
// (2 pi n (g - 1) + 5)^2 / (2 sqrt(3) r_eps^2).
double capped_length_squared(int genus, double r_eps, std::int64_t n);

std::int64_t min_admissible_twist(int genus);

BoundInterval theorem_bounds(const TheoremInput& input, Rounding rounding = Rounding::nearest);
BoundInterval intro_bounds(const TheoremInput& input);
PropositionCaps proposition_caps(int genus);

enum class PipelineMode { worst_case, shape };

std::string_view mode_name(PipelineMode mode);

struct PipelineReport {
    int genus = 0;
    std::int64_t n = 0;
    double epsilon = 0.0;
    double r_eps = 0.0;
    PipelineMode mode = PipelineMode::worst_case;
    double length_squared_lo = 0.0;
    double length_squared_hi = 0.0;
    std::optional<double> length_lo;
    std::optional<double> length_hi;
    bool admissible = false;
    std::int64_t min_n = 0;
};

// Runs the pipeline and records theorem inapplicability (twist power too
// small, normalized length below the gate) as admissible = false.
// Throws for invalid input: GenusTooSmall, InvalidShape.
PipelineReport evaluate_pipeline(const TheoremInput& input, const std::optional<cusp::CuspShape>& shape,
                                 Rounding rounding = Rounding::nearest);

// Same as evaluate_pipeline but throws TwistPowerTooSmall or
// NormalizedLengthTooShort instead of returning an inadmissible report.
PipelineReport pipeline(const TheoremInput& input, const std::optional<cusp::CuspShape>& shape,
                        Rounding rounding = Rounding::nearest);

} // namespace cuspfill::filling

#endif
