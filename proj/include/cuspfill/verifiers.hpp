#ifndef CUSPFILL_VERIFIERS_HPP
#define CUSPFILL_VERIFIERS_HPP

// Randomized and brute-force checks of the geometric facts behind the
// length bounds: the horoball-chain lemma and its two projection facts,
// the minimal area of a flat torus with given injectivity radius, and the
// area/boundary-length identity for cusps of hyperbolic surfaces.
//
// All randomness comes from a 64-bit master seed. Trial i of a campaign uses
// derive_seed(master, i), a splitmix64 finalizer applied to
// master + (i + 1) * 0x9E3779B97F4A7C15, so results never depend on trial
// order and identical seeds give identical reports.

#include "cuspfill/h3.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cuspfill::verify {

inline constexpr double kLemmaAlphaThreshold = 2.5;
inline constexpr double kShadowRadius = 0.5;
inline constexpr double kShadowTolerance = 1e-9;
inline constexpr double kBaseCaseTolerance = 1e-9;
inline constexpr double kFact2Separation = 2.0;
inline constexpr double kLoopTolerance = 1e-6;
inline constexpr double kTightnessTolerance = 1e-6;
inline constexpr int kMaxRejections = 1000;

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    // Minimal slack across all checks; negative slack is a failure.
    double worst_margin = 0.0;
    std::uint64_t seed = 0;
    // Filled by callers that time a run; never part of the deterministic result.
    std::optional<double> wall_ms;
};

// Order-independent combination: sums counts, takes the minimum margin.
TrialReport merge(const TrialReport& a, const TrialReport& b);

// One piece alpha_i * beta_i of a chain, stored in the chart where H_i is the
// plane {t = 1} and the previous ideal point p_{i-1} sits at 0 (for i >= 1).
struct ChainLink {
    h3::Point3 entry;       // x_i
    h3::Point3 exit;        // y_i
    h3::Horosphere next;    // H_{i+1}, tangent below exit
};

struct ChainConfig {
    std::vector<ChainLink> links;
    std::uint64_t seed = 0;

    // Global coordinates (chart 0). H_0 = {t = 1}, p_0 = infinity.
    std::vector<h3::Horosphere> horospheres;  // H_0 .. H_m
    std::vector<h3::IdealPoint> ideal_points; // p_0 .. p_m
    std::vector<h3::Point3> entries;          // x_0 .. x_m
    std::vector<h3::Point3> exits;            // y_0 .. y_{m-1}

    std::size_t segments() const noexcept { return links.size(); }
    // Intrinsic length of alpha_i.
    double alpha_length(std::size_t i) const;
};

// Explicit description of one step, in the chart of the current horosphere.
struct ChainStep {
    double alpha_length = 3.0;
    double direction = 0.0;   // angle of alpha_i in the chart
    double diameter = 0.5;    // Euclidean diameter of H_{i+1} in the chart
};

// Builds a chain starting at x_0 = (start, 1). Does not enforce the lemma's
// hypotheses, so adversarial chains can be constructed.
ChainConfig build_chain(h3::Complex start, std::span<const ChainStep> steps);

// Ideal point p_j expressed in the chart of H_k.
h3::IdealPoint ideal_point_in_chart(const ChainConfig& chain, std::size_t j, std::size_t k);

// Violated invariants, empty when the chain satisfies every hypothesis.
std::vector<std::string> validate_chain(const ChainConfig& chain);

// Throws InvalidArgument for m < 1 or min_alpha < 2.5, SamplingExhausted
// after kMaxRejections rejected draws at one step.
ChainConfig sample_chain(int segments, double min_alpha, std::uint64_t seed);

TrialReport check_chain(const ChainConfig& chain);

// Lemma campaign: chain segment counts uniform in [1, 10].
TrialReport run_lemma_campaign(std::uint64_t trials, std::uint64_t seed);
// Random disjoint horoball pairs under random isometries.
TrialReport run_fact1_sweep(std::uint64_t trials, std::uint64_t seed);
// Random point pairs whose projections are at intrinsic distance >= separation.
// The fact holds for separation 2; smaller values probe its sharpness and do fail.
TrialReport run_fact2_sweep(std::uint64_t trials, std::uint64_t seed, double separation = kFact2Separation);
// Lemma campaign plus both fact sweeps, merged.
TrialReport run_campaign(std::uint64_t trials, std::uint64_t seed);

h3::Isometry random_isometry(std::uint64_t seed);

struct TorusAreaScan {
    double min_area = 0.0;
    double floor = 0.0;          // 2 sqrt(3) r^2
    h3::Complex argmin_ratio;    // tau_beta / tau_alpha at the minimum
};

// Grid scan of the reduced fundamental domain, each lattice rescaled to
// injectivity radius exactly r. Throws InvalidArgument for r <= 0 or grid < 100.
TorusAreaScan min_torus_area_scan(double r, int grid);

// Torus scan at r in {0.25, 0.5, 1}; margin is min(min_area / floor) - 1.
TrialReport run_torus_area_suite(int grid);

struct CuspAreaCheck {
    double area = 0.0;
    double length = 0.0;
};

// Cusp {Im w >= h} / (w -> w + c) of the hyperbolic plane.
CuspAreaCheck surface_cusp_check(double translation, double height);
CuspAreaCheck surface_cusp_check(double boundary_length);

TrialReport run_cusp_area_sweep(std::uint64_t trials, std::uint64_t seed);

} // namespace cuspfill::verify

#endif
