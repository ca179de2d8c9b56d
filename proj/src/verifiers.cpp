#include "cuspfill/verifiers.hpp"

#include "cuspfill/cusp_lattice.hpp"
#include "cuspfill/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace cuspfill::verify {

using h3::Complex;
using h3::Horosphere;
using h3::IdealPoint;
using h3::Point3;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x)
{
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// mt19937_64 is fully specified by the standard; the real-valued
// distributions are not, so uniforms are built from raw bits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    Complex complex_in_box(double half_width)
    {
        const double re = uniform(-half_width, half_width);
        return Complex(re, uniform(-half_width, half_width));
    }
    int index(int count) { return static_cast<int>(uniform() * count); }

private:
    std::mt19937_64 engine_;
};

// Draws from the open interval (lo, lo + width).
double draw_open(Rng& rng, double lo, double width, int& rejections)
{
    for (;;) {
        const double v = lo + width * rng.uniform();
        if (v > lo && v < lo + width)
            return v;
        if (++rejections >= kMaxRejections)
            throw Error(Errc::SamplingExhausted, "sampling exhausted");
    }
}

// Chart transition from the chart of H_c to the chart of H_{c-1}.
h3::Isometry chart_down(const ChainConfig& chain, std::size_t c)
{
    return h3::normalize_to_plane(chain.links[c - 1].next).inverse();
}

template <typename T>
T to_chart_zero(const ChainConfig& chain, T value, std::size_t from)
{
    for (std::size_t c = from; c > 0; --c)
        value = chart_down(chain, c).apply(value);
    return value;
}

void append_step(ChainConfig& chain, const ChainStep& step)
{
    const std::size_t i = chain.links.size();
    const Point3 entry = i == 0 ? chain.entries.front()
                                : h3::normalize_to_plane(chain.links[i - 1].next)
                                      .apply(Point3{chain.links[i - 1].next.center.value(), chain.links[i - 1].next.size});
    const Point3 exit{entry.z + std::polar(step.alpha_length, step.direction), 1.0};
    const Horosphere next = Horosphere::tangent(exit.z, step.diameter);
    chain.links.push_back(ChainLink{entry, exit, next});

    chain.exits.push_back(to_chart_zero(chain, exit, i));
    chain.horospheres.push_back(to_chart_zero(chain, next, i));
    chain.ideal_points.push_back(to_chart_zero(chain, next.center, i));
    chain.entries.push_back(to_chart_zero(chain, Point3{next.center.value(), next.size}, i));
}

ChainConfig empty_chain(Complex start)
{
    ChainConfig chain;
    chain.horospheres.push_back(Horosphere::plane(1.0));
    chain.ideal_points.push_back(IdealPoint::infinity());
    chain.entries.push_back(Point3{start, 1.0});
    return chain;
}

bool finite_point(const Point3& p)
{
    return std::isfinite(p.z.real()) && std::isfinite(p.z.imag()) && std::isfinite(p.t) && p.t > 0.0;
}

class Tally {
public:
    explicit Tally(std::uint64_t seed) { report_.seed = seed; report_.worst_margin = kInf; }

    // Records a slack value; it fails when below -tolerance.
    void slack(double value, double tolerance)
    {
        report_.worst_margin = std::min(report_.worst_margin, value);
        if (!(value >= -tolerance))
            ++report_.failures;
    }
    void fail() { ++report_.failures; }
    void trial() { ++report_.trials; }

    TrialReport finish()
    {
        if (report_.worst_margin == kInf)
            report_.worst_margin = 0.0;
        return report_;
    }

private:
    TrialReport report_;
};

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

TrialReport merge(const TrialReport& a, const TrialReport& b)
{
    TrialReport out;
    out.trials = a.trials + b.trials;
    out.failures = a.failures + b.failures;
    out.worst_margin = std::min(a.worst_margin, b.worst_margin);
    out.seed = a.seed;
    return out;
}

double ChainConfig::alpha_length(std::size_t i) const
{
    return std::abs(links.at(i).exit.z - links.at(i).entry.z);
}

ChainConfig build_chain(Complex start, std::span<const ChainStep> steps)
{
    ChainConfig chain = empty_chain(start);
    for (const ChainStep& step : steps)
        append_step(chain, step);
    return chain;
}

IdealPoint ideal_point_in_chart(const ChainConfig& chain, std::size_t j, std::size_t k)
{
    if (j > chain.segments() || k > chain.segments())
        throw Error(Errc::InvalidArgument, "chain index out of range");
    // p_j is the point at infinity in its own chart.
    IdealPoint p = IdealPoint::infinity();
    if (j > k) {
        p = chain.links[j - 1].next.center;
        for (std::size_t c = j - 1; c > k; --c)
            p = chart_down(chain, c).apply(p);
    } else {
        for (std::size_t c = j + 1; c <= k; ++c)
            p = h3::normalize_to_plane(chain.links[c - 1].next).apply(p);
    }
    return p;
}

std::vector<std::string> validate_chain(const ChainConfig& chain)
{
    std::vector<std::string> problems;
    const auto note = [&](std::size_t i, const std::string& what) {
        problems.push_back("link " + std::to_string(i) + ": " + what);
    };
    constexpr double tol = h3::kChartTolerance;

    for (std::size_t i = 0; i < chain.segments(); ++i) {
        const ChainLink& link = chain.links[i];
        if (std::abs(link.entry.t - 1.0) > tol || std::abs(link.exit.t - 1.0) > tol)
            note(i, "alpha endpoints not on H_i");
        if (!(chain.alpha_length(i) > kLemmaAlphaThreshold))
            note(i, "alpha length not above 2.5");
        if (link.next.center.is_infinity() || !(link.next.size < 1.0))
            note(i, "H_i and H_{i+1} not disjoint");
        else if (std::abs(link.next.center.value() - link.exit.z) > tol)
            note(i, "beta not orthogonal to H_i");
        if (i + 1 < chain.segments()) {
            const Point3 entry = h3::horo_project(IdealPoint::infinity(), link.next);
            const Point3 local = h3::normalize_to_plane(link.next).apply(entry);
            const Point3& stored = chain.links[i + 1].entry;
            if (std::abs(local.z - stored.z) > tol || std::abs(local.t - stored.t) > tol)
                note(i, "x_{i+1} is not the entry of beta_i into H_{i+1}");
        }
    }
    for (const Point3& p : chain.entries)
        if (!finite_point(p))
            problems.push_back("non-finite global entry point");
    return problems;
}

ChainConfig sample_chain(int segments, double min_alpha, std::uint64_t seed)
{
    if (segments < 1)
        throw Error(Errc::InvalidArgument, "chain needs at least one segment");
    if (!(min_alpha >= kLemmaAlphaThreshold) || !std::isfinite(min_alpha))
        throw Error(Errc::InvalidArgument, "min_alpha must be at least 2.5");

    Rng rng(seed);
    ChainConfig chain = empty_chain(rng.complex_in_box(5.0));
    chain.seed = seed;
    const Horosphere reference = Horosphere::plane(1.0);

    for (int i = 0; i < segments; ++i) {
        int rejections = 0;
        for (;;) {
            ChainStep step;
            step.alpha_length = draw_open(rng, min_alpha, 5.0, rejections);
            step.direction = 2.0 * std::numbers::pi * rng.uniform();
            step.diameter = draw_open(rng, 0.05, 0.95, rejections);

            ChainConfig candidate = chain;
            append_step(candidate, step);
            bool accepted = finite_point(candidate.entries.back());
            if (accepted) {
                try {
                    h3::shadow(reference, candidate.horospheres.back());
                } catch (const Error&) {
                    accepted = false;
                }
            }
            if (accepted) {
                chain = std::move(candidate);
                break;
            }
            if (++rejections >= kMaxRejections)
                throw Error(Errc::SamplingExhausted, "sampling exhausted");
        }
    }
    return chain;
}

TrialReport check_chain(const ChainConfig& chain)
{
    Tally tally(chain.seed);
    tally.trial();
    const Horosphere plane = Horosphere::plane(1.0);
    const std::size_t m = chain.segments();

    for (std::size_t k = 0; k < m; ++k) {
        const Point3& exit = chain.links[k].exit;
        // Every tail chain starting at H_k satisfies the lemma, so its
        // ideal points project within 1/2 of y_k.
        for (std::size_t j = k + 1; j <= m; ++j) {
            try {
                const Point3 proj = h3::horo_project(ideal_point_in_chart(chain, j, k), plane);
                const double d = h3::horo_distance(plane, proj, exit);
                if (j == k + 1 && d > kBaseCaseTolerance)
                    tally.fail();
                tally.slack(kShadowRadius - d, kShadowTolerance);
            } catch (const Error&) {
                tally.fail();
            }
        }
        if (k == 0)
            continue;
        // Inductive step: p_{k-1} and p_j project at least 2 apart on H_k,
        // so the geodesic joining them crosses H_k.
        const IdealPoint back = ideal_point_in_chart(chain, k - 1, k);
        for (std::size_t j = k + 1; j <= m; ++j) {
            try {
                const IdealPoint ahead = ideal_point_in_chart(chain, j, k);
                const double d =
                    h3::horo_distance(plane, h3::horo_project(back, plane), h3::horo_project(ahead, plane));
                tally.slack(d - kFact2Separation, kShadowTolerance);
                if (!h3::geodesic_meets_horosphere(back, ahead, plane))
                    tally.fail();
            } catch (const Error&) {
                tally.fail();
            }
        }
    }

    const double gap = h3::hyp_distance(chain.entries.front(), chain.entries.back());
    if (m > 0)
        tally.slack(gap - kLoopTolerance, 0.0);
    return tally.finish();
}

TrialReport run_lemma_campaign(std::uint64_t trials, std::uint64_t seed)
{
    TrialReport total;
    total.seed = seed;
    total.worst_margin = kInf;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t s = derive_seed(seed, i);
        const int segments = 1 + static_cast<int>(splitmix64(s) % 10);
        TrialReport one;
        try {
            one = check_chain(sample_chain(segments, kLemmaAlphaThreshold, s));
        } catch (const Error&) {
            one = TrialReport{1, 1, kInf, s, std::nullopt};
        }
        // A trial fails as a whole when any of its checks fails.
        one.failures = one.failures > 0 ? 1 : 0;
        total = merge(total, one);
        total.seed = seed;
    }
    if (total.worst_margin == kInf)
        total.worst_margin = 0.0;
    return total;
}

h3::Isometry random_isometry(std::uint64_t seed)
{
    Rng rng(seed);
    for (;;) {
        const Complex a = rng.complex_in_box(2.0);
        const Complex b = rng.complex_in_box(2.0);
        const Complex c = rng.complex_in_box(2.0);
        if (std::abs(a) < 0.25)
            continue;
        return h3::Isometry::from_matrix(a, b, c, (1.0 + b * c) / a);
    }
}

TrialReport run_fact1_sweep(std::uint64_t trials, std::uint64_t seed)
{
    constexpr int kSamples = 24;
    constexpr int kEquatorSamples = 4;
    Tally tally(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t s = derive_seed(seed, i);
        Rng rng(s);
        const h3::Isometry g = random_isometry(splitmix64(s));
        const Complex foot = rng.complex_in_box(3.0);
        const double diameter = rng.uniform(0.05, 0.999);
        const Horosphere h = g.apply(Horosphere::plane(1.0));
        const Horosphere ball = g.apply(Horosphere::tangent(foot, diameter));
        tally.trial();
        try {
            const h3::ShadowDisk disk = h3::shadow(h, ball);
            double farthest = 0.0;
            bool contained = true;
            for (int k = 0; k < kSamples; ++k) {
                // Points of the sphere, avoiding its tangency point; the first
                // few lie on the equator, whose projection is the disk boundary.
                const double polar = k < kEquatorSamples ? 0.5 * std::numbers::pi
                                                         : rng.uniform(0.0, 0.999) * std::numbers::pi;
                const double azimuth = rng.uniform(0.0, 2.0 * std::numbers::pi);
                const double r = 0.5 * diameter;
                const Point3 local{foot + r * std::sin(polar) * std::polar(1.0, azimuth), r + r * std::cos(polar)};
                const Point3 proj = h3::horo_project(g.apply(local), h);
                const double d = h3::horo_distance(h, proj, disk.center);
                farthest = std::max(farthest, d);
                contained = contained && d <= disk.radius + kShadowTolerance;
            }
            if (!contained || disk.radius - farthest > kTightnessTolerance)
                tally.fail();
            tally.slack(kShadowRadius - disk.radius, kShadowTolerance);
        } catch (const Error&) {
            tally.fail();
        }
    }
    return tally.finish();
}

TrialReport run_fact2_sweep(std::uint64_t trials, std::uint64_t seed, double separation)
{
    if (!(separation > 0.0) || !std::isfinite(separation))
        throw Error(Errc::InvalidArgument, "separation must be positive");
    Tally tally(seed);
    const auto draw_location = [](Rng& rng, Complex z) -> h3::Location {
        if (rng.uniform() < 0.2)
            return IdealPoint::finite(z);
        return Point3{z, 1.0 - rng.uniform()};
    };
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t s = derive_seed(seed, i);
        Rng rng(s);
        const h3::Isometry g = random_isometry(splitmix64(s));
        const Horosphere h = g.apply(Horosphere::plane(1.0));
        tally.trial();
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kMaxRejections) {
                tally.fail();
                break;
            }
            const Complex zx = rng.complex_in_box(3.0);
            const Complex zy = zx + std::polar(rng.uniform(separation, separation + 6.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
            const h3::Location x = draw_location(rng, zx);
            const h3::Location y = draw_location(rng, zy);
            const auto image = [&g](const h3::Location& l) -> h3::Location {
                return std::visit([&g](const auto& v) -> h3::Location { return g.apply(v); }, l);
            };
            const h3::Location gx = image(x);
            const h3::Location gy = image(y);
            try {
                const double d = h3::horo_distance(h, h3::horo_project(gx, h), h3::horo_project(gy, h));
                // Rounding can push a drawn distance of exactly 2 below 2.
                if (d < separation)
                    continue;
                if (!h3::geodesic_meets_horosphere(gx, gy, h))
                    tally.fail();
                tally.slack(d - separation, 0.0);
            } catch (const Error&) {
                tally.fail();
            }
            break;
        }
    }
    return tally.finish();
}

TrialReport run_campaign(std::uint64_t trials, std::uint64_t seed)
{
    TrialReport out = merge(run_lemma_campaign(trials, seed), run_fact1_sweep(trials, seed));
    out = merge(out, run_fact2_sweep(trials, seed));
    out.seed = seed;
    return out;
}

TorusAreaScan min_torus_area_scan(double r, int grid)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw Error(Errc::InvalidArgument, "injectivity radius must be positive");
    if (grid < 100)
        throw Error(Errc::InvalidArgument, "grid must be at least 100");

    // Reduced domain for tau = tau_beta / tau_alpha: |Re tau| <= 1/2,
    // |tau| >= 1, capped at Im tau <= 2 where areas are already far above the floor.
    constexpr double kImagCap = 2.0;
    TorusAreaScan best{kInf, 2.0 * std::sqrt(3.0) * r * r, Complex(0.0, 1.0)};
    const double step = 1.0 / (grid - 1);
    for (int i = 0; i < grid; ++i) {
        const double x = -0.5 + i * step;
        const double y_min = std::sqrt(1.0 - x * x);
        for (int j = 0; j < grid; ++j) {
            const Complex tau(x, y_min + (kImagCap - y_min) * j * step);
            const cusp::CuspShape shape(2.0 * r, 2.0 * r * tau, 1.0);
            const double scale = r / cusp::injectivity_radius(shape);
            const double area = cusp::torus_area(shape) * scale * scale;
            if (area < best.min_area) {
                best.min_area = area;
                best.argmin_ratio = tau;
            }
        }
    }
    return best;
}

TrialReport run_torus_area_suite(int grid)
{
    Tally tally(0);
    for (const double r : {0.25, 0.5, 1.0}) {
        tally.trial();
        const TorusAreaScan scan = min_torus_area_scan(r, grid);
        if (scan.min_area < scan.floor - 1e-6 || std::abs(scan.min_area - scan.floor) > 1e-4)
            tally.fail();
        tally.slack(scan.min_area / scan.floor - 1.0, 1e-6);
    }
    return tally.finish();
}

namespace {

// 8-point Gauss-Legendre rule on [0, 1].
template <typename F>
double integrate_unit(F&& f)
{
    static constexpr std::array<double, 4> nodes{0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                                 0.9602898564975363};
    static constexpr std::array<double, 4> weights{0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                                   0.1012285362903763};
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        sum += weights[k] * (f(0.5 * (1.0 - nodes[k])) + f(0.5 * (1.0 + nodes[k])));
    return 0.5 * sum;
}

} // namespace

CuspAreaCheck surface_cusp_check(double translation, double height)
{
    if (!(translation > 0.0) || !(height > 0.0))
        throw Error(Errc::NonPositiveInput, "cusp translation and height must be positive");
    // Area element dx dy / y^2 over [0, c] x [h, inf); with y = h / u the
    // inner integral becomes (1/h) du over (0, 1].
    const double inner = integrate_unit([height](double u) { return u * u / (height * height) * (height / (u * u)); });
    const double area = translation * integrate_unit([inner](double) { return inner; });
    // Horocycle y = h with length element |dx| / h.
    const double length = translation * integrate_unit([height](double) { return 1.0 / height; });
    return CuspAreaCheck{area, length};
}

CuspAreaCheck surface_cusp_check(double boundary_length)
{
    return surface_cusp_check(boundary_length, 1.0);
}

TrialReport run_cusp_area_sweep(std::uint64_t trials, std::uint64_t seed)
{
    constexpr double kIdentityTolerance = 1e-12;
    Tally tally(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        int rejections = 0;
        const double length = draw_open(rng, 0.0, 100.0, rejections);
        const CuspAreaCheck c = surface_cusp_check(length);
        tally.trial();
        tally.slack(kIdentityTolerance - std::abs(c.area - c.length), 0.0);
    }
    return tally.finish();
}

} // namespace cuspfill::verify
