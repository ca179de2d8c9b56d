#include "cuspfill/cusp_lattice.hpp"

#include "cuspfill/error.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace cuspfill::cusp {

namespace {

// Relative threshold on |Im(conj(a) b)| / (|a| |b|) = |sin(theta)|.
constexpr double kCollinearSine = 1e-12;

double cross(Complex u, Complex v)
{
    return (std::conj(u) * v).imag();
}

} // namespace

CuspShape::CuspShape(Complex tau_alpha, Complex tau_beta, double height)
    : tau_alpha_(tau_alpha), tau_beta_(tau_beta), height_(height)
{
    if (!(height > 0.0) || !std::isfinite(height))
        throw Error(Errc::InvalidArgument, "cusp height must be positive");
    const double scale = std::abs(tau_alpha) * std::abs(tau_beta);
    if (!(scale > 0.0) || !std::isfinite(scale) || std::abs(cross(tau_alpha, tau_beta)) <= kCollinearSine * scale)
        throw Error(Errc::DegenerateLattice, "degenerate lattice");
}

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q)
{
    if (std::gcd(p, q) != 1)
        throw Error(Errc::NonPrimitiveSlope, "slope must be primitive");
}

Slope twist_slope(std::int64_t n)
{
    return Slope(n, 1);
}

double flat_length(const CuspShape& shape, const Slope& s)
{
    return std::abs(static_cast<double>(s.p()) * shape.flat_alpha() + static_cast<double>(s.q()) * shape.flat_beta());
}

double torus_area(const CuspShape& shape)
{
    return std::abs(cross(shape.flat_alpha(), shape.flat_beta()));
}

ReducedBasis lagrange_gauss_reduce(Complex u, Complex v)
{
    if (std::norm(u) > std::norm(v))
        std::swap(u, v);
    // Each pass strictly shortens v or terminates; the cap only guards
    // against NaN input.
    for (int pass = 0; pass < 1024; ++pass) {
        const double mu = std::round((std::conj(u) * v).real() / std::norm(u));
        v -= mu * u;
        if (std::norm(v) >= std::norm(u))
            break;
        std::swap(u, v);
    }
    return ReducedBasis{u, v};
}

double injectivity_radius(const CuspShape& shape)
{
    return 0.5 * std::abs(lagrange_gauss_reduce(shape.flat_alpha(), shape.flat_beta()).shortest);
}

double normalized_length(const CuspShape& shape, const Slope& s)
{
    return flat_length(shape, s) / std::sqrt(torus_area(shape));
}

SandwichInterval sandwich_eq2(double a, double b, double r_eps, std::int64_t n)
{
    if (!(a > 0.0) || !(b > 0.0) || !(r_eps > 0.0) || n < 1)
        throw Error(Errc::NonPositiveInput, "sandwich bounds need a, b, r_eps > 0 and n >= 1");
    const double nd = static_cast<double>(n);
    const double lower = nd * a - b;
    const double upper = nd * a + b;
    // Reverse triangle inequality keeps the unclamped square valid for na < b.
    return SandwichInterval{lower * lower / (a * b), upper * upper / (2.0 * std::sqrt(3.0) * r_eps * r_eps)};
}

CuspShape change_basis(const CuspShape& shape, const std::array<std::int64_t, 4>& m)
{
    const auto c = [](std::int64_t k) { return static_cast<double>(k); };
    return CuspShape(c(m[0]) * shape.tau_alpha() + c(m[1]) * shape.tau_beta(),
                     c(m[2]) * shape.tau_alpha() + c(m[3]) * shape.tau_beta(), shape.height());
}

} // namespace cuspfill::cusp
