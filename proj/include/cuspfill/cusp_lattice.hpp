#ifndef CUSPFILL_CUSP_LATTICE_HPP
#define CUSPFILL_CUSP_LATTICE_HPP

// Flat geometry of a cusp cross-section torus C / (tau_alpha Z + tau_beta Z)
// seen on the horosphere at height T. All lengths returned here are
// intrinsic, i.e. already divided by T.

#include <array>
#include <complex>
#include <cstdint>

namespace cuspfill::cusp {

using Complex = std::complex<double>;

class CuspShape {
public:
    // Throws DegenerateLattice when the translations are R-linearly
    // dependent (or zero) and InvalidArgument when height <= 0.
    CuspShape(Complex tau_alpha, Complex tau_beta, double height);

    Complex tau_alpha() const noexcept { return tau_alpha_; }
    Complex tau_beta() const noexcept { return tau_beta_; }
    double height() const noexcept { return height_; }

    // Translations divided by the height.
    Complex flat_alpha() const noexcept { return tau_alpha_ / height_; }
    Complex flat_beta() const noexcept { return tau_beta_ / height_; }

private:
    Complex tau_alpha_;
    Complex tau_beta_;
    double height_;
};

class Slope {
public:
    // Throws NonPrimitiveSlope unless gcd(|p|, |q|) == 1.
    Slope(std::int64_t p, std::int64_t q);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

// Bounds on L(mu_n)^2.
struct SandwichInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// Lagrange-Gauss reduced basis: |shortest| <= |other| and
// |Re(conj(shortest) * other)| <= |shortest|^2 / 2.
struct ReducedBasis {
    Complex shortest;
    Complex other;
};

// mu_n = n alpha + beta
Slope twist_slope(std::int64_t n);

double flat_length(const CuspShape& shape, const Slope& s);
double torus_area(const CuspShape& shape);
double injectivity_radius(const CuspShape& shape);
double normalized_length(const CuspShape& shape, const Slope& s);

ReducedBasis lagrange_gauss_reduce(Complex u, Complex v);

// a, b: flat lengths of alpha and beta; r_eps: lower bound on the
// injectivity radius. Throws NonPositiveInput unless a, b, r_eps > 0, n >= 1.
SandwichInterval sandwich_eq2(double a, double b, double r_eps, std::int64_t n);

// Change of basis (alpha, beta) -> (m00 alpha + m01 beta, m10 alpha + m11 beta).
CuspShape change_basis(const CuspShape& shape, const std::array<std::int64_t, 4>& m);

} // namespace cuspfill::cusp

#endif
