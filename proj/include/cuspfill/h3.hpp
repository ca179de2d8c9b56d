#ifndef CUSPFILL_H3_HPP
#define CUSPFILL_H3_HPP

// Upper half-space model of hyperbolic 3-space, C x (0, inf).
//
// Horospheres are stored as (ideal point, size): for the ideal point at
// infinity `size` is the height of the horizontal plane, otherwise it is the
// Euclidean diameter of the sphere tangent to C at the ideal point. Every
// predicate that needs a tolerance first moves the horosphere to the plane
// {t = 1} with normalize_to_plane() and compares there.

#include <complex>
#include <optional>
#include <variant>

namespace cuspfill::h3 {

using Complex = std::complex<double>;

// Absolute tolerance for geometric equality in normalized (height-1) charts.
inline constexpr double kChartTolerance = 1e-9;

struct Point3 {
    Complex z;
    double t = 1.0;
};

// Throws InvalidArgument unless t > 0 and both coordinates are finite.
Point3 make_point(Complex z, double t);

class IdealPoint {
public:
    static IdealPoint infinity() { return IdealPoint(); }
    static IdealPoint finite(Complex p);

    bool is_infinity() const noexcept { return !value_.has_value(); }
    // Throws InvalidArgument for the point at infinity.
    Complex value() const;

    friend bool operator==(const IdealPoint&, const IdealPoint&) = default;

private:
    IdealPoint() = default;
    std::optional<Complex> value_;
};

struct Horosphere {
    IdealPoint center = IdealPoint::infinity();
    double size = 1.0;

    static Horosphere plane(double height);
    static Horosphere tangent(Complex at, double diameter);

    // True when x lies in the open horoball bounded by this horosphere,
    // judged in the normalized chart with kChartTolerance slack.
    bool encloses(const Point3& x) const;
};

class Geodesic {
public:
    Geodesic(IdealPoint a, IdealPoint b);

    const IdealPoint& first() const noexcept { return a_; }
    const IdealPoint& second() const noexcept { return b_; }

    bool is_vertical() const noexcept { return a_.is_infinity() || b_.is_infinity(); }
    // Foot of a vertical geodesic, or center of the half-circle.
    Complex center() const;
    // Euclidean radius of the half-circle; infinite for vertical geodesics.
    double radius() const;
    double apex_height() const { return radius(); }

private:
    IdealPoint a_;
    IdealPoint b_;
};

Geodesic geodesic_between(const IdealPoint& a, const IdealPoint& b);

// PSL(2,C) element acting on the upper half-space by Poincare extension.
// The stored matrix always has determinant 1.
class Isometry {
public:
    Isometry() = default;

    static Isometry from_matrix(Complex a, Complex b, Complex c, Complex d);
    static Isometry translation(Complex tau);
    static Isometry dilation(double factor);
    // z -> -1/z
    static Isometry inversion();

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }

    double determinant_error() const;

    // (*this * other)(x) == this->apply(other.apply(x))
    Isometry operator*(const Isometry& other) const;
    Isometry inverse() const;

    Point3 apply(const Point3& x) const;
    IdealPoint apply(const IdealPoint& p) const;
    Horosphere apply(const Horosphere& h) const;

private:
    Isometry(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {}

    Complex a_{1.0};
    Complex b_{0.0};
    Complex c_{0.0};
    Complex d_{1.0};
};

template <typename T>
T apply_isometry(const Isometry& m, const T& x)
{
    return m.apply(x);
}

double hyp_distance(const Point3& x, const Point3& y);

// A point of H^3 or of its boundary at infinity.
using Location = std::variant<Point3, IdealPoint>;

// An isometry taking h to the plane {t = 1}.
Isometry normalize_to_plane(const Horosphere& h);

// Entrance point into h of the geodesic from x to the ideal point of h.
Point3 horo_project(const Location& x, const Horosphere& h);

// Intrinsic flat distance on h between two points of h.
double horo_distance(const Horosphere& h, const Point3& u, const Point3& v);

struct ShadowDisk {
    Point3 center;
    double radius = 0.0;
};

// Projection of the horoball bounded by `ball` onto `h`, as an intrinsic disk.
ShadowDisk shadow(const Horosphere& h, const Horosphere& ball);

// Whether the geodesic segment [x, y] meets h.
bool geodesic_meets_horosphere(const Location& x, const Location& y, const Horosphere& h);

} // namespace cuspfill::h3

#endif
