#include "cuspfill/h3.hpp"

#include "cuspfill/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cuspfill::h3 {

namespace {

bool finite_complex(Complex z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Height-1 chart coordinates of a location: (z, t) with t = 0 for finite
// ideal points. Returns nullopt for the ideal point at infinity.
std::optional<Point3> chart_coordinates(const Location& x, const Isometry& to_chart)
{
    if (const auto* p = std::get_if<Point3>(&x))
        return to_chart.apply(*p);
    const IdealPoint image = to_chart.apply(std::get<IdealPoint>(x));
    if (image.is_infinity())
        return std::nullopt;
    return Point3{image.value(), 0.0};
}

} // namespace

Point3 make_point(Complex z, double t)
{
    if (!finite_complex(z) || !std::isfinite(t) || t <= 0.0)
        throw Error(Errc::InvalidArgument, "point must have finite z and height t > 0");
    return Point3{z, t};
}

IdealPoint IdealPoint::finite(Complex p)
{
    if (!finite_complex(p))
        throw Error(Errc::InvalidArgument, "finite ideal point must have finite coordinates");
    IdealPoint out;
    out.value_ = p;
    return out;
}

Complex IdealPoint::value() const
{
    if (!value_)
        throw Error(Errc::InvalidArgument, "ideal point at infinity has no finite value");
    return *value_;
}

Horosphere Horosphere::plane(double height)
{
    if (!(height > 0.0) || !std::isfinite(height))
        throw Error(Errc::InvalidArgument, "horosphere height must be positive");
    return Horosphere{IdealPoint::infinity(), height};
}

Horosphere Horosphere::tangent(Complex at, double diameter)
{
    if (!(diameter > 0.0) || !std::isfinite(diameter))
        throw Error(Errc::InvalidArgument, "horosphere diameter must be positive");
    return Horosphere{IdealPoint::finite(at), diameter};
}

bool Horosphere::encloses(const Point3& x) const
{
    return normalize_to_plane(*this).apply(x).t > 1.0 + kChartTolerance;
}

Geodesic::Geodesic(IdealPoint a, IdealPoint b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_ == b_)
        throw Error(Errc::CoincidentEndpoints, "geodesic endpoints coincide");
}

Complex Geodesic::center() const
{
    if (a_.is_infinity())
        return b_.value();
    if (b_.is_infinity())
        return a_.value();
    return 0.5 * (a_.value() + b_.value());
}

double Geodesic::radius() const
{
    if (is_vertical())
        return std::numeric_limits<double>::infinity();
    return 0.5 * std::abs(a_.value() - b_.value());
}

Geodesic geodesic_between(const IdealPoint& a, const IdealPoint& b)
{
    return Geodesic(a, b);
}

Isometry Isometry::from_matrix(Complex a, Complex b, Complex c, Complex d)
{
    const Complex det = a * d - b * c;
    if (!(std::abs(det) > 0.0) || !finite_complex(det))
        throw Error(Errc::InvalidArgument, "isometry matrix must be invertible");
    const Complex s = std::sqrt(det);
    return Isometry(a / s, b / s, c / s, d / s);
}

Isometry Isometry::translation(Complex tau)
{
    return Isometry(1.0, tau, 0.0, 1.0);
}

Isometry Isometry::dilation(double factor)
{
    if (!(factor > 0.0))
        throw Error(Errc::InvalidArgument, "dilation factor must be positive");
    const double s = std::sqrt(factor);
    return Isometry(s, 0.0, 0.0, 1.0 / s);
}

Isometry Isometry::inversion()
{
    return Isometry(0.0, -1.0, 1.0, 0.0);
}

double Isometry::determinant_error() const
{
    return std::abs(a_ * d_ - b_ * c_ - 1.0);
}

Isometry Isometry::operator*(const Isometry& o) const
{
    return from_matrix(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                       c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Isometry Isometry::inverse() const
{
    return Isometry(d_, -b_, -c_, a_);
}

Point3 Isometry::apply(const Point3& x) const
{
    const Complex num = a_ * x.z + b_;
    const Complex den = c_ * x.z + d_;
    const double t2 = x.t * x.t;
    const double scale = std::norm(den) + std::norm(c_) * t2;
    return Point3{(num * std::conj(den) + a_ * std::conj(c_) * t2) / scale, x.t / scale};
}

IdealPoint Isometry::apply(const IdealPoint& p) const
{
    if (p.is_infinity()) {
        if (c_ == 0.0)
            return IdealPoint::infinity();
        return IdealPoint::finite(a_ / c_);
    }
    const Complex den = c_ * p.value() + d_;
    if (den == 0.0)
        return IdealPoint::infinity();
    return IdealPoint::finite((a_ * p.value() + b_) / den);
}

// The size transforms by the conformal factor of the boundary map at the
// tangency point: diameters scale by 1/|cp + d|^2, heights by 1/|d|^2, and a
// horosphere sent to or from infinity has diameter * height = 1/|c|^2.
Horosphere Isometry::apply(const Horosphere& h) const
{
    const IdealPoint image = apply(h.center);
    if (h.center.is_infinity()) {
        if (image.is_infinity())
            return Horosphere{image, h.size / std::norm(d_)};
        return Horosphere{image, 1.0 / (std::norm(c_) * h.size)};
    }
    if (image.is_infinity())
        return Horosphere{image, 1.0 / (std::norm(c_) * h.size)};
    return Horosphere{image, h.size / std::norm(c_ * h.center.value() + d_)};
}

double hyp_distance(const Point3& x, const Point3& y)
{
    const double chord2 = std::norm(x.z - y.z) + (x.t - y.t) * (x.t - y.t);
    return 2.0 * std::asinh(std::sqrt(chord2) / (2.0 * std::sqrt(x.t * y.t)));
}

Isometry normalize_to_plane(const Horosphere& h)
{
    if (h.center.is_infinity())
        return Isometry::dilation(1.0 / h.size);
    // z -> -size / (z - p): translate p to 0, invert, rescale the image plane.
    return Isometry::dilation(h.size) * Isometry::inversion() * Isometry::translation(-h.center.value());
}

Point3 horo_project(const Location& x, const Horosphere& h)
{
    const Isometry to_chart = normalize_to_plane(h);
    const auto local = chart_coordinates(x, to_chart);
    if (!local)
        throw Error(Errc::CoincidesWithCenter, "point coincides with the horosphere's ideal point");
    if (local->t > 1.0 + kChartTolerance)
        throw Error(Errc::InsideHoroball, "point lies inside the open horoball");
    return to_chart.inverse().apply(Point3{local->z, 1.0});
}

double horo_distance(const Horosphere& h, const Point3& u, const Point3& v)
{
    const Isometry to_chart = normalize_to_plane(h);
    const Point3 lu = to_chart.apply(u);
    const Point3 lv = to_chart.apply(v);
    if (std::abs(lu.t - 1.0) > kChartTolerance || std::abs(lv.t - 1.0) > kChartTolerance)
        throw Error(Errc::NotOnHorosphere, "points do not lie on the horosphere");
    return std::abs(lu.z - lv.z);
}

ShadowDisk shadow(const Horosphere& h, const Horosphere& ball)
{
    const Isometry to_chart = normalize_to_plane(h);
    const Horosphere local = to_chart.apply(ball);
    // Tangency counts as overlap.
    if (local.center.is_infinity() || local.size >= 1.0)
        throw Error(Errc::NotDisjoint, "horoballs are not disjoint");
    const Point3 center = to_chart.inverse().apply(Point3{local.center.value(), 1.0});
    return ShadowDisk{center, 0.5 * local.size};
}

bool geodesic_meets_horosphere(const Location& x, const Location& y, const Horosphere& h)
{
    const Isometry to_chart = normalize_to_plane(h);
    const auto lx = chart_coordinates(x, to_chart);
    const auto ly = chart_coordinates(y, to_chart);

    for (const auto& p : {lx, ly})
        if (p && p->t > 1.0 + kChartTolerance)
            throw Error(Errc::InsideHoroball, "segment endpoint lies inside the open horoball");
    // A segment running out to the ideal point of h crosses every lower height.
    if (!lx || !ly)
        return true;
    if (lx->t == 0.0 && ly->t == 0.0 && lx->z == ly->z)
        throw Error(Errc::CoincidentEndpoints, "geodesic endpoints coincide");

    const double reach = 1.0 - kChartTolerance;
    if (std::max(lx->t, ly->t) >= reach)
        return true;
    const double span = std::abs(ly->z - lx->z);
    if (span == 0.0)
        return false;

    // Half-circle through both points, centered on the line joining their
    // feet; `c` is the center's offset from x's foot along that line.
    const double c = (span * span + ly->t * ly->t - lx->t * lx->t) / (2.0 * span);
    const double top = (c >= 0.0 && c <= span) ? std::hypot(c, lx->t) : std::max(lx->t, ly->t);
    return top >= reach;
}

} // namespace cuspfill::h3
