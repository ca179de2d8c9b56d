#include "cuspfill/error.hpp"
#include "cuspfill/h3.hpp"
#include "cuspfill/verifiers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace cuspfill;
using namespace cuspfill::h3;

namespace {

constexpr double kTol = 1e-9;

IdealPoint at(Complex p)
{
    return IdealPoint::finite(p);
}

void expect_point_near(const Point3& a, const Point3& b, double tol = kTol)
{
    EXPECT_NEAR(a.z.real(), b.z.real(), tol);
    EXPECT_NEAR(a.z.imag(), b.z.imag(), tol);
    EXPECT_NEAR(a.t, b.t, tol);
}

template <typename F>
void expect_errc(Errc code, F&& f)
{
    try {
        f();
        ADD_FAILURE() << "expected " << errc_name(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

Point3 random_point(std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> height(0.05, 3.0);
    return Point3{Complex(coord(gen), coord(gen)), height(gen)};
}

} // namespace

TEST(Geodesic, VerticalAboveZero)
{
    const Geodesic g = geodesic_between(at(0.0), IdealPoint::infinity());
    EXPECT_TRUE(g.is_vertical());
    EXPECT_EQ(g.center(), Complex(0.0));
    EXPECT_TRUE(std::isinf(g.radius()));
}

TEST(Geodesic, SymmetricHalfCircle)
{
    const Geodesic g = geodesic_between(at(-1.0), at(1.0));
    EXPECT_FALSE(g.is_vertical());
    EXPECT_EQ(g.center(), Complex(0.0));
    EXPECT_DOUBLE_EQ(g.radius(), 1.0);
}

TEST(Geodesic, ApexIsHalfTheEndpointDistance)
{
    const Geodesic g = geodesic_between(at(0.0), at(2.0));
    EXPECT_EQ(g.center(), Complex(1.0));
    EXPECT_DOUBLE_EQ(g.apex_height(), 1.0);
}

TEST(Geodesic, ApexLawOnRandomEndpoints)
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const Complex a(coord(gen), coord(gen));
        const Complex b(coord(gen), coord(gen));
        EXPECT_NEAR(geodesic_between(at(a), at(b)).apex_height(), std::abs(a - b) / 2.0, 1e-12);
    }
}

TEST(Geodesic, CoincidentEndpointsRejected)
{
    expect_errc(Errc::CoincidentEndpoints, [] { geodesic_between(at(Complex(1.0, 2.0)), at(Complex(1.0, 2.0))); });
    expect_errc(Errc::CoincidentEndpoints, [] { geodesic_between(IdealPoint::infinity(), IdealPoint::infinity()); });
}

TEST(Isometry, IdentityFixesEverything)
{
    const Isometry id;
    expect_point_near(id.apply(Point3{Complex(1.5, -2.0), 0.3}), Point3{Complex(1.5, -2.0), 0.3}, 0.0);
    EXPECT_EQ(id.apply(at(4.0)), at(4.0));
    EXPECT_TRUE(id.apply(IdealPoint::infinity()).is_infinity());
    const Horosphere h = id.apply(Horosphere::tangent(2.0, 0.7));
    EXPECT_EQ(h.center, at(2.0));
    EXPECT_DOUBLE_EQ(h.size, 0.7);
}

TEST(Isometry, ParabolicTranslation)
{
    const Complex tau(0.25, 3.0);
    const Point3 image = Isometry::translation(tau).apply(Point3{Complex(1.0, 1.0), 0.8});
    expect_point_near(image, Point3{Complex(1.25, 4.0), 0.8}, 1e-15);
}

TEST(Isometry, InversionSendsPlaneToUnitSphereAtZero)
{
    const Horosphere h = Isometry::inversion().apply(Horosphere::plane(1.0));
    ASSERT_FALSE(h.center.is_infinity());
    EXPECT_NEAR(std::abs(h.center.value()), 0.0, 1e-15);
    EXPECT_NEAR(h.size, 1.0, 1e-15);

    // The image sphere is where the plane's points land.
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    for (int i = 0; i < 100; ++i) {
        const Point3 p = Isometry::inversion().apply(Point3{Complex(coord(gen), coord(gen)), 1.0});
        EXPECT_NEAR(std::norm(p.z) + p.t * p.t, p.t * h.size, 1e-12);
    }
}

TEST(Isometry, HorosphereImageMatchesPointImages)
{
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Isometry m = verify::random_isometry(s);
        const Horosphere h = Horosphere::tangent(Complex(coord(gen), coord(gen)), 0.3 + 0.5 * (coord(gen) + 2.0) / 4.0);
        const Horosphere image = m.apply(h);
        const Isometry back = normalize_to_plane(image);
        // Points of h land on the image horosphere.
        for (int k = 0; k < 8; ++k) {
            const double angle = 0.7 * k;
            const double r = h.size / 2.0;
            const Point3 on_h{h.center.value() + r * std::sin(angle) * std::polar(1.0, 1.3 * k), r + r * std::cos(angle)};
            EXPECT_NEAR(back.apply(m.apply(on_h)).t, 1.0, 1e-9);
        }
    }
}

TEST(Isometry, DeterminantStaysNormalized)
{
    // Products of random loxodromics grow geometrically; a short chain keeps
    // entries moderate so cancellation in ad - bc stays small.
    Isometry chained;
    for (std::uint64_t s = 0; s < 6; ++s)
        chained = verify::random_isometry(s) * chained;
    const double scale = std::abs(chained.a() * chained.d()) + std::abs(chained.b() * chained.c());
    EXPECT_LE(chained.determinant_error(), 1e-15 * scale + 1e-15);
    EXPECT_LE((chained * chained.inverse()).determinant_error(), 1e-12);
    expect_errc(Errc::InvalidArgument, [] { Isometry::from_matrix(1.0, 2.0, 2.0, 4.0); });
}

TEST(Distance, SamePointIsZero)
{
    EXPECT_EQ(hyp_distance(Point3{0.0, 1.0}, Point3{0.0, 1.0}), 0.0);
}

TEST(Distance, VerticalIsLogOfHeightRatio)
{
    EXPECT_NEAR(hyp_distance(Point3{0.0, 1.0}, Point3{0.0, std::exp(1.0)}), 1.0, 1e-15);
}

TEST(Distance, HorizontalMatchesQuadrature)
{
    const double expected = oracle::geodesic_length_by_quadrature(0.0, 1.0, 2.0, 1.0);
    EXPECT_NEAR(expected, 1.76274717403909, 1e-10);
    EXPECT_NEAR(hyp_distance(Point3{0.0, 1.0}, Point3{2.0, 1.0}), expected, 1e-10);
}

TEST(Distance, RandomPairsMatchQuadrature)
{
    std::mt19937_64 gen(17);
    for (int i = 0; i < 50; ++i) {
        const Point3 x = random_point(gen);
        const Point3 y = random_point(gen);
        const double d = hyp_distance(x, y);
        EXPECT_NEAR(d, oracle::geodesic_length_by_quadrature(x.z, x.t, y.z, y.t), 1e-7 * (1.0 + d));
        EXPECT_DOUBLE_EQ(d, hyp_distance(y, x));
    }
}

TEST(Distance, InvariantUnderRandomIsometries)
{
    std::mt19937_64 gen(23);
    for (std::uint64_t s = 0; s < 2000; ++s) {
        const Isometry m = verify::random_isometry(s);
        const Point3 x = random_point(gen);
        const Point3 y = random_point(gen);
        const double d = hyp_distance(x, y);
        EXPECT_LE(std::abs(hyp_distance(m.apply(x), m.apply(y)) - d), 1e-9 * (1.0 + d));
    }
}

TEST(Projection, VerticalOntoPlane)
{
    const Horosphere plane = Horosphere::plane(1.0);
    expect_point_near(horo_project(Point3{Complex(0.3, -0.2), 0.4}, plane), Point3{Complex(0.3, -0.2), 1.0});
    expect_point_near(horo_project(at(5.0), plane), Point3{5.0, 1.0});
}

TEST(Projection, InfinityOntoSphereTop)
{
    expect_point_near(horo_project(IdealPoint::infinity(), Horosphere::tangent(0.0, 1.0)), Point3{0.0, 1.0});
}

TEST(Projection, Errors)
{
    expect_errc(Errc::InsideHoroball, [] { horo_project(Point3{0.0, 2.0}, Horosphere::plane(1.0)); });
    expect_errc(Errc::CoincidesWithCenter, [] { horo_project(IdealPoint::infinity(), Horosphere::plane(1.0)); });
    expect_errc(Errc::CoincidesWithCenter, [] { horo_project(at(2.0), Horosphere::tangent(2.0, 0.5)); });
    expect_errc(Errc::InsideHoroball, [] { horo_project(Point3{2.0, 0.25}, Horosphere::tangent(2.0, 0.5)); });
}

TEST(Projection, Idempotent)
{
    std::mt19937_64 gen(29);
    for (std::uint64_t s = 0; s < 500; ++s) {
        const Isometry m = verify::random_isometry(s);
        const Horosphere h = m.apply(Horosphere::plane(1.0));
        Point3 x = random_point(gen);
        x.t = std::min(x.t, 0.99);
        const Point3 once = horo_project(m.apply(x), h);
        const Point3 twice = horo_project(once, h);
        const Isometry chart = normalize_to_plane(h);
        expect_point_near(chart.apply(once), chart.apply(twice));
    }
}

TEST(HoroDistance, FlatMetricOnPlanes)
{
    EXPECT_DOUBLE_EQ(horo_distance(Horosphere::plane(1.0), Point3{0.0, 1.0}, Point3{3.0, 1.0}), 3.0);
    EXPECT_DOUBLE_EQ(horo_distance(Horosphere::plane(2.0), Point3{0.0, 2.0}, Point3{3.0, 2.0}), 1.5);
}

TEST(HoroDistance, InvariantUnderIsometries)
{
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    const Horosphere plane = Horosphere::plane(1.0);
    for (std::uint64_t s = 0; s < 500; ++s) {
        const Isometry m = verify::random_isometry(s);
        const Point3 u{Complex(coord(gen), coord(gen)), 1.0};
        const Point3 v{Complex(coord(gen), coord(gen)), 1.0};
        EXPECT_NEAR(horo_distance(m.apply(plane), m.apply(u), m.apply(v)), horo_distance(plane, u, v), 1e-9);
    }
}

TEST(HoroDistance, RejectsPointsOffTheHorosphere)
{
    expect_errc(Errc::NotOnHorosphere, [] { horo_distance(Horosphere::plane(1.0), Point3{0.0, 1.0}, Point3{1.0, 0.9}); });
}

TEST(Shadow, UnitBallBelowPlane)
{
    const ShadowDisk d = shadow(Horosphere::plane(1.0), Horosphere::tangent(0.0, 0.999999));
    expect_point_near(d.center, Point3{0.0, 1.0});
    EXPECT_NEAR(d.radius, 0.5, 1e-6);
}

TEST(Shadow, SmallBallMatchesSampledProjection)
{
    const ShadowDisk d = shadow(Horosphere::plane(1.0), Horosphere::tangent(3.0, 0.2));
    expect_point_near(d.center, Point3{3.0, 1.0});
    EXPECT_DOUBLE_EQ(d.radius, 0.1);
    EXPECT_NEAR(oracle::sampled_vertical_shadow(0.2, 10000, 1), d.radius, 1e-6);
}

TEST(Shadow, OverlapAndTangencyRejected)
{
    expect_errc(Errc::NotDisjoint, [] { shadow(Horosphere::plane(1.0), Horosphere::tangent(0.0, 1.0 + 1e-6)); });
    expect_errc(Errc::NotDisjoint, [] { shadow(Horosphere::plane(1.0), Horosphere::tangent(0.0, 1.0)); });
    expect_errc(Errc::NotDisjoint, [] { shadow(Horosphere::plane(1.0), Horosphere::plane(0.5)); });
}

TEST(Shadow, RadiusAtMostHalfForDisjointPairs)
{
    for (std::uint64_t s = 0; s < 500; ++s) {
        const Isometry m = verify::random_isometry(s);
        const double diameter = 0.01 + 0.98 * static_cast<double>(s) / 500.0;
        const ShadowDisk d = shadow(m.apply(Horosphere::plane(1.0)), m.apply(Horosphere::tangent(Complex(1.0, -1.0), diameter)));
        EXPECT_NEAR(d.radius, diameter / 2.0, 1e-9);
        EXPECT_LE(d.radius, 0.5 + 1e-9);
    }
}

TEST(GeodesicMeets, WideSegmentReachesPlane)
{
    EXPECT_TRUE(geodesic_meets_horosphere(Point3{0.0, 0.5}, Point3{2.0, 0.5}, Horosphere::plane(1.0)));
}

TEST(GeodesicMeets, NarrowSegmentStaysBelow)
{
    EXPECT_NEAR(oracle::sampled_segment_apex(0.0, 0.5, 0.1, 0.5), 0.502494, 1e-6);
    EXPECT_FALSE(geodesic_meets_horosphere(Point3{0.0, 0.5}, Point3{0.1, 0.5}, Horosphere::plane(1.0)));
}

TEST(GeodesicMeets, VerticalLineCrossesEveryPlane)
{
    EXPECT_TRUE(geodesic_meets_horosphere(at(0.0), IdealPoint::infinity(), Horosphere::plane(1.0)));
}

TEST(GeodesicMeets, AgreesWithSampledApex)
{
    std::mt19937_64 gen(37);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> height(0.01, 0.99);
    const Horosphere plane = Horosphere::plane(1.0);
    int decided = 0;
    for (int i = 0; i < 300; ++i) {
        const Point3 x{Complex(coord(gen), coord(gen)), height(gen)};
        const Point3 y{Complex(coord(gen), coord(gen)), height(gen)};
        const double apex = oracle::sampled_segment_apex(x.z, x.t, y.z, y.t, 20000);
        if (std::abs(apex - 1.0) < 1e-6)
            continue;
        ++decided;
        EXPECT_EQ(geodesic_meets_horosphere(x, y, plane), apex > 1.0);
    }
    EXPECT_GT(decided, 250);
}

TEST(GeodesicMeets, InsideHoroballRejected)
{
    expect_errc(Errc::InsideHoroball,
                [] { geodesic_meets_horosphere(Point3{0.0, 1.5}, Point3{1.0, 0.5}, Horosphere::plane(1.0)); });
}

TEST(Normalize, PlanesAndSpheres)
{
    const auto check = [](const Horosphere& h) {
        const Horosphere image = normalize_to_plane(h).apply(h);
        EXPECT_TRUE(image.center.is_infinity());
        EXPECT_NEAR(image.size, 1.0, 1e-9);
    };
    check(Horosphere::plane(1.0));
    check(Horosphere::plane(4.0));
    check(Horosphere::tangent(0.0, 1.0));
    check(Horosphere::tangent(Complex(-3.0, 2.5), 0.01));

    const Point3 p = normalize_to_plane(Horosphere::plane(4.0)).apply(Point3{Complex(4.0, 8.0), 2.0});
    expect_point_near(p, Point3{Complex(1.0, 2.0), 0.5}, 1e-15);
}

TEST(Normalize, RandomHorospheres)
{
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Isometry m = verify::random_isometry(s);
        const Horosphere h = m.apply(Horosphere::tangent(Complex(0.5, 0.5), 0.3));
        const Horosphere image = normalize_to_plane(h).apply(h);
        EXPECT_TRUE(image.center.is_infinity());
        EXPECT_NEAR(image.size, 1.0, 1e-9);
    }
}
