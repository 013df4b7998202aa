#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <variant>
#include <vector>

#include "ortho/approx.hpp"
#include "ortho/surface.hpp"
#include "support.hpp"

using ortho::ApproxComparison;
using ortho::ApproxMethod;
using ortho::BoundaryApprox;
using ortho::Error;
using ortho::ErrorKind;
using ortho::OrthoParams;
using ortho::SurfaceField;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDeg = kPi / 180.0;
constexpr ErrorKind kNoError = static_cast<ErrorKind>(-1);

template <typename F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return kNoError;
}

ortho::AnalyticSurface surface_named(const std::string& name,
                                     const json& params = json::object()) {
    return std::get<ortho::AnalyticSurface>(ortho::make_builtin(name, params));
}

double shoelace(const std::vector<std::array<double, 2>>& poly) {
    double area = 0.0;
    size_t n = poly.size();
    for (size_t k = 0; k < n; ++k) {
        const auto& p = poly[k];
        const auto& q = poly[(k + 1) % n];
        area += p[0] * q[1] - q[0] * p[1];
    }
    return std::abs(0.5 * area);
}

} // namespace

TEST_CASE("ray bounds on a plane stop at the theta cone") {
    auto plane = surface_named("plane", {{"a", 0.2}, {"b", 0.1}});
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 2.0, 0.005, 0.005};
    double R = p.d * std::tan(p.epsilon);
    for (double ang : {0.0, 0.7, kPi / 2.0, 2.5, kPi, 4.4}) {
        auto ray = ortho::ray_bound(f, 0.5, -0.5, ang, p, 7);
        CHECK(ray.direction_index == 7);
        CHECK(ray.angle == ang);
        CHECK(std::abs(ray.distance_from_center - R) <= 1.5 * p.dx);
        CHECK(ray.endpoint[0] ==
              doctest::Approx(0.5 + ray.distance_from_center * std::cos(ang))
                  .epsilon(1e-9));
    }
}

TEST_CASE("ray bounds respect the domain edge") {
    auto plane = surface_named("plane");
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 50.0, 0.05, 0.05};  // reach well past the domain
    auto ray = ortho::ray_bound(f, 4.0, 0.0, 0.0, p);
    CHECK(ray.endpoint[0] <= 5.0);
    CHECK(ray.endpoint[0] >= 5.0 - 2.0 * p.dx);
}

TEST_CASE("octagon around a flat center") {
    auto plane = surface_named("plane", {{"c", 1.0}});
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 2.0, 0.005, 0.005};
    auto a = ortho::approx_polygonal(f, 0.0, 0.0, 8, p);
    REQUIRE(a.kind == BoundaryApprox::Kind::Polygon);
    REQUIRE(a.polygon.size() == 8);
    CHECK(a.method_tag == "approach-1");

    double mean_r = 0.0;
    for (const auto& v : a.polygon) mean_r += std::hypot(v[0], v[1]);
    mean_r /= 8.0;
    // Inscribed octagon area: (1/2) N r^2 sin(2 pi / N) ~ 0.9003 pi r^2.
    double expect = 0.5 * 8.0 * mean_r * mean_r * std::sin(2.0 * kPi / 8.0);
    CHECK(shoelace(a.polygon) == doctest::Approx(expect).epsilon(0.02));
    CHECK(expect / (kPi * mean_r * mean_r) == doctest::Approx(0.9003).epsilon(1e-3));
}

TEST_CASE("polygon vertices pass the acceptance predicate") {
    struct Case {
        std::string name;
        json params;
        double cx, cy;
    };
    const std::vector<Case> cases = {
        {"plane", {{"a", 0.3}}, 0.2, 0.4},
        {"cos_plus_cos", json::object(), 0.3, -0.2},
        {"sphere", {{"radius", 2.0}}, 0.1, 0.1},
    };
    OrthoParams p{12.0 * kDeg, 1.5, 0.01, 0.01};
    for (const auto& c : cases) {
        auto s = surface_named(c.name, c.params);
        SurfaceField f = ortho::field_of(s);
        auto g0 = f.gradient(c.cx, c.cy);
        for (int n : {3, 8, 16}) {
            auto a = ortho::approx_polygonal(f, c.cx, c.cy, n, p);
            REQUIRE(a.polygon.size() == static_cast<size_t>(n));
            for (const auto& v : a.polygon) {
                CHECK(ortho::theta_surface(v[0] - c.cx, v[1] - c.cy, p.d) <=
                      p.epsilon + 1e-9);
                auto g = f.gradient(v[0], v[1]);
                CHECK(ortho::phi_surface(g0[0], g0[1], g[0], g[1]) <=
                      p.epsilon + 1e-9);
            }
        }
    }
}

TEST_CASE("direction count validation") {
    auto plane = surface_named("plane");
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    CHECK(kind_of([&] { ortho::approx_polygonal(f, 0, 0, 2, p); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { ortho::approx_elliptical(f, 0, 0, 7, p); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { ortho::approx_elliptical(f, 0, 0, 2, p); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { ortho::approx_circular_one(f, 0, 0, 2, p); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { ortho::approx_circular_two(f, 0, 0, 1.0, p, 1.0); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("collapsed first steps are degenerate") {
    auto plane = surface_named("plane");
    SurfaceField f = ortho::field_of(plane);
    // A 0.4 step at d = 2 already exceeds a 10 degree cone.
    OrthoParams p{10.0 * kDeg, 2.0, 0.4, 0.4};
    CHECK(kind_of([&] { ortho::approx_polygonal(f, 0, 0, 8, p); }) ==
          ErrorKind::DegenerateRegion);
    CHECK(kind_of([&] { ortho::approx_elliptical(f, 0, 0, 8, p); }) ==
          ErrorKind::DegenerateRegion);
    CHECK(kind_of([&] { ortho::approx_circular_one(f, 0, 0, 8, p); }) ==
          ErrorKind::DegenerateRegion);
}

TEST_CASE("ellipse fit is round where the region is round") {
    OrthoParams p{10.0 * kDeg, 2.0, 0.005, 0.005};
    double R = p.d * std::tan(p.epsilon);

    auto plane = surface_named("plane");
    SurfaceField fp = ortho::field_of(plane);
    auto e1 = ortho::approx_elliptical(fp, 0.0, 0.0, 16, p);
    REQUIRE(e1.kind == BoundaryApprox::Kind::Ellipse);
    CHECK(e1.method_tag == "approach-2");
    CHECK(e1.ellipse.semi_major == doctest::Approx(R).epsilon(0.03));
    CHECK(e1.ellipse.semi_minor == doctest::Approx(R).epsilon(0.03));
    CHECK(e1.ellipse.semi_major / e1.ellipse.semi_minor <= 1.05);
    CHECK(std::abs(e1.ellipse.center[0]) <= p.dx);
    CHECK(std::abs(e1.ellipse.center[1]) <= p.dy);

    auto bowl = surface_named("sphere", {{"radius", 2.0}});
    SurfaceField fb = ortho::field_of(bowl);
    auto e2 = ortho::approx_elliptical(fb, 0.0, 0.0, 16, p);
    CHECK(e2.ellipse.semi_major / e2.ellipse.semi_minor <= 1.05);
}

TEST_CASE("mean-radius circle averages the rays") {
    auto bowl = surface_named("sphere", {{"radius", 2.0}});
    SurfaceField f = ortho::field_of(bowl);
    OrthoParams p{10.0 * kDeg, 1.0, 0.005, 0.005};
    const int n = 8;
    auto a = ortho::approx_circular_one(f, 0.0, 0.0, n, p);
    REQUIRE(a.kind == BoundaryApprox::Kind::Circle);
    CHECK(a.method_tag == "approach-3");
    CHECK(a.circle.center[0] == 0.0);
    CHECK(a.circle.center[1] == 0.0);

    double sum = 0.0;
    std::vector<double> dists;
    for (int k = 0; k < n; ++k) {
        auto ray = ortho::ray_bound(f, 0.0, 0.0, 2.0 * kPi * k / n, p, k);
        dists.push_back(ray.distance_from_center);
        sum += ray.distance_from_center;
    }
    CHECK(a.circle.radius == doctest::Approx(sum / n).epsilon(1e-12));
    // At the bowl apex the region is round, so no ray strays far from the mean.
    for (double dist : dists)
        CHECK(a.circle.radius == doctest::Approx(dist).epsilon(0.02));
}

TEST_CASE("curvature-scaled circle endpoints") {
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    double R = p.d * std::tan(p.epsilon);

    auto plane = surface_named("plane");
    SurfaceField fp = ortho::field_of(plane);
    // Flat center with a positive curvature budget: the full radius survives.
    auto flat = ortho::approx_circular_two(fp, 0.0, 0.0, 2.0, p, 1.0);
    REQUIRE(flat.kind == BoundaryApprox::Kind::Circle);
    CHECK(flat.method_tag == "approach-4");
    CHECK(flat.circle.radius == R);
    CHECK(!flat.flat_surface_note);

    // Center at the curvature maximum: the radius shrinks to R/m.
    auto dimples = surface_named("cos2_plus_cos2");
    SurfaceField fd = ortho::field_of(dimples);
    auto tight = ortho::approx_circular_two(fd, 0.0, 0.0, 4.0, p, 4.0);
    CHECK(std::abs(tight.circle.radius - R / 4.0) <= 1e-12 * R);

    // Halfway up the curvature scale with m = 2: three quarters of R.
    auto bowl = surface_named("sphere", {{"radius", 2.0}});
    SurfaceField fb = ortho::field_of(bowl);
    auto mid = ortho::approx_circular_two(fb, 0.0, 0.0, 2.0, p, 0.5);
    CHECK(mid.circle.radius == doctest::Approx(0.75 * R).epsilon(1e-12));

    // A curvature magnitude past k_max clamps instead of going negative.
    auto over = ortho::approx_circular_two(fb, 0.0, 0.0, 2.0, p, 0.1);
    CHECK(over.circle.radius == doctest::Approx(0.5 * R).epsilon(1e-12));
}

TEST_CASE("flat surfaces fall back to the full radius with a note") {
    auto plane = surface_named("plane", {{"a", 0.3}, {"b", -0.1}});
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    auto a = ortho::approx_circular_two(f, 0.0, 0.0, 2.0, p, 0.0);
    CHECK(a.flat_surface_note);
    CHECK(a.circle.radius == p.d * std::tan(p.epsilon));
}

TEST_CASE("radius never grows with curvature magnitude") {
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    double prev = -1.0;
    // |K| at the apex of a sphere of radius r is 1/r^2.
    for (double radius : {1.0, 2.0, 4.0}) {
        auto bowl = surface_named("sphere", {{"radius", radius}});
        SurfaceField f = ortho::field_of(bowl);
        auto a = ortho::approx_circular_two(f, 0.0, 0.0, 3.0, p, 1.0);
        CHECK(a.circle.radius > prev);
        prev = a.circle.radius;
    }
}

TEST_CASE("curvature sweep finds the analytic maximum") {
    auto dimples = surface_named("cos2_plus_cos2");
    CHECK(ortho::max_abs_curvature(ortho::field_of(dimples), 0.01, 0.01) == 4.0);

    auto bowl = surface_named("sphere", {{"radius", 2.0}});
    CHECK(ortho::max_abs_curvature(ortho::field_of(bowl), 0.01, 0.01) ==
          doctest::Approx(0.25).epsilon(1e-9));

    auto plane = surface_named("plane", {{"a", 1.0}});
    CHECK(ortho::max_abs_curvature(ortho::field_of(plane), 0.1, 0.1) == 0.0);

    CHECK(kind_of([&] {
              ortho::max_abs_curvature(ortho::field_of(plane), 0.0, 0.1);
          }) == ErrorKind::InvalidArgument);
}

TEST_CASE("containment tests for each shape") {
    BoundaryApprox poly;
    poly.kind = BoundaryApprox::Kind::Polygon;
    poly.polygon = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(ortho::approx_contains(poly, 1.0, 1.0));
    CHECK(!ortho::approx_contains(poly, 3.0, 1.0));
    CHECK(!ortho::approx_contains(poly, -0.1, 0.5));

    BoundaryApprox ell;
    ell.kind = BoundaryApprox::Kind::Ellipse;
    ell.ellipse = {{1.0, 0.0}, 2.0, 1.0, kPi / 2.0};
    CHECK(ortho::approx_contains(ell, 1.0, 1.5));    // along the rotated major axis
    CHECK(!ortho::approx_contains(ell, 2.5, 0.0));   // past the rotated minor axis
    CHECK(ortho::approx_contains(ell, 1.8, 0.0));

    BoundaryApprox circ;
    circ.kind = BoundaryApprox::Kind::Circle;
    circ.circle = {{0.0, 0.0}, 1.0};
    CHECK(ortho::approx_contains(circ, 0.5, 0.5));
    CHECK(!ortho::approx_contains(circ, 0.9, 0.9));
}

TEST_CASE("outlines are closed and dense") {
    BoundaryApprox circ;
    circ.kind = BoundaryApprox::Kind::Circle;
    circ.circle = {{1.0, 2.0}, 0.5};
    auto loop = ortho::approx_outline(circ, 0.01);
    REQUIRE(loop.size() >= 65);
    CHECK(loop.front() == loop.back());
    for (const auto& pt : loop)
        CHECK(std::hypot(pt[0] - 1.0, pt[1] - 2.0) == doctest::Approx(0.5).epsilon(1e-9));

    BoundaryApprox ell;
    ell.kind = BoundaryApprox::Kind::Ellipse;
    ell.ellipse = {{0.0, 0.0}, 2.0, 1.0, 0.3};
    auto eloop = ortho::approx_outline(ell, 0.01);
    CHECK(eloop.front() == eloop.back());
    for (const auto& pt : eloop) {
        double u = std::cos(0.3) * pt[0] + std::sin(0.3) * pt[1];
        double v = -std::sin(0.3) * pt[0] + std::cos(0.3) * pt[1];
        CHECK((u / 2.0) * (u / 2.0) + v * v == doctest::Approx(1.0).epsilon(1e-9));
    }

    BoundaryApprox poly;
    poly.kind = BoundaryApprox::Kind::Polygon;
    poly.polygon = {{0, 0}, {1, 0}, {1, 1}};
    auto ploop = ortho::approx_outline(poly, 0.05);
    CHECK(ploop.front() == ploop.back());
    CHECK(ploop.size() > 30);  // densified well below the vertex count
}

TEST_CASE("comparison of all four methods on a flat region") {
    auto plane = surface_named("plane", {{"a", 0.1}});
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    auto records = ortho::compare(f, 0.0, 0.0, p,
                                  {ApproxMethod::Polygonal, ApproxMethod::Elliptical,
                                   ApproxMethod::CircularOne, ApproxMethod::CircularTwo},
                                  16, 2.0, 1.0);
    REQUIRE(records.size() == 4);
    CHECK(records[0].method_tag == "approach-1");
    CHECK(records[1].method_tag == "approach-2");
    CHECK(records[2].method_tag == "approach-3");
    CHECK(records[3].method_tag == "approach-4");
    double R = p.d * std::tan(p.epsilon);
    for (const auto& r : records) {
        CHECK(r.iou >= 0.95);
        CHECK(r.iou <= 1.0);
        CHECK(r.area_ratio > 0.85);
        CHECK(r.area_ratio < 1.15);
        CHECK(r.hausdorff <= 5.0 * p.dx);
        CHECK(r.hausdorff < 0.2 * R);
        CHECK(r.build_seconds >= 0.0);
    }
}

TEST_CASE("dense polygons track the flat region area closely") {
    auto plane = surface_named("plane");
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    auto records = ortho::compare(f, 0.0, 0.0, p, {ApproxMethod::Polygonal}, 32, 2.0, 1.0);
    REQUIRE(records.size() == 1);
    CHECK(records[0].area_ratio == doctest::Approx(1.0).epsilon(0.05));
    CHECK(records[0].iou >= 0.95);
}

TEST_CASE("comparison metrics are deterministic") {
    auto dimples = surface_named("cos2_plus_cos2");
    SurfaceField f = ortho::field_of(dimples);
    OrthoParams p{12.0 * kDeg, 1.5, 0.01, 0.01};
    auto a = ortho::compare(f, 0.3, 0.2, p,
                            {ApproxMethod::Polygonal, ApproxMethod::CircularTwo}, 16,
                            4.0, 4.0);
    auto b = ortho::compare(f, 0.3, 0.2, p,
                            {ApproxMethod::Polygonal, ApproxMethod::CircularTwo}, 16,
                            4.0, 4.0);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].iou == b[k].iou);
        CHECK(a[k].area_ratio == b[k].area_ratio);
        CHECK(a[k].hausdorff == b[k].hausdorff);
    }
}

TEST_CASE("curvature circles build faster than marching methods") {
    auto dimples = surface_named("cos2_plus_cos2");
    SurfaceField f = ortho::field_of(dimples);
    OrthoParams p{10.0 * kDeg, 2.0, 0.005, 0.005};
    auto records = ortho::compare(f, 0.3, 0.2, p,
                                  {ApproxMethod::Polygonal, ApproxMethod::Elliptical,
                                   ApproxMethod::CircularOne, ApproxMethod::CircularTwo},
                                  64, 2.0, 4.0);
    REQUIRE(records.size() == 4);
    double poly = records[0].build_seconds;
    double ellip = records[1].build_seconds;
    double circ1 = records[2].build_seconds;
    double circ2 = records[3].build_seconds;
    CHECK(circ2 < circ1);
    // The three marching methods share the ray cost; allow generous noise.
    CHECK(circ1 <= 1.2 * poly + 1e-4);
    CHECK(poly <= 1.2 * ellip + 1e-4);
}

TEST_CASE("comparison rejects degenerate regions and empty method lists") {
    auto plane = surface_named("plane");
    SurfaceField f = ortho::field_of(plane);
    OrthoParams coarse{10.0 * kDeg, 2.0, 0.4, 0.4};
    CHECK(kind_of([&] {
              ortho::compare(f, 0.0, 0.0, coarse, {ApproxMethod::Polygonal}, 8, 2.0, 1.0);
          }) == ErrorKind::DegenerateRegion);
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    CHECK(kind_of([&] { ortho::compare(f, 0.0, 0.0, p, {}, 8, 2.0, 1.0); }) ==
          ErrorKind::InvalidArgument);
}
