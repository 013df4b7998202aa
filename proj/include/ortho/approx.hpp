#pragma once

#include <array>
#include <string>
#include <vector>

#include "ortho/region.hpp"
#include "ortho/surface.hpp"

namespace ortho {

struct DirectionalBound {
    int direction_index = 0;
    double angle = 0.0;                  // radians from +x
    std::array<double, 2> endpoint{};    // last accepted point
    double distance_from_center = 0.0;
};

/// March from the center along a fixed direction in steps of
/// (dx*cos(angle), dy*sin(angle)), testing theta and phi at each step.
/// Returns the last accepted point (the center itself if the first step
/// already fails).
DirectionalBound ray_bound(const SurfaceField& s, double x0, double y0,
                           double angle, const OrthoParams& params,
                           int direction_index = 0);

struct Ellipse {
    std::array<double, 2> center{};
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double angle = 0.0;  // orientation of the major axis, radians
};

struct Circle {
    std::array<double, 2> center{};
    double radius = 0.0;
};

struct BoundaryApprox {
    enum class Kind { Polygon, Ellipse, Circle };
    Kind kind = Kind::Polygon;
    std::vector<std::array<double, 2>> polygon;  // kind == Polygon
    Ellipse ellipse;                             // kind == Ellipse
    Circle circle;                               // kind == Circle
    std::string method_tag;                      // approach-1 .. approach-4
    double build_seconds = 0.0;
    bool flat_surface_note = false;  // circular-II on K_max <= 0: radius fell back to R
};

/// Approach 1: N ray bounds at angles 2*pi*k/N joined into a polygon.
BoundaryApprox approx_polygonal(const SurfaceField& s, double x0, double y0,
                                int n_directions, const OrthoParams& params);

/// Approach 2: N ray bounds (N even), N/2 diagonals between opposite points;
/// ellipse with the longest diagonal as major axis (and its midpoint as
/// center), the shortest as minor axis length.
BoundaryApprox approx_elliptical(const SurfaceField& s, double x0, double y0,
                                 int n_directions, const OrthoParams& params);

/// Approach 3: circle centered at (x0,y0) with radius the arithmetic mean of
/// the N ray-bound distances.
BoundaryApprox approx_circular_one(const SurfaceField& s, double x0, double y0,
                                   int n_directions, const OrthoParams& params);

/// Approach 4: circle of radius r = R - (|K|/K_max)*R*(1 - 1/m) with
/// R = d*tan(epsilon); no marching, one curvature evaluation. K_max <= 0
/// (flat surface) falls back to radius R with a note.
BoundaryApprox approx_circular_two(const SurfaceField& s, double x0, double y0,
                                   double m_ratio, const OrthoParams& params,
                                   double k_max);

/// max |K| over the surface domain, sampled on a dx-by-dy grid.
double max_abs_curvature(const SurfaceField& s, double dx, double dy);

enum class ApproxMethod {
    Polygonal = 1,
    Elliptical = 2,
    CircularOne = 3,
    CircularTwo = 4,
};

const char* method_tag(ApproxMethod m);

struct ApproxComparison {
    std::string method_tag;
    double iou = 0.0;         // rasterized overlap with the exact region
    double area_ratio = 0.0;  // approx cells / exact cells
    double hausdorff = 0.0;   // symmetric, between boundaries, world units
    double build_seconds = 0.0;  // median of 5 rebuilds
};

/// Rasterize each approximation on the exact region's grid and report
/// accuracy and build-time metrics. k_max < 0 means "sample it here".
std::vector<ApproxComparison> compare(const SurfaceField& s, double x0, double y0,
                                      const OrthoParams& params,
                                      const std::vector<ApproxMethod>& methods,
                                      int n_directions, double m_ratio,
                                      double k_max = -1.0);

// Rasterization helpers shared by compare() and its tests.
bool approx_contains(const BoundaryApprox& a, double x, double y);
std::vector<std::array<double, 2>> approx_outline(const BoundaryApprox& a,
                                                  double max_segment);

} // namespace ortho
