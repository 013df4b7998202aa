#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ortho/surface.hpp"

namespace ortho {

struct OrthoParams {
    double epsilon = 0.0;  // FOV half-angle, radians, in (0, pi/2)
    double d = 0.0;        // working distance, > 0
    double dx = 0.0;       // probe grid resolution, > 0
    double dy = 0.0;

    void validate() const;
};

// Angle between curve normals [-p0,1] and [-p,1].
double phi_curve(double p0, double p);
// Angular offset within the FOV: atan(delta_x / d), delta_x >= 0, d > 0.
double theta_curve(double delta_x, double d);
// Angle between surface normals [p0,q0,-1] and [p,q,-1].
double phi_surface(double p0, double q0, double p, double q);
// atan(hypot(delta_x, delta_y) / d), d > 0.
double theta_surface(double delta_x, double delta_y, double d);

struct CurveBounds {
    double x_left = 0.0;
    double x_right = 0.0;
    double center_x = 0.0;

    double width() const { return x_right - x_left; }
};

/// March left and right from x0 in steps of params.dx; both theta (from the
/// horizontal offset) and phi (against the center slope) must stay <= epsilon.
/// Returns the last accepted x on each side; the march also stops at the
/// domain edge.
CurveBounds curve_bounds(const AnalyticCurve& c, double x0, const OrthoParams& params);

/// All integer pairs with |n1| + |n2| = n, counterclockwise from (n, 0).
/// n = 0 gives {(0,0)}; n >= 1 gives exactly 4n pairs.
std::vector<std::pair<int, int>> pair_gen(int n);

struct RegionMember {
    int i = 0, j = 0;        // grid offsets from the center in dx/dy steps
    double x = 0.0, y = 0.0, z = 0.0;
};

struct OrthoRegion {
    std::array<double, 3> center{};            // world point, always a member
    std::vector<RegionMember> members;          // sorted by (j, i)
    std::vector<std::array<double, 2>> boundary;  // closed polyline, world xy
    OrthoParams params;
    bool connectivity_filtered = false;

    bool contains(int i, int j) const {
        return keys.count(pack(i, j)) != 0;
    }
    static std::int64_t pack(int i, int j) {
        return (static_cast<std::int64_t>(i) << 32) ^ static_cast<std::uint32_t>(j);
    }

    std::unordered_set<std::int64_t> keys;
};

struct RegionOptions {
    bool connectivity_filter = false;
    // Probe gradients from the center Hessian increment instead of exact
    // evaluation (the cheap first-order mode; off by default).
    bool fast_gradients = false;
    // Reset the empty-ring counter whenever a ring accepts a point. The
    // default counts empty rings without resetting.
    bool buff_reset_on_success = false;
    int buff_threshold = 3;
};

/// Ring-grown orthographic region around (x0,y0): candidates come from
/// pair_gen rings, each accepted iff theta <= epsilon and phi <= epsilon
/// against the center gradient. Growth stops once the empty-ring counter
/// exceeds buff_threshold or the rings leave the domain.
OrthoRegion surface_region(const SurfaceField& s, double x0, double y0,
                           const OrthoParams& params,
                           const RegionOptions& options = {});

/// Oracle counterpart: scans every grid point with L-inf world distance
/// <= d*tan(epsilon) + 2*max(dx,dy) of the center with the same acceptance
/// tests. No rings, no early termination.
OrthoRegion brute_force_region(const SurfaceField& s, double x0, double y0,
                               const OrthoParams& params);

/// Closed contour of the membership mask (outline of the union of member
/// cells); vertices sit on cell corners at half-step offsets. Returns the
/// outermost loop.
std::vector<std::array<double, 2>> region_boundary(const OrthoRegion& region);

struct CircleCoverage {
    long captures = 0;         // ceil(2*pi / epsilon), imaging from the center
    double arc_centered = 0.0;   // arc length imaged per unit radius from the center
    double arc_eccentric = 0.0;  // arc length imaged per unit radius from an eccentric point
};

CircleCoverage circle_coverage(double epsilon);

} // namespace ortho
