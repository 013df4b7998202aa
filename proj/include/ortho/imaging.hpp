#pragma once

#include <array>
#include <vector>

#include "ortho/surface.hpp"

namespace ortho {

/// Offset direction for imaging points. Up places the camera above the
/// terrain (the default everywhere); Down reproduces the literal sign of the
/// surface parameterization, offsetting along (p,q,-1).
enum class Orientation { Up, Down };

using Vec3 = std::array<double, 3>;

/// Unit normal of a graph surface from its gradient. Down is
/// (p,q,-1)/sqrt(p^2+q^2+1); Up is its negation.
Vec3 unit_normal(double p, double q, Orientation orientation);

struct ImagingSample {
    Vec3 base;       // P on the surface
    Vec3 image;      // P' = P + d * n
    double d;
    Vec3 normal;     // unit normal used for the offset
};

ImagingSample imaging_point(const SurfaceField& s, double x, double y, double d,
                            Orientation orientation = Orientation::Up);

/// Offset point of a curve: x' = x - d*f'/sqrt(1+f'^2),
/// y' = f(x) + d/sqrt(1+f'^2). Down flips the offset sign.
std::array<double, 2> imaging_curve(const AnalyticCurve& c, double x, double d,
                                    Orientation orientation = Orientation::Up);

struct ValidityReport {
    bool valid = true;
    std::vector<double> violations;  // sample x where the imaging point fell below the curve
    double d = 0.0;
};

/// Dense scan for intersections between C and its imaging curve C': a sample
/// x violates when y'(x) < f(x') with x' inside the domain. Samples at kinks
/// are replaced by half-step offsets on both sides. scan_resolution <= 0
/// selects the default domain span / 2048.
ValidityReport curve_validity(const AnalyticCurve& c, double d,
                              double scan_resolution = 0.0);

struct UpperBound {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind = Kind::Infinite;
    double value = 0.0;     // meaningful iff kind == Finite
    double tolerance = 0.0;
    Interval domain;
};

/// Bisection for the supremum D of valid imaging distances. Doubles from 1
/// until validity fails (cap 1e6 -> Infinite), then bisects until the bracket
/// width drops below tolerance. Validity already failing at d = tolerance
/// reports Zero.
UpperBound upper_bound_D(const AnalyticCurve& c, double tolerance = 1e-3,
                         double scan_resolution = 0.0);

} // namespace ortho
