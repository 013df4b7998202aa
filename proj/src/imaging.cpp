#include "ortho/imaging.hpp"

#include <cmath>
#include <limits>

namespace ortho {

Vec3 unit_normal(double p, double q, Orientation orientation) {
    double len = std::sqrt(p * p + q * q + 1.0);
    if (!std::isfinite(len))
        fail(ErrorKind::InvalidArgument, "non-finite gradient for unit normal");
    Vec3 down{p / len, q / len, -1.0 / len};
    if (orientation == Orientation::Down) return down;
    return {-down[0], -down[1], -down[2]};
}

ImagingSample imaging_point(const SurfaceField& s, double x, double y, double d,
                            Orientation orientation) {
    if (!(d > 0.0))
        fail(ErrorKind::InvalidArgument, "imaging distance must be positive");
    double z = s.eval(x, y);
    Grad2 g = s.gradient(x, y);
    Vec3 n = unit_normal(g[0], g[1], orientation);
    Vec3 base{x, y, z};
    Vec3 image{x + d * n[0], y + d * n[1], z + d * n[2]};
    return {base, image, d, n};
}

std::array<double, 2> imaging_curve(const AnalyticCurve& c, double x, double d,
                                    Orientation orientation) {
    if (!(d > 0.0))
        fail(ErrorKind::InvalidArgument, "imaging distance must be positive");
    if (!c.domain.contains(x))
        fail(ErrorKind::OutOfDomain, "curve point outside domain");
    if (c.is_nonsmooth_at(x))
        fail(ErrorKind::NonsmoothPoint, "no imaging point at a kink of " + c.name);
    double fp = c.deriv(x);
    double tx, tz;
    if (std::isfinite(fp)) {
        double len = std::hypot(1.0, fp);
        tx = fp / len;
        tz = 1.0 / len;
    } else {
        tx = fp > 0 ? 1.0 : -1.0;
        tz = 0.0;
    }
    double sgn = (orientation == Orientation::Up) ? 1.0 : -1.0;
    return {x - sgn * d * tx, c.eval(x) + sgn * d * tz};
}

ValidityReport curve_validity(const AnalyticCurve& c, double d,
                              double scan_resolution) {
    if (!(d > 0.0))
        fail(ErrorKind::InvalidArgument, "imaging distance must be positive");
    double res = scan_resolution > 0.0 ? scan_resolution : c.domain.span() / 2048.0;

    ValidityReport report;
    report.d = d;
    long n = static_cast<long>(std::ceil(c.domain.span() / res));
    for (long k = 0; k <= n; ++k) {
        double x = c.domain.lo + k * res;
        if (x > c.domain.hi) x = c.domain.hi;

        // A sample landing on a kink splits into half-step probes on each side.
        double probes[2];
        int n_probes = 1;
        probes[0] = x;
        if (c.is_nonsmooth_at(x)) {
            probes[0] = x - 0.5 * res;
            probes[1] = x + 0.5 * res;
            n_probes = 2;
        }
        for (int t = 0; t < n_probes; ++t) {
            double xs = probes[t];
            if (!c.domain.contains(xs)) continue;
            auto im = imaging_curve(c, xs, d, Orientation::Up);
            if (!c.domain.contains(im[0])) continue;
            if (im[1] < c.eval(im[0])) {
                report.valid = false;
                report.violations.push_back(xs);
            }
        }
    }
    return report;
}

UpperBound upper_bound_D(const AnalyticCurve& c, double tolerance,
                         double scan_resolution) {
    if (!(tolerance > 0.0))
        fail(ErrorKind::InvalidArgument, "tolerance must be positive");
    UpperBound out;
    out.tolerance = tolerance;
    out.domain = c.domain;

    auto valid = [&](double d) { return curve_validity(c, d, scan_resolution).valid; };

    if (!valid(tolerance)) {
        out.kind = UpperBound::Kind::Zero;
        out.value = 0.0;
        return out;
    }

    constexpr double kCap = 1e6;
    double lo = tolerance;
    double hi = std::max(1.0, 2.0 * tolerance);
    while (valid(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > kCap) {
            out.kind = UpperBound::Kind::Infinite;
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
    }
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (valid(mid))
            lo = mid;
        else
            hi = mid;
    }
    out.kind = UpperBound::Kind::Finite;
    out.value = 0.5 * (lo + hi);
    return out;
}

} // namespace ortho
