#include "ortho/approx.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace ortho {

namespace {

constexpr double kPi = 3.14159265358979323846;

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void check_center(const SurfaceField& s, double x0, double y0) {
    if (!s.domain.contains(x0, y0))
        fail(ErrorKind::OutOfDomain, "center outside surface domain");
}

} // namespace

DirectionalBound ray_bound(const SurfaceField& s, double x0, double y0,
                           double angle, const OrthoParams& params,
                           int direction_index) {
    params.validate();
    check_center(s, x0, y0);
    Grad2 g0 = s.gradient(x0, y0);

    double reach = params.d * std::tan(params.epsilon);
    long k_cap = static_cast<long>(std::ceil(
                     std::sqrt(2.0) * reach / std::min(params.dx, params.dy))) +
                 3;

    DirectionalBound out;
    out.direction_index = direction_index;
    out.angle = angle;
    out.endpoint = {x0, y0};
    out.distance_from_center = 0.0;

    double sx = params.dx * std::cos(angle);
    double sy = params.dy * std::sin(angle);
    for (long k = 1; k <= k_cap; ++k) {
        double ox = k * sx, oy = k * sy;
        double x = x0 + ox, y = y0 + oy;
        if (!s.domain.contains(x, y)) break;
        if (theta_surface(ox, oy, params.d) > params.epsilon) break;
        Grad2 g = s.gradient(x, y);
        if (phi_surface(g0[0], g0[1], g[0], g[1]) > params.epsilon) break;
        out.endpoint = {x, y};
        out.distance_from_center = std::hypot(ox, oy);
    }
    return out;
}

namespace {

std::vector<DirectionalBound> all_rays(const SurfaceField& s, double x0, double y0,
                                       int n_directions, const OrthoParams& params) {
    std::vector<DirectionalBound> rays;
    rays.reserve(static_cast<size_t>(n_directions));
    for (int k = 0; k < n_directions; ++k)
        rays.push_back(ray_bound(s, x0, y0, 2.0 * kPi * k / n_directions, params, k));
    for (const auto& r : rays)
        if (!(r.distance_from_center > 0.0))
            fail(ErrorKind::DegenerateRegion,
                 "directional bound collapsed at its first step");
    return rays;
}

} // namespace

BoundaryApprox approx_polygonal(const SurfaceField& s, double x0, double y0,
                                int n_directions, const OrthoParams& params) {
    if (n_directions < 3)
        fail(ErrorKind::InvalidArgument, "polygonal approximation needs >= 3 directions");
    params.validate();
    check_center(s, x0, y0);

    double t0 = now_seconds();
    auto rays = all_rays(s, x0, y0, n_directions, params);
    BoundaryApprox a;
    a.kind = BoundaryApprox::Kind::Polygon;
    a.method_tag = method_tag(ApproxMethod::Polygonal);
    a.polygon.reserve(rays.size());
    for (const auto& r : rays) a.polygon.push_back(r.endpoint);
    a.build_seconds = now_seconds() - t0;
    return a;
}

BoundaryApprox approx_elliptical(const SurfaceField& s, double x0, double y0,
                                 int n_directions, const OrthoParams& params) {
    if (n_directions < 4 || n_directions % 2 != 0)
        fail(ErrorKind::InvalidArgument,
             "elliptical approximation needs an even direction count >= 4");
    params.validate();
    check_center(s, x0, y0);

    double t0 = now_seconds();
    auto rays = all_rays(s, x0, y0, n_directions, params);
    int half = n_directions / 2;
    double best_len = -1.0, worst_len = 0.0;
    int best_k = 0;
    for (int k = 0; k < half; ++k) {
        const auto& a = rays[k].endpoint;
        const auto& b = rays[k + half].endpoint;
        double len = std::hypot(a[0] - b[0], a[1] - b[1]);
        if (len > best_len) {
            best_len = len;
            best_k = k;
        }
        if (k == 0 || len < worst_len) worst_len = len;
    }

    const auto& pa = rays[best_k].endpoint;
    const auto& pb = rays[best_k + half].endpoint;
    BoundaryApprox a;
    a.kind = BoundaryApprox::Kind::Ellipse;
    a.method_tag = method_tag(ApproxMethod::Elliptical);
    a.ellipse.center = {0.5 * (pa[0] + pb[0]), 0.5 * (pa[1] + pb[1])};
    a.ellipse.semi_major = 0.5 * best_len;
    a.ellipse.semi_minor = 0.5 * worst_len;
    a.ellipse.angle = std::atan2(pa[1] - pb[1], pa[0] - pb[0]);
    a.build_seconds = now_seconds() - t0;
    return a;
}

BoundaryApprox approx_circular_one(const SurfaceField& s, double x0, double y0,
                                   int n_directions, const OrthoParams& params) {
    if (n_directions < 3)
        fail(ErrorKind::InvalidArgument, "circular approximation needs >= 3 directions");
    params.validate();
    check_center(s, x0, y0);

    double t0 = now_seconds();
    auto rays = all_rays(s, x0, y0, n_directions, params);
    double sum = 0.0;
    for (const auto& r : rays) sum += r.distance_from_center;
    BoundaryApprox a;
    a.kind = BoundaryApprox::Kind::Circle;
    a.method_tag = method_tag(ApproxMethod::CircularOne);
    a.circle.center = {x0, y0};
    a.circle.radius = sum / n_directions;
    a.build_seconds = now_seconds() - t0;
    return a;
}

BoundaryApprox approx_circular_two(const SurfaceField& s, double x0, double y0,
                                   double m_ratio, const OrthoParams& params,
                                   double k_max) {
    if (!(m_ratio > 1.0))
        fail(ErrorKind::InvalidArgument, "accuracy ratio m must exceed 1");
    params.validate();
    check_center(s, x0, y0);

    double t0 = now_seconds();
    double R = params.d * std::tan(params.epsilon);
    BoundaryApprox a;
    a.kind = BoundaryApprox::Kind::Circle;
    a.method_tag = method_tag(ApproxMethod::CircularTwo);
    a.circle.center = {x0, y0};
    if (k_max > 0.0) {
        Grad2 g = s.gradient(x0, y0);
        Hess2 h = s.hessian(x0, y0);
        double denom = 1.0 + g[0] * g[0] + g[1] * g[1];
        double K = (h[0] * h[2] - h[1] * h[1]) / (denom * denom);
        double ratio = std::min(std::abs(K) / k_max, 1.0);
        a.circle.radius = R - ratio * R * (1.0 - 1.0 / m_ratio);
    } else {
        a.circle.radius = R;
        a.flat_surface_note = true;
    }
    a.build_seconds = now_seconds() - t0;
    return a;
}

double max_abs_curvature(const SurfaceField& s, double dx, double dy) {
    if (!(dx > 0.0) || !(dy > 0.0))
        fail(ErrorKind::InvalidArgument, "sampling resolution must be positive");
    double best = 0.0;
    long nx = static_cast<long>(std::floor((s.domain.x_hi - s.domain.x_lo) / dx));
    long ny = static_cast<long>(std::floor((s.domain.y_hi - s.domain.y_lo) / dy));
    for (long j = 0; j <= ny; ++j) {
        double y = std::min(s.domain.y_lo + j * dy, s.domain.y_hi);
        for (long i = 0; i <= nx; ++i) {
            double x = std::min(s.domain.x_lo + i * dx, s.domain.x_hi);
            Grad2 g = s.gradient(x, y);
            Hess2 h = s.hessian(x, y);
            double denom = 1.0 + g[0] * g[0] + g[1] * g[1];
            double K = (h[0] * h[2] - h[1] * h[1]) / (denom * denom);
            best = std::max(best, std::abs(K));
        }
    }
    return best;
}

const char* method_tag(ApproxMethod m) {
    switch (m) {
        case ApproxMethod::Polygonal: return "approach-1";
        case ApproxMethod::Elliptical: return "approach-2";
        case ApproxMethod::CircularOne: return "approach-3";
        case ApproxMethod::CircularTwo: return "approach-4";
    }
    return "approach-?";
}

// ---------------------------------------------------------------------------
// Containment and outlines
// ---------------------------------------------------------------------------

bool approx_contains(const BoundaryApprox& a, double x, double y) {
    switch (a.kind) {
        case BoundaryApprox::Kind::Polygon: {
            // Even-odd ray crossing; boundary points count as inside closely
            // enough for cell-center rasterization.
            bool inside = false;
            size_t n = a.polygon.size();
            if (n < 3) return false;
            for (size_t i = 0, j = n - 1; i < n; j = i++) {
                double xi = a.polygon[i][0], yi = a.polygon[i][1];
                double xj = a.polygon[j][0], yj = a.polygon[j][1];
                if ((yi > y) != (yj > y)) {
                    double t = (y - yi) / (yj - yi);
                    if (x < xi + t * (xj - xi)) inside = !inside;
                }
            }
            return inside;
        }
        case BoundaryApprox::Kind::Ellipse: {
            const Ellipse& e = a.ellipse;
            if (!(e.semi_major > 0.0) || !(e.semi_minor > 0.0)) return false;
            double ca = std::cos(e.angle), sa = std::sin(e.angle);
            double ux = x - e.center[0], uy = y - e.center[1];
            double u = ca * ux + sa * uy;
            double v = -sa * ux + ca * uy;
            double ru = u / e.semi_major, rv = v / e.semi_minor;
            return ru * ru + rv * rv <= 1.0;
        }
        case BoundaryApprox::Kind::Circle:
            return std::hypot(x - a.circle.center[0], y - a.circle.center[1]) <=
                   a.circle.radius;
    }
    return false;
}

std::vector<std::array<double, 2>> approx_outline(const BoundaryApprox& a,
                                                  double max_segment) {
    if (!(max_segment > 0.0))
        fail(ErrorKind::InvalidArgument, "segment length must be positive");
    std::vector<std::array<double, 2>> out;
    switch (a.kind) {
        case BoundaryApprox::Kind::Polygon: {
            size_t n = a.polygon.size();
            for (size_t i = 0; i < n; ++i) {
                const auto& p = a.polygon[i];
                const auto& q = a.polygon[(i + 1) % n];
                double len = std::hypot(q[0] - p[0], q[1] - p[1]);
                long pieces = std::max(1L, static_cast<long>(std::ceil(len / max_segment)));
                for (long k = 0; k < pieces; ++k) {
                    double t = static_cast<double>(k) / pieces;
                    out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
                }
            }
            if (!out.empty()) out.push_back(out.front());
            return out;
        }
        case BoundaryApprox::Kind::Ellipse: {
            const Ellipse& e = a.ellipse;
            double A = e.semi_major, B = e.semi_minor;
            double per = kPi * (3.0 * (A + B) -
                                std::sqrt(std::max(0.0, (3.0 * A + B) * (A + 3.0 * B))));
            long n = std::max(64L, static_cast<long>(std::ceil(per / max_segment)));
            double ca = std::cos(e.angle), sa = std::sin(e.angle);
            for (long k = 0; k < n; ++k) {
                double t = 2.0 * kPi * k / n;
                double u = A * std::cos(t), v = B * std::sin(t);
                out.push_back({e.center[0] + ca * u - sa * v,
                               e.center[1] + sa * u + ca * v});
            }
            out.push_back(out.front());
            return out;
        }
        case BoundaryApprox::Kind::Circle: {
            const Circle& c = a.circle;
            if (c.radius <= 0.0) return {{c.center[0], c.center[1]}};
            long n = std::max(64L, static_cast<long>(std::ceil(2.0 * kPi * c.radius /
                                                               max_segment)));
            for (long k = 0; k < n; ++k) {
                double t = 2.0 * kPi * k / n;
                out.push_back({c.center[0] + c.radius * std::cos(t),
                               c.center[1] + c.radius * std::sin(t)});
            }
            out.push_back(out.front());
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Comparison metrics
// ---------------------------------------------------------------------------

namespace {

double point_segment_distance(const std::array<double, 2>& p,
                              const std::array<double, 2>& a,
                              const std::array<double, 2>& b) {
    double abx = b[0] - a[0], aby = b[1] - a[1];
    double apx = p[0] - a[0], apy = p[1] - a[1];
    double len2 = abx * abx + aby * aby;
    double t = len2 > 0.0 ? std::clamp((apx * abx + apy * aby) / len2, 0.0, 1.0) : 0.0;
    return std::hypot(apx - t * abx, apy - t * aby);
}

double directed_hausdorff(const std::vector<std::array<double, 2>>& from,
                          const std::vector<std::array<double, 2>>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i + 1 < to.size(); ++i)
            best = std::min(best, point_segment_distance(p, to[i], to[i + 1]));
        if (to.size() == 1)
            best = std::hypot(p[0] - to[0][0], p[1] - to[0][1]);
        worst = std::max(worst, best);
    }
    return worst;
}

BoundaryApprox build_method(const SurfaceField& s, double x0, double y0,
                            ApproxMethod m, int n_directions, double m_ratio,
                            double k_max, const OrthoParams& params) {
    switch (m) {
        case ApproxMethod::Polygonal:
            return approx_polygonal(s, x0, y0, n_directions, params);
        case ApproxMethod::Elliptical:
            return approx_elliptical(s, x0, y0, n_directions, params);
        case ApproxMethod::CircularOne:
            return approx_circular_one(s, x0, y0, n_directions, params);
        case ApproxMethod::CircularTwo:
            return approx_circular_two(s, x0, y0, m_ratio, params, k_max);
    }
    fail(ErrorKind::InvalidArgument, "unknown approximation method");
}

} // namespace

std::vector<ApproxComparison> compare(const SurfaceField& s, double x0, double y0,
                                      const OrthoParams& params,
                                      const std::vector<ApproxMethod>& methods,
                                      int n_directions, double m_ratio,
                                      double k_max) {
    params.validate();
    check_center(s, x0, y0);
    if (methods.empty())
        fail(ErrorKind::InvalidArgument, "no approximation methods selected");
    if (k_max < 0.0 &&
        std::count(methods.begin(), methods.end(), ApproxMethod::CircularTwo) > 0)
        k_max = max_abs_curvature(s, params.dx, params.dy);

    OrthoRegion exact = surface_region(s, x0, y0, params);
    if (exact.members.size() < 2)
        fail(ErrorKind::DegenerateRegion,
             "exact region collapsed to the center; nothing to compare");
    long i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
    for (const auto& m : exact.members) {
        i_lo = std::min<long>(i_lo, m.i);
        i_hi = std::max<long>(i_hi, m.i);
        j_lo = std::min<long>(j_lo, m.j);
        j_hi = std::max<long>(j_hi, m.j);
    }

    std::vector<ApproxComparison> out;
    out.reserve(methods.size());
    for (ApproxMethod m : methods) {
        BoundaryApprox a = build_method(s, x0, y0, m, n_directions, m_ratio, k_max, params);

        // Median build time over five fresh rebuilds.
        std::array<double, 5> times{};
        for (double& t : times) {
            BoundaryApprox again =
                build_method(s, x0, y0, m, n_directions, m_ratio, k_max, params);
            t = again.build_seconds;
        }
        std::sort(times.begin(), times.end());

        // Rasterize both sets on the exact region's lattice. The window pads
        // the exact extent by the approximation's own bounding box.
        long wi_lo = i_lo, wi_hi = i_hi, wj_lo = j_lo, wj_hi = j_hi;
        for (const auto& p : approx_outline(a, std::min(params.dx, params.dy))) {
            wi_lo = std::min(wi_lo, static_cast<long>(std::floor((p[0] - x0) / params.dx)) - 1);
            wi_hi = std::max(wi_hi, static_cast<long>(std::ceil((p[0] - x0) / params.dx)) + 1);
            wj_lo = std::min(wj_lo, static_cast<long>(std::floor((p[1] - y0) / params.dy)) - 1);
            wj_hi = std::max(wj_hi, static_cast<long>(std::ceil((p[1] - y0) / params.dy)) + 1);
        }
        long inter = 0, uni = 0, approx_cells = 0;
        for (long j = wj_lo; j <= wj_hi; ++j)
            for (long i = wi_lo; i <= wi_hi; ++i) {
                bool in_exact = exact.contains(static_cast<int>(i), static_cast<int>(j));
                bool in_approx =
                    approx_contains(a, x0 + i * params.dx, y0 + j * params.dy);
                if (in_approx) ++approx_cells;
                if (in_exact && in_approx) ++inter;
                if (in_exact || in_approx) ++uni;
            }

        auto outline = approx_outline(a, 0.5 * std::min(params.dx, params.dy));
        double h = std::max(directed_hausdorff(outline, exact.boundary),
                            directed_hausdorff(exact.boundary, outline));

        ApproxComparison rec;
        rec.method_tag = a.method_tag;
        rec.iou = uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
        rec.area_ratio = exact.members.empty()
                             ? 0.0
                             : static_cast<double>(approx_cells) /
                                   static_cast<double>(exact.members.size());
        rec.hausdorff = h;
        rec.build_seconds = times[2];
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace ortho
