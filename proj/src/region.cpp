#include "ortho/region.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace ortho {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void OrthoParams::validate() const {
    if (!std::isfinite(epsilon) || !(epsilon > 0.0) || !(epsilon < kPi / 2.0))
        fail(ErrorKind::InvalidArgument, "epsilon must lie in (0, pi/2)");
    if (!std::isfinite(d) || !(d > 0.0))
        fail(ErrorKind::InvalidArgument, "distance d must be positive");
    if (!std::isfinite(dx) || !(dx > 0.0) || !std::isfinite(dy) || !(dy > 0.0))
        fail(ErrorKind::InvalidArgument, "grid resolution must be positive");
}

double phi_curve(double p0, double p) {
    if (!std::isfinite(p0) || !std::isfinite(p))
        fail(ErrorKind::InvalidArgument, "non-finite slope in phi");
    if (p0 == p) return 0.0;  // identical normals, exact zero
    double c = (p0 * p + 1.0) /
               (std::sqrt(p0 * p0 + 1.0) * std::sqrt(p * p + 1.0));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double theta_curve(double delta_x, double d) {
    if (!(d > 0.0))
        fail(ErrorKind::InvalidArgument, "distance d must be positive");
    return std::atan(std::abs(delta_x) / d);
}

double phi_surface(double p0, double q0, double p, double q) {
    if (!std::isfinite(p0) || !std::isfinite(q0) || !std::isfinite(p) || !std::isfinite(q))
        fail(ErrorKind::InvalidArgument, "non-finite gradient in phi");
    if (p0 == p && q0 == q) return 0.0;  // identical normals, exact zero
    double c = (p0 * p + q0 * q + 1.0) /
               (std::sqrt(p0 * p0 + q0 * q0 + 1.0) * std::sqrt(p * p + q * q + 1.0));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double theta_surface(double delta_x, double delta_y, double d) {
    if (!(d > 0.0))
        fail(ErrorKind::InvalidArgument, "distance d must be positive");
    return std::atan(std::hypot(delta_x, delta_y) / d);
}

CurveBounds curve_bounds(const AnalyticCurve& c, double x0, const OrthoParams& params) {
    params.validate();
    if (!c.domain.contains(x0))
        fail(ErrorKind::OutOfDomain, "center outside curve domain");
    if (c.is_nonsmooth_at(x0))
        fail(ErrorKind::NonsmoothPoint, "center slope undefined at a kink of " + c.name);
    double p0 = c.deriv(x0);

    auto accepted = [&](long k) {
        double x = x0 + k * params.dx;
        if (!c.domain.contains(x)) return false;
        if (c.is_nonsmooth_at(x)) return false;
        if (theta_curve(k * params.dx, params.d) > params.epsilon) return false;
        double p = c.deriv(x);
        if (!std::isfinite(p)) return false;
        return phi_curve(p0, p) <= params.epsilon;
    };

    CurveBounds b;
    b.center_x = x0;
    long right = 0;
    while (accepted(right + 1)) ++right;
    long left = 0;
    while (accepted(-(left + 1))) ++left;
    b.x_right = x0 + right * params.dx;
    b.x_left = x0 - left * params.dx;
    return b;
}

std::vector<std::pair<int, int>> pair_gen(int n) {
    if (n < 0)
        fail(ErrorKind::InvalidArgument, "ring index must be >= 0");
    if (n == 0) return {{0, 0}};
    std::vector<std::pair<int, int>> out;
    out.reserve(4 * static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) out.emplace_back(n - k, k);
    for (int k = 0; k < n; ++k) out.emplace_back(-k, n - k);
    for (int k = 0; k < n; ++k) out.emplace_back(-(n - k), -k);
    for (int k = 0; k < n; ++k) out.emplace_back(k, -(n - k));
    return out;
}

namespace {

// Acceptance context shared verbatim by the grown and brute-force regions so
// the two produce bit-identical member sets.
struct Accept {
    const SurfaceField& s;
    double x0, y0;
    Grad2 g0;
    Hess2 h0;
    const OrthoParams& params;
    bool fast_gradients;

    enum class Result { Member, Rejected, OutOfDomain };

    Result test(int i, int j, RegionMember& m) const {
        double x = x0 + i * params.dx;
        double y = y0 + j * params.dy;
        if (!s.domain.contains(x, y)) return Result::OutOfDomain;
        if (theta_surface(i * params.dx, j * params.dy, params.d) > params.epsilon)
            return Result::Rejected;
        Grad2 g;
        if (fast_gradients) {
            double ddx = i * params.dx, ddy = j * params.dy;
            g = {g0[0] + h0[0] * ddx + h0[1] * ddy,
                 g0[1] + h0[1] * ddx + h0[2] * ddy};
        } else {
            g = s.gradient(x, y);
        }
        if (phi_surface(g0[0], g0[1], g[0], g[1]) > params.epsilon)
            return Result::Rejected;
        m = {i, j, x, y, s.eval(x, y)};
        return Result::Member;
    }
};

void finalize(OrthoRegion& region) {
    std::sort(region.members.begin(), region.members.end(),
              [](const RegionMember& a, const RegionMember& b) {
                  return a.j != b.j ? a.j < b.j : a.i < b.i;
              });
    region.keys.clear();
    region.keys.reserve(region.members.size());
    for (const auto& m : region.members)
        region.keys.insert(OrthoRegion::pack(m.i, m.j));
    region.boundary = region_boundary(region);
}

void connectivity_filter(OrthoRegion& region) {
    std::unordered_set<std::int64_t> seen;
    std::deque<std::pair<int, int>> queue;
    std::unordered_set<std::int64_t> all;
    for (const auto& m : region.members)
        all.insert(OrthoRegion::pack(m.i, m.j));
    queue.emplace_back(0, 0);
    seen.insert(OrthoRegion::pack(0, 0));
    while (!queue.empty()) {
        auto [ci, cj] = queue.front();
        queue.pop_front();
        for (int di = -1; di <= 1; ++di)
            for (int dj = -1; dj <= 1; ++dj) {
                if (di == 0 && dj == 0) continue;
                std::int64_t key = OrthoRegion::pack(ci + di, cj + dj);
                if (all.count(key) && !seen.count(key)) {
                    seen.insert(key);
                    queue.emplace_back(ci + di, cj + dj);
                }
            }
    }
    std::vector<RegionMember> kept;
    kept.reserve(region.members.size());
    for (const auto& m : region.members)
        if (seen.count(OrthoRegion::pack(m.i, m.j)))
            kept.push_back(m);
    region.members = std::move(kept);
    region.connectivity_filtered = true;
}

} // namespace

OrthoRegion surface_region(const SurfaceField& s, double x0, double y0,
                           const OrthoParams& params, const RegionOptions& options) {
    params.validate();
    if (!s.domain.contains(x0, y0))
        fail(ErrorKind::OutOfDomain, "region center outside surface domain");
    if (options.buff_threshold < 0)
        fail(ErrorKind::InvalidArgument, "buff threshold must be >= 0");

    double z0 = s.eval(x0, y0);
    Grad2 g0 = s.gradient(x0, y0);
    Hess2 h0{0, 0, 0};
    if (options.fast_gradients) h0 = s.hessian(x0, y0);
    Accept accept{s, x0, y0, g0, h0, params, options.fast_gradients};

    OrthoRegion region;
    region.center = {x0, y0, z0};
    region.params = params;
    region.members.push_back({0, 0, x0, y0, z0});

    // Any ring beyond this L1 radius lies entirely outside the theta cone, so
    // capping there cannot drop an acceptable point.
    double reach = params.d * std::tan(params.epsilon);
    long n_cap = static_cast<long>(
                     std::ceil(std::sqrt(2.0) * reach / std::min(params.dx, params.dy))) +
                 3;

    int buff = 0;
    for (long n = 1; n <= n_cap; ++n) {
        bool any_member = false;
        bool any_in_domain = false;
        for (auto [i, j] : pair_gen(static_cast<int>(n))) {
            RegionMember m;
            switch (accept.test(i, j, m)) {
                case Accept::Result::Member:
                    region.members.push_back(m);
                    any_member = true;
                    any_in_domain = true;
                    break;
                case Accept::Result::Rejected:
                    any_in_domain = true;
                    break;
                case Accept::Result::OutOfDomain:
                    break;
            }
        }
        if (!any_in_domain) break;
        if (any_member) {
            if (options.buff_reset_on_success) buff = 0;
        } else {
            ++buff;
        }
        if (buff > options.buff_threshold) break;
    }

    if (options.connectivity_filter) connectivity_filter(region);
    finalize(region);
    return region;
}

OrthoRegion brute_force_region(const SurfaceField& s, double x0, double y0,
                               const OrthoParams& params) {
    params.validate();
    if (!s.domain.contains(x0, y0))
        fail(ErrorKind::OutOfDomain, "region center outside surface domain");

    double z0 = s.eval(x0, y0);
    Grad2 g0 = s.gradient(x0, y0);
    Accept accept{s, x0, y0, g0, Hess2{0, 0, 0}, params, false};

    OrthoRegion region;
    region.center = {x0, y0, z0};
    region.params = params;

    double reach = params.d * std::tan(params.epsilon) + 2.0 * std::max(params.dx, params.dy);
    long imax = static_cast<long>(std::ceil(reach / params.dx));
    long jmax = static_cast<long>(std::ceil(reach / params.dy));
    for (long j = -jmax; j <= jmax; ++j)
        for (long i = -imax; i <= imax; ++i) {
            RegionMember m;
            if (accept.test(static_cast<int>(i), static_cast<int>(j), m) ==
                Accept::Result::Member)
                region.members.push_back(m);
        }

    finalize(region);
    return region;
}

namespace {

// Corner lattice at half-step offsets: corner (a,b) sits at
// (x0 + a*dx/2, y0 + b*dy/2) with odd a,b.
struct CornerKey {
    int a, b;
    bool operator<(const CornerKey& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
    bool operator==(const CornerKey& o) const { return a == o.a && b == o.b; }
};

} // namespace

std::vector<std::array<double, 2>> region_boundary(const OrthoRegion& region) {
    if (region.members.empty()) return {};

    const double dx = region.params.dx, dy = region.params.dy;
    const double cx = region.center[0], cy = region.center[1];

    // Directed cell edges with the region on the left.
    std::map<CornerKey, std::vector<CornerKey>> edges;
    auto add_edge = [&edges](CornerKey from, CornerKey to) {
        edges[from].push_back(to);
    };
    for (const auto& m : region.members) {
        int a0 = 2 * m.i - 1, a1 = 2 * m.i + 1;
        int b0 = 2 * m.j - 1, b1 = 2 * m.j + 1;
        if (!region.contains(m.i, m.j - 1)) add_edge({a0, b0}, {a1, b0});
        if (!region.contains(m.i + 1, m.j)) add_edge({a1, b0}, {a1, b1});
        if (!region.contains(m.i, m.j + 1)) add_edge({a1, b1}, {a0, b1});
        if (!region.contains(m.i - 1, m.j)) add_edge({a0, b1}, {a0, b0});
    }

    auto world = [&](CornerKey c) {
        return std::array<double, 2>{cx + c.a * 0.5 * dx, cy + c.b * 0.5 * dy};
    };

    // Stitch directed edges into loops. Where two loops share a corner (cells
    // touching diagonally) prefer the sharpest left turn, which keeps each
    // loop simple.
    std::vector<std::vector<CornerKey>> loops;
    while (!edges.empty()) {
        auto it = edges.begin();
        CornerKey start = it->first;
        CornerKey cur = start;
        CornerKey prev{start.a - 1, start.b};  // fake incoming direction +x
        std::vector<CornerKey> loop{start};
        while (true) {
            auto eit = edges.find(cur);
            if (eit == edges.end() || eit->second.empty())
                fail(ErrorKind::Internal, "open boundary chain");
            int pick = 0;
            if (eit->second.size() > 1) {
                // Incoming direction; candidates turn left first.
                int inx = cur.a - prev.a, iny = cur.b - prev.b;
                double best = -1e9;
                for (size_t k = 0; k < eit->second.size(); ++k) {
                    int ox = eit->second[k].a - cur.a, oy = eit->second[k].b - cur.b;
                    double cross = inx * oy - iny * ox;
                    double dot = inx * ox + iny * oy;
                    double score = std::atan2(cross, dot);
                    if (score > best) {
                        best = score;
                        pick = static_cast<int>(k);
                    }
                }
            }
            CornerKey next = eit->second[pick];
            eit->second.erase(eit->second.begin() + pick);
            if (eit->second.empty()) edges.erase(eit);
            prev = cur;
            cur = next;
            if (cur == start) break;
            loop.push_back(cur);
        }
        loops.push_back(std::move(loop));
    }

    // Outer loop = largest enclosed area.
    double best_area = -1.0;
    const std::vector<CornerKey>* best = nullptr;
    for (const auto& loop : loops) {
        double area = 0.0;
        for (size_t k = 0; k < loop.size(); ++k) {
            auto p = world(loop[k]);
            auto q = world(loop[(k + 1) % loop.size()]);
            area += p[0] * q[1] - q[0] * p[1];
        }
        area = std::abs(0.5 * area);
        if (area > best_area) {
            best_area = area;
            best = &loop;
        }
    }

    std::vector<std::array<double, 2>> out;
    out.reserve(best->size() + 1);
    for (const auto& c : *best) out.push_back(world(c));
    out.push_back(world((*best)[0]));
    return out;
}

CircleCoverage circle_coverage(double epsilon) {
    if (!std::isfinite(epsilon) || !(epsilon > 0.0) || !(epsilon < kPi))
        fail(ErrorKind::InvalidArgument, "epsilon must lie in (0, pi)");
    CircleCoverage cov;
    cov.captures = static_cast<long>(std::ceil(2.0 * kPi / epsilon - 1e-9));
    cov.arc_centered = 2.0 * kPi;
    cov.arc_eccentric = 2.0 * epsilon;
    return cov;
}

} // namespace ortho
