#include "orthoview.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "ortho/approx.hpp"
#include "ortho/export.hpp"
#include "ortho/imaging.hpp"
#include "ortho/region.hpp"
#include "ortho/surface.hpp"

using ortho::AnalyticCurve;
using ortho::AnalyticSurface;
using ortho::HeightField;

struct ov_surface {
    std::variant<AnalyticCurve, AnalyticSurface, HeightField> obj;
};

struct ov_region {
    ortho::OrthoRegion region;
};

struct ov_approx {
    ortho::BoundaryApprox approx;
};

namespace {

thread_local std::string t_last_error;

ov_status status_of(ortho::ErrorKind kind) {
    using ortho::ErrorKind;
    switch (kind) {
        case ErrorKind::InvalidArgument: return OV_ERR_INVALID_ARGUMENT;
        case ErrorKind::OutOfDomain: return OV_ERR_OUT_OF_DOMAIN;
        case ErrorKind::IoError: return OV_ERR_IO;
        case ErrorKind::BadFormat: return OV_ERR_BAD_FORMAT;
        case ErrorKind::UnknownSurface: return OV_ERR_UNKNOWN_SURFACE;
        case ErrorKind::NonsmoothPoint: return OV_ERR_NONSMOOTH_POINT;
        case ErrorKind::DegenerateRegion: return OV_ERR_DEGENERATE_REGION;
        case ErrorKind::Internal: return OV_ERR_INTERNAL;
    }
    return OV_ERR_INTERNAL;
}

ov_status fail_status(ov_status status, const std::string& message) {
    t_last_error = message;
    return status;
}

template <typename F>
ov_status guarded(F&& body) {
    try {
        return body();
    } catch (const ortho::Error& e) {
        return fail_status(status_of(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail_status(OV_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail_status(OV_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail_status(OV_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

double* dup_doubles(const std::vector<double>& v) {
    double* out = static_cast<double*>(std::malloc(std::max<size_t>(1, v.size()) *
                                                   sizeof(double)));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, v.data(), v.size() * sizeof(double));
    return out;
}

const AnalyticCurve* as_curve(const ov_surface* s) {
    return s ? std::get_if<AnalyticCurve>(&s->obj) : nullptr;
}

// Non-owning field over the handle's surface or heightfield; null for curves.
bool field_of_handle(const ov_surface* s, ortho::SurfaceField& out) {
    if (!s) return false;
    if (const auto* a = std::get_if<AnalyticSurface>(&s->obj)) {
        out = ortho::field_of(*a);
        return true;
    }
    if (const auto* h = std::get_if<HeightField>(&s->obj)) {
        out = ortho::field_of(*h);
        return true;
    }
    return false;
}

ortho::OrthoParams to_params(const ov_ortho_params* p) {
    if (!p) ortho::fail(ortho::ErrorKind::InvalidArgument, "params must not be NULL");
    return {p->epsilon, p->d, p->dx, p->dy};
}

ortho::Orientation to_orientation(int orientation) {
    if (orientation == OV_ORIENT_UP) return ortho::Orientation::Up;
    if (orientation == OV_ORIENT_DOWN) return ortho::Orientation::Down;
    ortho::fail(ortho::ErrorKind::InvalidArgument, "orientation must be 0 (up) or 1 (down)");
}

ov_status require(bool ok, const char* message) {
    return ok ? OV_OK : fail_status(OV_ERR_INVALID_ARGUMENT, message);
}

ortho::ApproxMethod to_method(ov_approx_method m) {
    switch (m) {
        case OV_APPROX_POLYGONAL: return ortho::ApproxMethod::Polygonal;
        case OV_APPROX_ELLIPTICAL: return ortho::ApproxMethod::Elliptical;
        case OV_APPROX_CIRCULAR_ONE: return ortho::ApproxMethod::CircularOne;
        case OV_APPROX_CIRCULAR_TWO: return ortho::ApproxMethod::CircularTwo;
    }
    ortho::fail(ortho::ErrorKind::InvalidArgument, "unknown approximation method");
}

} // namespace

extern "C" {

const char* ov_status_name(ov_status status) {
    switch (status) {
        case OV_OK: return "ok";
        case OV_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case OV_ERR_OUT_OF_DOMAIN: return "out-of-domain";
        case OV_ERR_IO: return "io-error";
        case OV_ERR_BAD_FORMAT: return "bad-format";
        case OV_ERR_UNKNOWN_SURFACE: return "unknown-surface";
        case OV_ERR_NONSMOOTH_POINT: return "nonsmooth-point";
        case OV_ERR_DEGENERATE_REGION: return "degenerate-region";
        case OV_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* ov_last_error(void) { return t_last_error.c_str(); }

void ov_free(void* ptr) { std::free(ptr); }

/* ------------------------------------------------------------------ */
/* Surfaces                                                            */
/* ------------------------------------------------------------------ */

ov_status ov_surface_builtin(const char* name, const char* params_json,
                             ov_surface** out) {
    if (ov_status s = require(name && out, "name and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&]() {
        nlohmann::json params = nlohmann::json::object();
        if (params_json && *params_json)
            params = nlohmann::json::parse(params_json);
        ortho::BuiltinObject obj = ortho::make_builtin(name, params);
        auto* handle = new ov_surface;
        if (std::holds_alternative<AnalyticCurve>(obj))
            handle->obj = std::move(std::get<AnalyticCurve>(obj));
        else
            handle->obj = std::move(std::get<AnalyticSurface>(obj));
        *out = handle;
        return OV_OK;
    });
}

ov_status ov_surface_from_dem(const char* path, double dx, double dy,
                              double elevation_scale, double smooth_sigma,
                              ov_surface** out) {
    if (ov_status s = require(path && out, "path and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&]() {
        HeightField hf = ortho::load_dem(path, dx, dy, elevation_scale);
        if (smooth_sigma != 0.0) hf = ortho::smooth(hf, smooth_sigma);
        *out = new ov_surface{std::move(hf)};
        return OV_OK;
    });
}

void ov_surface_free(ov_surface* s) { delete s; }

int ov_surface_is_curve(const ov_surface* s) {
    return s && std::holds_alternative<AnalyticCurve>(s->obj) ? 1 : 0;
}

int ov_surface_is_heightfield(const ov_surface* s) {
    return s && std::holds_alternative<HeightField>(s->obj) ? 1 : 0;
}

ov_status ov_surface_domain(const ov_surface* s, double out[4]) {
    if (ov_status st = require(s && out, "surface and out must not be NULL")) return st;
    return guarded([&]() {
        if (const auto* c = as_curve(s)) {
            out[0] = c->domain.lo;
            out[1] = c->domain.hi;
            out[2] = out[3] = 0.0;
        } else {
            ortho::SurfaceField f;
            field_of_handle(s, f);
            out[0] = f.domain.x_lo;
            out[1] = f.domain.x_hi;
            out[2] = f.domain.y_lo;
            out[3] = f.domain.y_hi;
        }
        return OV_OK;
    });
}

ov_status ov_surface_eval(const ov_surface* s, double x, double y, double* z) {
    if (ov_status st = require(s && z, "surface and out must not be NULL")) return st;
    return guarded([&]() {
        if (const auto* c = as_curve(s)) {
            if (!c->domain.contains(x))
                ortho::fail(ortho::ErrorKind::OutOfDomain, "x outside curve domain");
            *z = c->eval(x);
        } else {
            ortho::SurfaceField f;
            field_of_handle(s, f);
            *z = f.eval(x, y);
        }
        return OV_OK;
    });
}

ov_status ov_surface_gradient(const ov_surface* s, double x, double y,
                              double* p, double* q) {
    if (ov_status st = require(s != nullptr, "surface must not be NULL")) return st;
    return guarded([&]() {
        double gp, gq;
        if (const auto* c = as_curve(s)) {
            if (!c->domain.contains(x))
                ortho::fail(ortho::ErrorKind::OutOfDomain, "x outside curve domain");
            if (c->is_nonsmooth_at(x))
                ortho::fail(ortho::ErrorKind::NonsmoothPoint,
                            "derivative undefined at a kink of " + c->name);
            gp = c->deriv(x);
            gq = 0.0;
        } else {
            ortho::SurfaceField f;
            field_of_handle(s, f);
            ortho::Grad2 g = f.gradient(x, y);
            gp = g[0];
            gq = g[1];
        }
        if (p) *p = gp;
        if (q) *q = gq;
        return OV_OK;
    });
}

ov_status ov_surface_gaussian_curvature(const ov_surface* s, double x, double y,
                                        double* k) {
    if (ov_status st = require(s && k, "surface and out must not be NULL")) return st;
    return guarded([&]() {
        if (as_curve(s))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "Gaussian curvature is a surface query");
        if (const auto* a = std::get_if<AnalyticSurface>(&s->obj))
            *k = ortho::gaussian_curvature_at(*a, x, y);
        else
            *k = ortho::gaussian_curvature_at(std::get<HeightField>(s->obj), x, y);
        return OV_OK;
    });
}

ov_status ov_catalog_json(char** out) {
    if (ov_status st = require(out != nullptr, "out must not be NULL")) return st;
    *out = nullptr;
    return guarded([&]() {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : ortho::builtin_catalog())
            arr.push_back({{"name", e.name},
                           {"kind", e.is_curve ? "curve" : "surface"},
                           {"description", e.description},
                           {"params", e.params}});
        *out = dup_string(arr.dump(2) + "\n");
        return OV_OK;
    });
}

ov_status ov_heightfield_export_csv(const ov_surface* s, const char* path) {
    if (ov_status st = require(s && path, "surface and path must not be NULL")) return st;
    return guarded([&]() {
        const auto* hf = std::get_if<HeightField>(&s->obj);
        if (!hf)
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "grid export needs a heightfield");
        ortho::write_file(path, ortho::heightfield_csv(*hf));
        return OV_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Imaging                                                             */
/* ------------------------------------------------------------------ */

ov_status ov_unit_normal(double p, double q, int orientation, double out[3]) {
    if (ov_status st = require(out != nullptr, "out must not be NULL")) return st;
    return guarded([&]() {
        ortho::Vec3 n = ortho::unit_normal(p, q, to_orientation(orientation));
        out[0] = n[0];
        out[1] = n[1];
        out[2] = n[2];
        return OV_OK;
    });
}

ov_status ov_imaging_point(const ov_surface* s, double x, double y, double d,
                           int orientation, double base[3], double image[3]) {
    if (ov_status st = require(s != nullptr, "surface must not be NULL")) return st;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "imaging points need a surface; use the curve call");
        ortho::ImagingSample im = ortho::imaging_point(f, x, y, d, to_orientation(orientation));
        if (base)
            for (int k = 0; k < 3; ++k) base[k] = im.base[k];
        if (image)
            for (int k = 0; k < 3; ++k) image[k] = im.image[k];
        return OV_OK;
    });
}

ov_status ov_imaging_curve_point(const ov_surface* curve, double x, double d,
                                 int orientation, double out_xy[2]) {
    if (ov_status st = require(curve && out_xy, "curve and out must not be NULL"))
        return st;
    return guarded([&]() {
        const auto* c = as_curve(curve);
        if (!c)
            ortho::fail(ortho::ErrorKind::InvalidArgument, "handle is not a curve");
        auto im = ortho::imaging_curve(*c, x, d, to_orientation(orientation));
        out_xy[0] = im[0];
        out_xy[1] = im[1];
        return OV_OK;
    });
}

ov_status ov_curve_validity(const ov_surface* curve, double d,
                            double scan_resolution, int* valid,
                            double** violations, size_t* n_violations) {
    if (ov_status st = require(curve && valid, "curve and valid must not be NULL"))
        return st;
    if (ov_status st = require(!violations || n_violations,
                               "n_violations must accompany violations"))
        return st;
    return guarded([&]() {
        const auto* c = as_curve(curve);
        if (!c)
            ortho::fail(ortho::ErrorKind::InvalidArgument, "handle is not a curve");
        ortho::ValidityReport rep = ortho::curve_validity(*c, d, scan_resolution);
        *valid = rep.valid ? 1 : 0;
        if (violations) {
            *violations = dup_doubles(rep.violations);
            *n_violations = rep.violations.size();
        } else if (n_violations) {
            *n_violations = rep.violations.size();
        }
        return OV_OK;
    });
}

ov_status ov_upper_bound_d(const ov_surface* curve, double tolerance,
                           double scan_resolution, int* kind, double* value) {
    if (ov_status st = require(curve && kind && value,
                               "curve, kind and value must not be NULL"))
        return st;
    return guarded([&]() {
        const auto* c = as_curve(curve);
        if (!c)
            ortho::fail(ortho::ErrorKind::InvalidArgument, "handle is not a curve");
        ortho::UpperBound b = ortho::upper_bound_D(*c, tolerance, scan_resolution);
        switch (b.kind) {
            case ortho::UpperBound::Kind::Zero: *kind = OV_BOUND_ZERO; break;
            case ortho::UpperBound::Kind::Finite: *kind = OV_BOUND_FINITE; break;
            case ortho::UpperBound::Kind::Infinite: *kind = OV_BOUND_INFINITE; break;
        }
        *value = b.value;
        return OV_OK;
    });
}

ov_status ov_imaging_export(const ov_surface* s, const double* distances,
                            size_t n_distances, int samples, int orientation,
                            const char* csv_path, const char* svg_path) {
    if (ov_status st = require(s && distances, "surface and distances must not be NULL"))
        return st;
    if (ov_status st = require(n_distances > 0, "need at least one distance")) return st;
    return guarded([&]() {
        std::vector<double> dist(distances, distances + n_distances);
        ortho::Orientation orient = to_orientation(orientation);
        if (const auto* c = as_curve(s)) {
            if (csv_path)
                ortho::write_file(csv_path,
                                  ortho::imaging_curve_csv(*c, dist, samples, orient));
            if (svg_path)
                ortho::write_file(svg_path,
                                  ortho::imaging_curve_svg(*c, dist, samples, orient));
        } else {
            if (svg_path)
                ortho::fail(ortho::ErrorKind::InvalidArgument,
                            "imaging SVG is only produced for curves");
            ortho::SurfaceField f;
            field_of_handle(s, f);
            if (csv_path)
                ortho::write_file(csv_path,
                                  ortho::imaging_surface_csv(f, dist, samples, orient));
        }
        return OV_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Orthographic regions                                                */
/* ------------------------------------------------------------------ */

double ov_phi_curve(double p0, double p) {
    try {
        return ortho::phi_curve(p0, p);
    } catch (...) {
        return std::nan("");
    }
}

ov_status ov_theta_curve(double delta_x, double d, double* out) {
    if (ov_status st = require(out != nullptr, "out must not be NULL")) return st;
    return guarded([&]() {
        *out = ortho::theta_curve(delta_x, d);
        return OV_OK;
    });
}

double ov_phi_surface(double p0, double q0, double p, double q) {
    try {
        return ortho::phi_surface(p0, q0, p, q);
    } catch (...) {
        return std::nan("");
    }
}

ov_status ov_theta_surface(double delta_x, double delta_y, double d, double* out) {
    if (ov_status st = require(out != nullptr, "out must not be NULL")) return st;
    return guarded([&]() {
        *out = ortho::theta_surface(delta_x, delta_y, d);
        return OV_OK;
    });
}

ov_status ov_pair_gen(int n, int** pairs, size_t* n_pairs) {
    if (ov_status st = require(pairs && n_pairs, "pairs and n_pairs must not be NULL"))
        return st;
    *pairs = nullptr;
    *n_pairs = 0;
    return guarded([&]() {
        auto ring = ortho::pair_gen(n);
        int* buf = static_cast<int*>(std::malloc(std::max<size_t>(1, 2 * ring.size()) *
                                                 sizeof(int)));
        if (!buf) throw std::bad_alloc();
        for (size_t k = 0; k < ring.size(); ++k) {
            buf[2 * k] = ring[k].first;
            buf[2 * k + 1] = ring[k].second;
        }
        *pairs = buf;
        *n_pairs = ring.size();
        return OV_OK;
    });
}

ov_status ov_curve_bounds(const ov_surface* curve, double x0,
                          const ov_ortho_params* params,
                          double* x_left, double* x_right) {
    if (ov_status st = require(curve && x_left && x_right,
                               "curve and outputs must not be NULL"))
        return st;
    return guarded([&]() {
        const auto* c = as_curve(curve);
        if (!c)
            ortho::fail(ortho::ErrorKind::InvalidArgument, "handle is not a curve");
        ortho::CurveBounds b = ortho::curve_bounds(*c, x0, to_params(params));
        *x_left = b.x_left;
        *x_right = b.x_right;
        return OV_OK;
    });
}

ov_status ov_circle_coverage(double epsilon, long* captures,
                             double* arc_centered, double* arc_eccentric) {
    return guarded([&]() {
        ortho::CircleCoverage cov = ortho::circle_coverage(epsilon);
        if (captures) *captures = cov.captures;
        if (arc_centered) *arc_centered = cov.arc_centered;
        if (arc_eccentric) *arc_eccentric = cov.arc_eccentric;
        return OV_OK;
    });
}

ov_status ov_region_compute(const ov_surface* s, double x0, double y0,
                            const ov_ortho_params* params, unsigned flags,
                            ov_region** out) {
    if (ov_status st = require(s && out, "surface and out must not be NULL")) return st;
    *out = nullptr;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "regions need a surface or heightfield");
        ortho::OrthoParams p = to_params(params);
        ortho::OrthoRegion region;
        if (flags & OV_REGION_BRUTE_FORCE) {
            region = ortho::brute_force_region(f, x0, y0, p);
        } else {
            ortho::RegionOptions opt;
            opt.connectivity_filter = (flags & OV_REGION_CONNECTIVITY) != 0;
            opt.fast_gradients = (flags & OV_REGION_FAST_GRADIENTS) != 0;
            opt.buff_reset_on_success = (flags & OV_REGION_BUFF_RESET) != 0;
            region = ortho::surface_region(f, x0, y0, p, opt);
        }
        *out = new ov_region{std::move(region)};
        return OV_OK;
    });
}

void ov_region_free(ov_region* r) { delete r; }

size_t ov_region_member_count(const ov_region* r) {
    return r ? r->region.members.size() : 0;
}

ov_status ov_region_members(const ov_region* r, double* xyz, size_t cap) {
    if (ov_status st = require(r && xyz, "region and buffer must not be NULL")) return st;
    if (ov_status st = require(cap >= 3 * r->region.members.size(),
                               "buffer too small for member triples"))
        return st;
    size_t k = 0;
    for (const auto& m : r->region.members) {
        xyz[k++] = m.x;
        xyz[k++] = m.y;
        xyz[k++] = m.z;
    }
    return OV_OK;
}

ov_status ov_region_boundary(const ov_region* r, double** xy, size_t* n_points) {
    if (ov_status st = require(r && xy && n_points,
                               "region and outputs must not be NULL"))
        return st;
    *xy = nullptr;
    *n_points = 0;
    return guarded([&]() {
        std::vector<double> flat;
        flat.reserve(2 * r->region.boundary.size());
        for (const auto& p : r->region.boundary) {
            flat.push_back(p[0]);
            flat.push_back(p[1]);
        }
        *xy = dup_doubles(flat);
        *n_points = r->region.boundary.size();
        return OV_OK;
    });
}

ov_status ov_region_export_csv(const ov_region* r, const char* members_path,
                               const char* boundary_path) {
    if (ov_status st = require(r != nullptr, "region must not be NULL")) return st;
    return guarded([&]() {
        if (members_path)
            ortho::write_file(members_path, ortho::region_members_csv(r->region));
        if (boundary_path)
            ortho::write_file(boundary_path, ortho::region_boundary_csv(r->region));
        return OV_OK;
    });
}

ov_status ov_region_export_svg(const ov_region* r, const ov_surface* s,
                               const char* path) {
    if (ov_status st = require(r && s && path,
                               "region, surface and path must not be NULL"))
        return st;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "region SVG needs the source surface");
        ortho::write_file(path, ortho::region_svg(r->region, f));
        return OV_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Boundary approximation                                              */
/* ------------------------------------------------------------------ */

ov_status ov_ray_bound(const ov_surface* s, double x0, double y0, double angle,
                       const ov_ortho_params* params, double endpoint[2],
                       double* distance) {
    if (ov_status st = require(s != nullptr, "surface must not be NULL")) return st;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "ray bounds need a surface or heightfield");
        ortho::DirectionalBound b = ortho::ray_bound(f, x0, y0, angle, to_params(params));
        if (endpoint) {
            endpoint[0] = b.endpoint[0];
            endpoint[1] = b.endpoint[1];
        }
        if (distance) *distance = b.distance_from_center;
        return OV_OK;
    });
}

ov_status ov_max_abs_curvature(const ov_surface* s, double dx, double dy,
                               double* k_max) {
    if (ov_status st = require(s && k_max, "surface and out must not be NULL")) return st;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "curvature sweep needs a surface or heightfield");
        *k_max = ortho::max_abs_curvature(f, dx, dy);
        return OV_OK;
    });
}

ov_status ov_approx_compute(const ov_surface* s, double x0, double y0,
                            ov_approx_method method, int n_directions,
                            double m_ratio, double k_max,
                            const ov_ortho_params* params, ov_approx** out) {
    if (ov_status st = require(s && out, "surface and out must not be NULL")) return st;
    *out = nullptr;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "approximations need a surface or heightfield");
        ortho::OrthoParams p = to_params(params);
        ortho::BoundaryApprox a;
        switch (to_method(method)) {
            case ortho::ApproxMethod::Polygonal:
                a = ortho::approx_polygonal(f, x0, y0, n_directions, p);
                break;
            case ortho::ApproxMethod::Elliptical:
                a = ortho::approx_elliptical(f, x0, y0, n_directions, p);
                break;
            case ortho::ApproxMethod::CircularOne:
                a = ortho::approx_circular_one(f, x0, y0, n_directions, p);
                break;
            case ortho::ApproxMethod::CircularTwo:
                if (k_max < 0.0) k_max = ortho::max_abs_curvature(f, p.dx, p.dy);
                a = ortho::approx_circular_two(f, x0, y0, m_ratio, p, k_max);
                break;
        }
        *out = new ov_approx{std::move(a)};
        return OV_OK;
    });
}

void ov_approx_free(ov_approx* a) { delete a; }

int ov_approx_shape(const ov_approx* a) {
    if (!a) return -1;
    switch (a->approx.kind) {
        case ortho::BoundaryApprox::Kind::Polygon: return OV_SHAPE_POLYGON;
        case ortho::BoundaryApprox::Kind::Ellipse: return OV_SHAPE_ELLIPSE;
        case ortho::BoundaryApprox::Kind::Circle: return OV_SHAPE_CIRCLE;
    }
    return -1;
}

ov_status ov_approx_polygon(const ov_approx* a, double** xy, size_t* n_vertices) {
    if (ov_status st = require(a && xy && n_vertices,
                               "approx and outputs must not be NULL"))
        return st;
    *xy = nullptr;
    *n_vertices = 0;
    if (ov_status st = require(a->approx.kind == ortho::BoundaryApprox::Kind::Polygon,
                               "approximation is not a polygon"))
        return st;
    return guarded([&]() {
        std::vector<double> flat;
        flat.reserve(2 * a->approx.polygon.size());
        for (const auto& p : a->approx.polygon) {
            flat.push_back(p[0]);
            flat.push_back(p[1]);
        }
        *xy = dup_doubles(flat);
        *n_vertices = a->approx.polygon.size();
        return OV_OK;
    });
}

ov_status ov_approx_ellipse(const ov_approx* a, double out[5]) {
    if (ov_status st = require(a && out, "approx and out must not be NULL")) return st;
    if (ov_status st = require(a->approx.kind == ortho::BoundaryApprox::Kind::Ellipse,
                               "approximation is not an ellipse"))
        return st;
    out[0] = a->approx.ellipse.center[0];
    out[1] = a->approx.ellipse.center[1];
    out[2] = a->approx.ellipse.semi_major;
    out[3] = a->approx.ellipse.semi_minor;
    out[4] = a->approx.ellipse.angle;
    return OV_OK;
}

ov_status ov_approx_circle(const ov_approx* a, double out[3]) {
    if (ov_status st = require(a && out, "approx and out must not be NULL")) return st;
    if (ov_status st = require(a->approx.kind == ortho::BoundaryApprox::Kind::Circle,
                               "approximation is not a circle"))
        return st;
    out[0] = a->approx.circle.center[0];
    out[1] = a->approx.circle.center[1];
    out[2] = a->approx.circle.radius;
    return OV_OK;
}

double ov_approx_build_seconds(const ov_approx* a) {
    return a ? a->approx.build_seconds : 0.0;
}

ov_status ov_approx_export_svg(const ov_approx* a, const ov_region* exact,
                               const ov_surface* s, const char* path) {
    if (ov_status st = require(a && exact && s && path,
                               "approx, region, surface and path must not be NULL"))
        return st;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "approximation SVG needs the source surface");
        ortho::write_file(path, ortho::approx_svg(a->approx, exact->region, f));
        return OV_OK;
    });
}

ov_status ov_compare(const ov_surface* s, double x0, double y0,
                     const ov_ortho_params* params,
                     const ov_approx_method* methods, size_t n_methods,
                     int n_directions, double m_ratio, double k_max,
                     char** json_out, char** csv_out) {
    if (ov_status st = require(s && methods, "surface and methods must not be NULL"))
        return st;
    if (ov_status st = require(n_methods > 0, "need at least one method")) return st;
    if (json_out) *json_out = nullptr;
    if (csv_out) *csv_out = nullptr;
    return guarded([&]() {
        ortho::SurfaceField f;
        if (!field_of_handle(s, f))
            ortho::fail(ortho::ErrorKind::InvalidArgument,
                        "comparisons need a surface or heightfield");
        std::vector<ortho::ApproxMethod> ms;
        ms.reserve(n_methods);
        for (size_t k = 0; k < n_methods; ++k) ms.push_back(to_method(methods[k]));
        auto records = ortho::compare(f, x0, y0, to_params(params), ms, n_directions,
                                      m_ratio, k_max);
        if (json_out) *json_out = dup_string(ortho::comparison_json(records));
        if (csv_out) *csv_out = dup_string(ortho::comparison_csv(records));
        return OV_OK;
    });
}

} /* extern "C" */
