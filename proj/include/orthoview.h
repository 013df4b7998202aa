/* orthoview C API
 *
 * Shared-library interface over the orthographic-imaging core: surfaces and
 * heightfields, imaging curves/surfaces with working-distance bounds,
 * epsilon-orthographic regions, and boundary approximations.
 *
 * Conventions: every fallible call returns ov_status; OV_OK is 0. On failure
 * a thread-local message is available from ov_last_error(). Objects returned
 * through ov_* handles are freed with their matching *_free function; buffers
 * and strings allocated by the library are freed with ov_free().
 */
#ifndef ORTHOVIEW_H
#define ORTHOVIEW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ov_status {
    OV_OK = 0,
    OV_ERR_INVALID_ARGUMENT = 1,
    OV_ERR_OUT_OF_DOMAIN = 2,
    OV_ERR_IO = 3,
    OV_ERR_BAD_FORMAT = 4,
    OV_ERR_UNKNOWN_SURFACE = 5,
    OV_ERR_NONSMOOTH_POINT = 6,
    OV_ERR_DEGENERATE_REGION = 7,
    OV_ERR_INTERNAL = 8
} ov_status;

const char* ov_status_name(ov_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* ov_last_error(void);

/* Frees any buffer or string allocated by this library. */
void ov_free(void* ptr);

/* ------------------------------------------------------------------ */
/* Surfaces                                                            */
/* ------------------------------------------------------------------ */

/* Opaque handle: an analytic surface, an analytic curve, or a heightfield. */
typedef struct ov_surface ov_surface;

/* Catalog object by name; params_json may be NULL or a JSON object with
 * family parameters ("radius", "m", "c", "a", ...) and "domain". */
ov_status ov_surface_builtin(const char* name, const char* params_json,
                             ov_surface** out);

/* Load an 8-bit grayscale PGM (P2/P5) and optionally Gaussian-smooth it
 * (sigma in cells; 0 = no smoothing). */
ov_status ov_surface_from_dem(const char* path, double dx, double dy,
                              double elevation_scale, double smooth_sigma,
                              ov_surface** out);

void ov_surface_free(ov_surface* s);

/* 1 if the handle is a univariate curve, 0 for surfaces/heightfields. */
int ov_surface_is_curve(const ov_surface* s);
/* 1 if the handle is a heightfield. */
int ov_surface_is_heightfield(const ov_surface* s);

/* out = {x_lo, x_hi, y_lo, y_hi}; curves report y_lo = y_hi = 0. */
ov_status ov_surface_domain(const ov_surface* s, double out[4]);

/* Curves ignore y. */
ov_status ov_surface_eval(const ov_surface* s, double x, double y, double* z);
ov_status ov_surface_gradient(const ov_surface* s, double x, double y,
                              double* p, double* q);
ov_status ov_surface_gaussian_curvature(const ov_surface* s, double x, double y,
                                        double* k);

/* JSON array describing the builtin catalog. Free with ov_free. */
ov_status ov_catalog_json(char** out);

/* Heightfield-only CSV export (header "# nx ny dx dy x0 y0 scale"). */
ov_status ov_heightfield_export_csv(const ov_surface* s, const char* path);

/* ------------------------------------------------------------------ */
/* Imaging                                                             */
/* ------------------------------------------------------------------ */

#define OV_ORIENT_UP 0
#define OV_ORIENT_DOWN 1

ov_status ov_unit_normal(double p, double q, int orientation, double out[3]);

/* base = P, image = P + d*n. */
ov_status ov_imaging_point(const ov_surface* s, double x, double y, double d,
                           int orientation, double base[3], double image[3]);

ov_status ov_imaging_curve_point(const ov_surface* curve, double x, double d,
                                 int orientation, double out_xy[2]);

/* violations (sample x values) is allocated on return when non-NULL was
 * requested; free with ov_free. scan_resolution <= 0 picks span/2048. */
ov_status ov_curve_validity(const ov_surface* curve, double d,
                            double scan_resolution, int* valid,
                            double** violations, size_t* n_violations);

#define OV_BOUND_ZERO 0
#define OV_BOUND_FINITE 1
#define OV_BOUND_INFINITE 2

ov_status ov_upper_bound_d(const ov_surface* curve, double tolerance,
                           double scan_resolution, int* kind, double* value);

/* CSV (x,y[,z],x',y'[,z'],d) and, for curves, an SVG of the C/C' family.
 * Either path may be NULL to skip that artifact. */
ov_status ov_imaging_export(const ov_surface* s, const double* distances,
                            size_t n_distances, int samples, int orientation,
                            const char* csv_path, const char* svg_path);

/* ------------------------------------------------------------------ */
/* Orthographic regions                                                */
/* ------------------------------------------------------------------ */

typedef struct ov_ortho_params {
    double epsilon; /* FOV half-angle, radians, in (0, pi/2) */
    double d;       /* working distance, > 0 */
    double dx;      /* probe grid resolution, > 0 */
    double dy;
} ov_ortho_params;

double ov_phi_curve(double p0, double p);
ov_status ov_theta_curve(double delta_x, double d, double* out);
double ov_phi_surface(double p0, double q0, double p, double q);
ov_status ov_theta_surface(double delta_x, double delta_y, double d, double* out);

/* pairs receives 2*n_pairs ints (n1,n2 interleaved); free with ov_free. */
ov_status ov_pair_gen(int n, int** pairs, size_t* n_pairs);

ov_status ov_curve_bounds(const ov_surface* curve, double x0,
                          const ov_ortho_params* params,
                          double* x_left, double* x_right);

ov_status ov_circle_coverage(double epsilon, long* captures,
                             double* arc_centered, double* arc_eccentric);

typedef struct ov_region ov_region;

#define OV_REGION_CONNECTIVITY 0x1u
#define OV_REGION_FAST_GRADIENTS 0x2u
#define OV_REGION_BUFF_RESET 0x4u
#define OV_REGION_BRUTE_FORCE 0x8u /* oracle path: full scan, no rings */

ov_status ov_region_compute(const ov_surface* s, double x0, double y0,
                            const ov_ortho_params* params, unsigned flags,
                            ov_region** out);
void ov_region_free(ov_region* r);

size_t ov_region_member_count(const ov_region* r);
/* xyz receives member triples; cap is the capacity in doubles (3 per member). */
ov_status ov_region_members(const ov_region* r, double* xyz, size_t cap);
/* Closed boundary polyline as interleaved x,y; free with ov_free. */
ov_status ov_region_boundary(const ov_region* r, double** xy, size_t* n_points);

ov_status ov_region_export_csv(const ov_region* r, const char* members_path,
                               const char* boundary_path);
ov_status ov_region_export_svg(const ov_region* r, const ov_surface* s,
                               const char* path);

/* ------------------------------------------------------------------ */
/* Boundary approximation                                              */
/* ------------------------------------------------------------------ */

typedef enum ov_approx_method {
    OV_APPROX_POLYGONAL = 1,
    OV_APPROX_ELLIPTICAL = 2,
    OV_APPROX_CIRCULAR_ONE = 3,
    OV_APPROX_CIRCULAR_TWO = 4
} ov_approx_method;

typedef struct ov_approx ov_approx;

ov_status ov_ray_bound(const ov_surface* s, double x0, double y0, double angle,
                       const ov_ortho_params* params, double endpoint[2],
                       double* distance);

ov_status ov_max_abs_curvature(const ov_surface* s, double dx, double dy,
                               double* k_max);

/* k_max < 0 asks the library to sample it (circular-II only). */
ov_status ov_approx_compute(const ov_surface* s, double x0, double y0,
                            ov_approx_method method, int n_directions,
                            double m_ratio, double k_max,
                            const ov_ortho_params* params, ov_approx** out);
void ov_approx_free(ov_approx* a);

#define OV_SHAPE_POLYGON 0
#define OV_SHAPE_ELLIPSE 1
#define OV_SHAPE_CIRCLE 2

int ov_approx_shape(const ov_approx* a);
/* Polygon vertices as interleaved x,y; free with ov_free. */
ov_status ov_approx_polygon(const ov_approx* a, double** xy, size_t* n_vertices);
/* out = {cx, cy, semi_major, semi_minor, angle}. */
ov_status ov_approx_ellipse(const ov_approx* a, double out[5]);
/* out = {cx, cy, radius}. */
ov_status ov_approx_circle(const ov_approx* a, double out[3]);
double ov_approx_build_seconds(const ov_approx* a);

/* Exact boundary (blue) with the approximation (red) overlaid. */
ov_status ov_approx_export_svg(const ov_approx* a, const ov_region* exact,
                               const ov_surface* s, const char* path);

/* Runs the comparison harness at one center. json_out/csv_out (optional)
 * receive the report documents; free with ov_free. */
ov_status ov_compare(const ov_surface* s, double x0, double y0,
                     const ov_ortho_params* params,
                     const ov_approx_method* methods, size_t n_methods,
                     int n_directions, double m_ratio, double k_max,
                     char** json_out, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ORTHOVIEW_H */
