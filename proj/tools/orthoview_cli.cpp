// orthoview: command-line front end over the orthoview shared library.
//
// Exit codes: 0 success, 2 configuration error, 3 computation error.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthoview.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

// Failures caused by bad inputs map to configuration errors; everything that
// goes wrong mid-computation maps to exit 3.
int exit_code_for(ov_status status) {
    switch (status) {
        case OV_ERR_INVALID_ARGUMENT:
        case OV_ERR_UNKNOWN_SURFACE:
        case OV_ERR_BAD_FORMAT:
            return kExitConfig;
        default:
            return kExitCompute;
    }
}

void check(ov_status status) {
    if (status != OV_OK)
        die(exit_code_for(status),
            std::string(ov_status_name(status)) + ": " + ov_last_error());
}

struct SurfaceHandle {
    ov_surface* ptr = nullptr;
    ~SurfaceHandle() { ov_surface_free(ptr); }
};

struct RegionHandle {
    ov_region* ptr = nullptr;
    ~RegionHandle() { ov_region_free(ptr); }
};

struct ApproxHandle {
    ov_approx* ptr = nullptr;
    ~ApproxHandle() { ov_approx_free(ptr); }
};

struct OvString {
    char* ptr = nullptr;
    ~OvString() { ov_free(ptr); }
};

// ----------------------------------------------------------------------
// Shared option groups
// ----------------------------------------------------------------------

struct SurfaceOpts {
    std::string builtin;
    std::string params;
    std::string dem;
    double dem_dx = 1.0;
    double dem_dy = 1.0;
    double scale = 1.0;
    double sigma = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--surface", builtin, "builtin surface or curve name");
        cmd->add_option("--params", params, "JSON object with family parameters");
        cmd->add_option("--dem", dem, "path to an 8-bit PGM elevation map");
        cmd->add_option("--dem-dx", dem_dx, "DEM cell width in world units");
        cmd->add_option("--dem-dy", dem_dy, "DEM cell height in world units");
        cmd->add_option("--scale", scale, "DEM elevation scale (world z per full intensity)");
        cmd->add_option("--sigma", sigma, "Gaussian smoothing sigma in cells (0 = off)");
    }

    void open(SurfaceHandle& out) const {
        if (builtin.empty() == dem.empty())
            die(kExitConfig, "exactly one of --surface or --dem must be given");
        if (!builtin.empty())
            check(ov_surface_builtin(builtin.c_str(),
                                     params.empty() ? nullptr : params.c_str(),
                                     &out.ptr));
        else
            check(ov_surface_from_dem(dem.c_str(), dem_dx, dem_dy, scale, sigma,
                                      &out.ptr));
    }
};

struct OrthoOpts {
    double epsilon_deg = 10.0;
    double distance = 1.0;
    double dx = 0.01;
    double dy = 0.01;

    void attach(CLI::App* cmd) {
        cmd->add_option("--epsilon-deg", epsilon_deg, "FOV half-angle in degrees")
            ->capture_default_str();
        cmd->add_option("--distance", distance, "working distance d")
            ->capture_default_str();
        cmd->add_option("--dx", dx, "probe grid resolution in x")->capture_default_str();
        cmd->add_option("--dy", dy, "probe grid resolution in y")->capture_default_str();
    }

    ov_ortho_params params() const {
        return {epsilon_deg * kDegToRad, distance, dx, dy};
    }
};

std::vector<std::array<double, 2>> parse_centers(const std::vector<std::string>& raw) {
    std::vector<std::array<double, 2>> centers;
    for (const auto& s : raw) {
        double x = 0, y = 0;
        char extra = 0;
        if (std::sscanf(s.c_str(), " %lf , %lf %c", &x, &y, &extra) != 2)
            die(kExitConfig, "bad --center '" + s + "': expected x,y");
        centers.push_back({x, y});
    }
    return centers;
}

int parse_orientation(const std::string& s) {
    if (s == "up") return OV_ORIENT_UP;
    if (s == "down") return OV_ORIENT_DOWN;
    die(kExitConfig, "bad --orientation '" + s + "': expected up or down");
}

bool format_selects(const std::string& format, const char* kind) {
    return format == "all" || format == kind;
}

void check_format(const std::string& format) {
    if (format != "all" && format != "csv" && format != "json" && format != "svg")
        die(kExitConfig, "bad --format '" + format + "': expected csv|json|svg|all");
}

std::string out_path(const std::string& dir, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) die(kExitCompute, "cannot create output directory " + dir);
    return (std::filesystem::path(dir) / name).string();
}

// Whole-or-nothing write for documents the library hands back as strings.
void write_document(const std::string& path, const char* data) {
    std::string tmp = path + ".tmp";
    FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) die(kExitCompute, "cannot open for writing: " + path);
    size_t n = std::strlen(data);
    bool ok = std::fwrite(data, 1, n, f) == n;
    ok = std::fflush(f) == 0 && ok;
    ok = std::fclose(f) == 0 && ok;
    if (!ok || std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        die(kExitCompute, "write failed: " + path);
    }
}

ov_approx_method parse_method(const std::string& s) {
    if (s == "1" || s == "polygonal") return OV_APPROX_POLYGONAL;
    if (s == "2" || s == "elliptical") return OV_APPROX_ELLIPTICAL;
    if (s == "3" || s == "circular-one") return OV_APPROX_CIRCULAR_ONE;
    if (s == "4" || s == "circular-two") return OV_APPROX_CIRCULAR_TWO;
    die(kExitConfig, "bad method '" + s +
                         "': expected 1-4 or polygonal|elliptical|circular-one|circular-two");
}

// ----------------------------------------------------------------------
// Subcommands
// ----------------------------------------------------------------------

int cmd_surfaces(bool as_json) {
    OvString json;
    check(ov_catalog_json(&json.ptr));
    if (as_json) {
        std::fputs(json.ptr, stdout);
        return kExitOk;
    }
    // Keep the human listing in sync with the JSON document rather than
    // duplicating the catalog here.
    std::printf("%-16s %-8s %s\n", "name", "kind", "description");
    for (const auto& entry : nlohmann::json::parse(json.ptr)) {
        std::printf("%-16s %-8s %s (defaults: %s)\n",
                    entry.at("name").get<std::string>().c_str(),
                    entry.at("kind").get<std::string>().c_str(),
                    entry.at("description").get<std::string>().c_str(),
                    entry.at("params").get<std::string>().c_str());
    }
    return kExitOk;
}

int cmd_dem(const std::string& path, double dx, double dy, double scale,
            double sigma, const std::string& out_dir, const std::string& csv,
            const std::string& format) {
    check_format(format);
    SurfaceHandle s;
    check(ov_surface_from_dem(path.c_str(), dx, dy, scale, sigma, &s.ptr));

    double dom[4];
    check(ov_surface_domain(s.ptr, dom));
    int nx = static_cast<int>(std::lround((dom[1] - dom[0]) / dx)) + 1;
    int ny = static_cast<int>(std::lround((dom[3] - dom[2]) / dy)) + 1;
    std::printf("loaded %s: %dx%d cells, domain [%g, %g] x [%g, %g], sigma %g\n",
                path.c_str(), nx, ny, dom[0], dom[1], dom[2], dom[3], sigma);

    std::string csv_path = csv;
    if (csv_path.empty() && !out_dir.empty() && format_selects(format, "csv"))
        csv_path = out_path(out_dir, "heightfield.csv");
    if (!csv_path.empty()) {
        check(ov_heightfield_export_csv(s.ptr, csv_path.c_str()));
        std::printf("wrote %s\n", csv_path.c_str());
    }
    return kExitOk;
}

int cmd_imaging(const SurfaceOpts& surf, const std::vector<double>& distances,
                int samples, const std::string& orientation_name,
                const std::string& point_arg, const std::string& out_dir,
                std::string csv, std::string svg, const std::string& format) {
    check_format(format);
    int orientation = parse_orientation(orientation_name);
    SurfaceHandle s;
    surf.open(s);

    if (!point_arg.empty()) {
        auto pt = parse_centers({point_arg}).front();
        double d = distances.empty() ? 1.0 : distances.front();
        if (ov_surface_is_curve(s.ptr)) {
            double xy[2];
            check(ov_imaging_curve_point(s.ptr, pt[0], d, orientation, xy));
            std::printf("image of x=%.12g at d=%.12g: (%.12g, %.12g)\n", pt[0], d,
                        xy[0], xy[1]);
        } else {
            double base[3], image[3];
            check(ov_imaging_point(s.ptr, pt[0], pt[1], d, orientation, base, image));
            std::printf("P  = (%.12g, %.12g, %.12g)\n", base[0], base[1], base[2]);
            std::printf("P' = (%.12g, %.12g, %.12g)\n", image[0], image[1], image[2]);
        }
        if (csv.empty() && svg.empty() && out_dir.empty()) return kExitOk;
    }

    if (distances.empty()) die(kExitConfig, "at least one --distance is required");
    bool is_curve = ov_surface_is_curve(s.ptr) != 0;
    if (csv.empty() && !out_dir.empty() && format_selects(format, "csv"))
        csv = out_path(out_dir, "imaging.csv");
    if (svg.empty() && !out_dir.empty() && is_curve && format_selects(format, "svg"))
        svg = out_path(out_dir, "imaging.svg");
    if (csv.empty() && svg.empty())
        die(kExitConfig, "no output requested: pass --csv, --svg or --out");

    check(ov_imaging_export(s.ptr, distances.data(), distances.size(), samples,
                            orientation, csv.empty() ? nullptr : csv.c_str(),
                            svg.empty() ? nullptr : svg.c_str()));
    if (!csv.empty()) std::printf("wrote %s\n", csv.c_str());
    if (!svg.empty()) std::printf("wrote %s\n", svg.c_str());
    return kExitOk;
}

int cmd_bound_d(const SurfaceOpts& surf, double tolerance, double scan_resolution) {
    SurfaceHandle s;
    surf.open(s);
    int kind = 0;
    double value = 0.0;
    check(ov_upper_bound_d(s.ptr, tolerance, scan_resolution, &kind, &value));
    switch (kind) {
        case OV_BOUND_ZERO:
            std::printf("kind: zero\nvalue: 0\n");
            break;
        case OV_BOUND_INFINITE:
            std::printf("kind: infinite\nvalue: inf\n");
            break;
        default:
            std::printf("kind: finite\nvalue: %.12g\n", value);
            break;
    }
    return kExitOk;
}

int cmd_curve_bounds(const SurfaceOpts& surf, double x0, const OrthoOpts& ortho) {
    SurfaceHandle s;
    surf.open(s);
    ov_ortho_params p = ortho.params();
    double x_left = 0, x_right = 0;
    check(ov_curve_bounds(s.ptr, x0, &p, &x_left, &x_right));
    std::printf("x_left: %.12g\nx_right: %.12g\nwidth: %.12g\n", x_left, x_right,
                x_right - x_left);
    return kExitOk;
}

int cmd_region(const SurfaceOpts& surf, const std::vector<std::string>& center_args,
               const OrthoOpts& ortho, bool connectivity, bool fast_gradients,
               bool buff_reset, bool brute_force, bool seed_test,
               const std::string& out_dir, const std::string& members_csv,
               const std::string& boundary_csv, const std::string& svg,
               const std::string& format) {
    check_format(format);
    auto centers = parse_centers(center_args);
    if (centers.empty()) die(kExitConfig, "at least one --center is required");
    bool explicit_paths = !members_csv.empty() || !boundary_csv.empty() || !svg.empty();
    if (explicit_paths && centers.size() > 1)
        die(kExitConfig, "explicit output paths work with a single --center; use --out");

    SurfaceHandle s;
    surf.open(s);
    ov_ortho_params p = ortho.params();
    unsigned flags = 0;
    if (connectivity) flags |= OV_REGION_CONNECTIVITY;
    if (fast_gradients) flags |= OV_REGION_FAST_GRADIENTS;
    if (buff_reset) flags |= OV_REGION_BUFF_RESET;
    if (brute_force) flags |= OV_REGION_BRUTE_FORCE;

    for (size_t k = 0; k < centers.size(); ++k) {
        RegionHandle r;
        check(ov_region_compute(s.ptr, centers[k][0], centers[k][1], &p, flags, &r.ptr));
        std::printf("center (%.12g, %.12g): %zu members\n", centers[k][0],
                    centers[k][1], ov_region_member_count(r.ptr));

        if (seed_test && !brute_force) {
            RegionHandle oracle;
            check(ov_region_compute(s.ptr, centers[k][0], centers[k][1], &p,
                                    OV_REGION_BRUTE_FORCE, &oracle.ptr));
            size_t n = ov_region_member_count(r.ptr);
            size_t n_oracle = ov_region_member_count(oracle.ptr);
            bool same = n == n_oracle;
            if (same && n > 0) {
                std::vector<double> a(3 * n), b(3 * n);
                check(ov_region_members(r.ptr, a.data(), a.size()));
                check(ov_region_members(oracle.ptr, b.data(), b.size()));
                same = std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
            }
            if (!same)
                die(kExitCompute, "oracle-equality check failed at this center");
            std::printf("oracle-equality: ok (%zu members)\n", n);
        }

        std::string suffix = centers.size() > 1 ? "-" + std::to_string(k) : "";
        std::string mpath = members_csv, bpath = boundary_csv, spath = svg;
        if (!out_dir.empty()) {
            if (mpath.empty() && format_selects(format, "csv"))
                mpath = out_path(out_dir, "region-members" + suffix + ".csv");
            if (bpath.empty() && format_selects(format, "csv"))
                bpath = out_path(out_dir, "region-boundary" + suffix + ".csv");
            if (spath.empty() && format_selects(format, "svg"))
                spath = out_path(out_dir, "region" + suffix + ".svg");
        }
        if (!mpath.empty() || !bpath.empty())
            check(ov_region_export_csv(r.ptr, mpath.empty() ? nullptr : mpath.c_str(),
                                       bpath.empty() ? nullptr : bpath.c_str()));
        if (!spath.empty()) check(ov_region_export_svg(r.ptr, s.ptr, spath.c_str()));
        for (const std::string& written : {mpath, bpath, spath})
            if (!written.empty()) std::printf("wrote %s\n", written.c_str());
    }
    return kExitOk;
}

int cmd_approx(const SurfaceOpts& surf, const std::vector<std::string>& center_args,
               const std::string& method_name, int n_directions, double m_ratio,
               double k_max, const OrthoOpts& ortho, const std::string& out_dir,
               std::string svg, const std::string& format) {
    check_format(format);
    auto centers = parse_centers(center_args);
    if (centers.size() != 1) die(kExitConfig, "approx needs exactly one --center");
    ov_approx_method method = parse_method(method_name);

    SurfaceHandle s;
    surf.open(s);
    ov_ortho_params p = ortho.params();
    ApproxHandle a;
    check(ov_approx_compute(s.ptr, centers[0][0], centers[0][1], method,
                            n_directions, m_ratio, k_max, &p, &a.ptr));

    switch (ov_approx_shape(a.ptr)) {
        case OV_SHAPE_POLYGON: {
            double* xy = nullptr;
            size_t n = 0;
            check(ov_approx_polygon(a.ptr, &xy, &n));
            std::printf("polygon with %zu vertices:\n", n);
            for (size_t k = 0; k < n; ++k)
                std::printf("  (%.12g, %.12g)\n", xy[2 * k], xy[2 * k + 1]);
            ov_free(xy);
            break;
        }
        case OV_SHAPE_ELLIPSE: {
            double e[5];
            check(ov_approx_ellipse(a.ptr, e));
            std::printf("ellipse: center (%.12g, %.12g), semi-major %.12g, "
                        "semi-minor %.12g, angle %.12g rad\n",
                        e[0], e[1], e[2], e[3], e[4]);
            break;
        }
        default: {
            double c[3];
            check(ov_approx_circle(a.ptr, c));
            std::printf("circle: center (%.12g, %.12g), radius %.12g\n", c[0], c[1],
                        c[2]);
            break;
        }
    }
    std::printf("build time: %.3g s\n", ov_approx_build_seconds(a.ptr));

    if (svg.empty() && !out_dir.empty() && format_selects(format, "svg"))
        svg = out_path(out_dir, "approx.svg");
    if (!svg.empty()) {
        RegionHandle exact;
        check(ov_region_compute(s.ptr, centers[0][0], centers[0][1], &p, 0,
                                &exact.ptr));
        check(ov_approx_export_svg(a.ptr, exact.ptr, s.ptr, svg.c_str()));
        std::printf("wrote %s\n", svg.c_str());
    }
    return kExitOk;
}

int cmd_compare(const SurfaceOpts& surf, const std::vector<std::string>& center_args,
                const std::vector<std::string>& method_names, int n_directions,
                double m_ratio, double k_max, const OrthoOpts& ortho,
                const std::string& out_dir, const std::string& json_path,
                const std::string& csv_path, const std::string& format) {
    check_format(format);
    auto centers = parse_centers(center_args);
    if (centers.empty()) die(kExitConfig, "at least one --center is required");

    std::vector<ov_approx_method> methods;
    if (method_names.empty()) {
        methods = {OV_APPROX_POLYGONAL, OV_APPROX_ELLIPTICAL, OV_APPROX_CIRCULAR_ONE,
                   OV_APPROX_CIRCULAR_TWO};
    } else {
        for (const auto& name : method_names) methods.push_back(parse_method(name));
    }

    SurfaceHandle s;
    surf.open(s);
    ov_ortho_params p = ortho.params();

    for (size_t k = 0; k < centers.size(); ++k) {
        OvString json, csv;
        check(ov_compare(s.ptr, centers[k][0], centers[k][1], &p, methods.data(),
                         methods.size(), n_directions, m_ratio, k_max, &json.ptr,
                         &csv.ptr));
        std::printf("center (%.12g, %.12g):\n", centers[k][0], centers[k][1]);
        std::fputs(csv.ptr, stdout);

        std::string suffix = centers.size() > 1 ? "-" + std::to_string(k) : "";
        std::string jp = json_path, cp = csv_path;
        if (centers.size() > 1 && (!jp.empty() || !cp.empty()))
            die(kExitConfig, "explicit output paths work with a single --center; use --out");
        if (!out_dir.empty()) {
            if (jp.empty() && format_selects(format, "json"))
                jp = out_path(out_dir, "compare" + suffix + ".json");
            if (cp.empty() && format_selects(format, "csv"))
                cp = out_path(out_dir, "compare" + suffix + ".csv");
        }
        if (!jp.empty()) {
            write_document(jp, json.ptr);
            std::printf("wrote %s\n", jp.c_str());
        }
        if (!cp.empty()) {
            write_document(cp, csv.ptr);
            std::printf("wrote %s\n", cp.c_str());
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "orthographic terrain imaging: imaging curves/surfaces, working-distance "
        "bounds, epsilon-orthographic regions and boundary approximations"};
    app.require_subcommand(1);

    // surfaces
    auto* sc_surfaces = app.add_subcommand("surfaces", "list the builtin catalog");
    bool surfaces_json = false;
    sc_surfaces->add_flag("--json", surfaces_json, "print the catalog as JSON");

    // dem
    auto* sc_dem = app.add_subcommand("dem", "load, smooth and export a DEM");
    std::string dem_path, dem_out, dem_csv, dem_format = "all";
    double dem_dx = 1.0, dem_dy = 1.0, dem_scale = 1.0, dem_sigma = 0.0;
    sc_dem->add_option("path", dem_path, "PGM file")->required();
    sc_dem->add_option("--dx", dem_dx, "cell width")->capture_default_str();
    sc_dem->add_option("--dy", dem_dy, "cell height")->capture_default_str();
    sc_dem->add_option("--scale", dem_scale, "elevation scale")->capture_default_str();
    sc_dem->add_option("--sigma", dem_sigma, "smoothing sigma in cells")
        ->capture_default_str();
    sc_dem->add_option("--out", dem_out, "output directory");
    sc_dem->add_option("--csv", dem_csv, "explicit CSV path");
    sc_dem->add_option("--format", dem_format, "csv|json|svg|all")->capture_default_str();

    // imaging
    auto* sc_imaging =
        app.add_subcommand("imaging", "imaging curves/surfaces at distances d");
    SurfaceOpts imaging_surf;
    imaging_surf.attach(sc_imaging);
    std::vector<double> imaging_d;
    int imaging_samples = 256;
    std::string imaging_orient = "up", imaging_point, imaging_out, imaging_csv,
                imaging_svg, imaging_format = "all";
    sc_imaging->add_option("--distance", imaging_d, "imaging distance (repeatable)");
    sc_imaging->add_option("--samples", imaging_samples, "samples per axis")
        ->capture_default_str();
    sc_imaging->add_option("--orientation", imaging_orient, "up|down")
        ->capture_default_str();
    sc_imaging->add_option("--point", imaging_point, "print one imaging point at x,y");
    sc_imaging->add_option("--out", imaging_out, "output directory");
    sc_imaging->add_option("--csv", imaging_csv, "explicit CSV path");
    sc_imaging->add_option("--svg", imaging_svg, "explicit SVG path (curves only)");
    sc_imaging->add_option("--format", imaging_format, "csv|json|svg|all")
        ->capture_default_str();

    // bound-d
    auto* sc_bound = app.add_subcommand("bound-d", "upper bound D on the imaging distance");
    SurfaceOpts bound_surf;
    bound_surf.attach(sc_bound);
    double bound_tol = 1e-3, bound_scan = 0.0;
    sc_bound->add_option("--tolerance", bound_tol, "bisection tolerance")
        ->capture_default_str();
    sc_bound->add_option("--scan-resolution", bound_scan,
                         "validity scan step (0 = span/2048)")
        ->capture_default_str();

    // curve-bounds
    auto* sc_cbounds =
        app.add_subcommand("curve-bounds", "orthographic interval of a curve");
    SurfaceOpts cbounds_surf;
    cbounds_surf.attach(sc_cbounds);
    OrthoOpts cbounds_ortho;
    cbounds_ortho.attach(sc_cbounds);
    double cbounds_x0 = 0.0;
    sc_cbounds->add_option("--x0", cbounds_x0, "center abscissa")->required();

    // region
    auto* sc_region =
        app.add_subcommand("region", "epsilon-orthographic region of a surface");
    SurfaceOpts region_surf;
    region_surf.attach(sc_region);
    OrthoOpts region_ortho;
    region_ortho.attach(sc_region);
    std::vector<std::string> region_centers;
    bool region_conn = false, region_fast = false, region_buffreset = false,
         region_brute = false, region_seedtest = false;
    std::string region_out, region_members, region_boundary, region_svg,
                region_format = "all";
    sc_region->add_option("--center", region_centers, "region center x,y (repeatable)")
        ->required();
    sc_region->add_flag("--connectivity", region_conn,
                        "keep only the 8-connected component of the center");
    sc_region->add_flag("--fast-gradients", region_fast,
                        "first-order gradient propagation from the center Hessian");
    sc_region->add_flag("--buff-reset", region_buffreset,
                        "reset the empty-ring counter on every accepting ring");
    sc_region->add_flag("--brute-force", region_brute,
                        "full-window oracle scan instead of ring growing");
    sc_region->add_flag("--seed-test", region_seedtest)->group("");
    sc_region->add_option("--out", region_out, "output directory");
    sc_region->add_option("--members-csv", region_members, "explicit member CSV path");
    sc_region->add_option("--boundary-csv", region_boundary,
                          "explicit boundary CSV path");
    sc_region->add_option("--svg", region_svg, "explicit SVG path");
    sc_region->add_option("--format", region_format, "csv|json|svg|all")
        ->capture_default_str();

    // approx
    auto* sc_approx =
        app.add_subcommand("approx", "approximate a region boundary with one scheme");
    SurfaceOpts approx_surf;
    approx_surf.attach(sc_approx);
    OrthoOpts approx_ortho;
    approx_ortho.attach(sc_approx);
    std::vector<std::string> approx_centers;
    std::string approx_method = "polygonal", approx_out, approx_svg,
                approx_format = "all";
    int approx_n = 16;
    double approx_m = 4.0, approx_kmax = -1.0;
    sc_approx->add_option("--center", approx_centers, "center x,y")->required();
    sc_approx
        ->add_option("--method", approx_method,
                     "1-4 or polygonal|elliptical|circular-one|circular-two")
        ->capture_default_str();
    sc_approx->add_option("--n-directions", approx_n, "ray count N")
        ->capture_default_str();
    sc_approx->add_option("--m-ratio", approx_m, "circular-II accuracy ratio m")
        ->capture_default_str();
    sc_approx->add_option("--k-max", approx_kmax,
                          "max |K| over the surface (negative = sample it)")
        ->capture_default_str();
    sc_approx->add_option("--out", approx_out, "output directory");
    sc_approx->add_option("--svg", approx_svg, "explicit SVG path");
    sc_approx->add_option("--format", approx_format, "csv|json|svg|all")
        ->capture_default_str();

    // compare
    auto* sc_compare =
        app.add_subcommand("compare", "compare approximation schemes at centers");
    SurfaceOpts compare_surf;
    compare_surf.attach(sc_compare);
    OrthoOpts compare_ortho;
    compare_ortho.attach(sc_compare);
    std::vector<std::string> compare_centers, compare_methods;
    std::string compare_out, compare_json, compare_csv, compare_format = "all";
    int compare_n = 16;
    double compare_m = 4.0, compare_kmax = -1.0;
    sc_compare->add_option("--center", compare_centers, "center x,y (repeatable)")
        ->required();
    sc_compare->add_option("--methods", compare_methods,
                           "methods to compare (default: all four)");
    sc_compare->add_option("--n-directions", compare_n, "ray count N")
        ->capture_default_str();
    sc_compare->add_option("--m-ratio", compare_m, "circular-II accuracy ratio m")
        ->capture_default_str();
    sc_compare->add_option("--k-max", compare_kmax,
                           "max |K| over the surface (negative = sample it)")
        ->capture_default_str();
    sc_compare->add_option("--out", compare_out, "output directory");
    sc_compare->add_option("--json", compare_json, "explicit JSON report path");
    sc_compare->add_option("--csv", compare_csv, "explicit CSV report path");
    sc_compare->add_option("--format", compare_format, "csv|json|svg|all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*sc_surfaces) return cmd_surfaces(surfaces_json);
        if (*sc_dem)
            return cmd_dem(dem_path, dem_dx, dem_dy, dem_scale, dem_sigma, dem_out,
                           dem_csv, dem_format);
        if (*sc_imaging)
            return cmd_imaging(imaging_surf, imaging_d, imaging_samples,
                               imaging_orient, imaging_point, imaging_out,
                               imaging_csv, imaging_svg, imaging_format);
        if (*sc_bound) return cmd_bound_d(bound_surf, bound_tol, bound_scan);
        if (*sc_cbounds)
            return cmd_curve_bounds(cbounds_surf, cbounds_x0, cbounds_ortho);
        if (*sc_region)
            return cmd_region(region_surf, region_centers, region_ortho, region_conn,
                              region_fast, region_buffreset, region_brute,
                              region_seedtest, region_out, region_members,
                              region_boundary, region_svg, region_format);
        if (*sc_approx)
            return cmd_approx(approx_surf, approx_centers, approx_method, approx_n,
                              approx_m, approx_kmax, approx_ortho, approx_out,
                              approx_svg, approx_format);
        if (*sc_compare)
            return cmd_compare(compare_surf, compare_centers, compare_methods,
                               compare_n, compare_m, compare_kmax, compare_ortho,
                               compare_out, compare_json, compare_csv,
                               compare_format);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    }
    return kExitOk;
}
