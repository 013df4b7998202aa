#pragma once

#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ortho/error.hpp"

#include <json.hpp>

namespace ortho {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double span() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

struct Domain2 {
    double x_lo = 0.0, x_hi = 0.0;
    double y_lo = 0.0, y_hi = 0.0;

    bool contains(double x, double y) const {
        return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi;
    }
};

// Gradient components p = df/dx, q = df/dy.
using Grad2 = std::array<double, 2>;
// Hessian entries fxx, fxy, fyy (symmetric, so three values).
using Hess2 = std::array<double, 3>;

/// Smooth bivariate surface z = f(x,y) with exact derivatives.
struct AnalyticSurface {
    std::string name;
    Domain2 domain;
    std::function<double(double, double)> eval;
    std::function<Grad2(double, double)> grad;
    std::function<Hess2(double, double)> hess;
};

/// Univariate curve y = f(x) with exact derivatives. Kinks are declared in
/// nonsmooth_points; deriv/deriv2 there return the one-sided limit from the
/// right.
struct AnalyticCurve {
    std::string name;
    Interval domain;
    bool smooth_everywhere = true;
    std::vector<double> nonsmooth_points;
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;

    bool is_nonsmooth_at(double x, double tol = 1e-12) const;
};

/// Sampled elevation grid. Row 0 is the top image row and maps to the
/// maximal world y; origin (x0,y0) is the world position of the bottom-left
/// sample. Immutable after construction; gradient grids are precomputed.
class HeightField {
public:
    HeightField(std::vector<double> elevations, int nx, int ny,
                double dx, double dy,
                double x0 = 0.0, double y0 = 0.0,
                double elevation_scale = 1.0);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double elevation_scale() const { return scale_; }

    double at(int row, int col) const { return z_[idx(row, col)]; }
    double world_x(int col) const { return x0_ + col * dx_; }
    double world_y(int row) const { return y0_ + (ny_ - 1 - row) * dy_; }

    Domain2 domain() const;

    // Bilinear interpolation between lattice samples.
    double eval(double x, double y) const;
    // Central differences at interior lattice points, one-sided at edges,
    // bilinearly interpolated in between.
    Grad2 gradient(double x, double y) const;
    // Differences of the gradient field, symmetrized in the mixed term.
    Hess2 hessian(double x, double y) const;

    double min_elevation() const;
    double max_elevation() const;

private:
    int idx(int row, int col) const { return row * nx_ + col; }
    double lattice_p(int row, int col) const { return p_[idx(row, col)]; }
    double lattice_q(int row, int col) const { return q_[idx(row, col)]; }
    double bilinear(const std::vector<double>& grid, double x, double y) const;

    std::vector<double> z_, p_, q_;
    int nx_, ny_;
    double dx_, dy_, x0_, y0_, scale_;
};

/// Load an 8-bit grayscale PGM (binary P5 or ASCII P2) as a heightfield:
/// elevation = raw/255 * elevation_scale.
HeightField load_dem(const std::string& path, double dx, double dy,
                     double elevation_scale);

/// Gaussian blur with standard deviation sigma (in cells), kernel truncated
/// at radius ceil(3*sigma), replicate-padded edges. sigma = 0 returns an
/// identical copy.
HeightField smooth(const HeightField& hf, double sigma);

Grad2 gradient_at(const AnalyticSurface& s, double x, double y);
Grad2 gradient_at(const HeightField& hf, double x, double y);

// K = (fxx*fyy - fxy^2) / (1 + p^2 + q^2)^2
double gaussian_curvature_at(const AnalyticSurface& s, double x, double y);
double gaussian_curvature_at(const HeightField& hf, double x, double y);

/// Uniform non-owning view over either surface representation; this is what
/// the region and approximation machinery consumes. The viewed object must
/// outlive the view.
struct SurfaceField {
    Domain2 domain;
    std::function<double(double, double)> eval;
    std::function<Grad2(double, double)> gradient;
    std::function<Hess2(double, double)> hessian;
};

SurfaceField field_of(const AnalyticSurface& s);
SurfaceField field_of(const HeightField& hf);

using BuiltinObject = std::variant<AnalyticCurve, AnalyticSurface>;

/// Construct a catalog object by name. Curves: sine, parabola, exp_sqrt_abs,
/// absolute_slope, constant, circle_upper, circle_lower. Surfaces: plane,
/// cos_plus_cos, cos2_plus_cos2, sphere, pseudosphere. params may override
/// the default domain and the family parameters (radius, m, c, ...).
BuiltinObject make_builtin(const std::string& name,
                           const nlohmann::json& params = nlohmann::json::object());

struct BuiltinInfo {
    std::string name;
    bool is_curve;
    std::string description;
    std::string params;
};

const std::vector<BuiltinInfo>& builtin_catalog();

} // namespace ortho
