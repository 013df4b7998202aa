#include "ortho/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace ortho {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::OutOfDomain: return "out-of-domain";
        case ErrorKind::IoError: return "io-error";
        case ErrorKind::BadFormat: return "bad-format";
        case ErrorKind::UnknownSurface: return "unknown-surface";
        case ErrorKind::NonsmoothPoint: return "nonsmooth-point";
        case ErrorKind::DegenerateRegion: return "degenerate-region";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

bool AnalyticCurve::is_nonsmooth_at(double x, double tol) const {
    for (double k : nonsmooth_points)
        if (std::abs(x - k) <= tol) return true;
    return false;
}

// ---------------------------------------------------------------------------
// HeightField
// ---------------------------------------------------------------------------

HeightField::HeightField(std::vector<double> elevations, int nx, int ny,
                         double dx, double dy, double x0, double y0,
                         double elevation_scale)
    : z_(std::move(elevations)), nx_(nx), ny_(ny), dx_(dx), dy_(dy),
      x0_(x0), y0_(y0), scale_(elevation_scale) {
    if (nx_ < 2 || ny_ < 2)
        fail(ErrorKind::InvalidArgument, "heightfield dimensions must be >= 2");
    if (!(dx_ > 0.0) || !(dy_ > 0.0))
        fail(ErrorKind::InvalidArgument, "heightfield spacing must be positive");
    if (static_cast<int>(z_.size()) != nx_ * ny_)
        fail(ErrorKind::InvalidArgument, "elevation count does not match grid dimensions");
    for (double v : z_)
        if (!std::isfinite(v))
            fail(ErrorKind::InvalidArgument, "non-finite elevation value");

    // Gradient grids: central differences interior, one-sided at edges.
    // World y grows toward row 0, so the row difference is negated.
    p_.resize(z_.size());
    q_.resize(z_.size());
    for (int r = 0; r < ny_; ++r) {
        for (int c = 0; c < nx_; ++c) {
            double px;
            if (c == 0)
                px = (at(r, 1) - at(r, 0)) / dx_;
            else if (c == nx_ - 1)
                px = (at(r, nx_ - 1) - at(r, nx_ - 2)) / dx_;
            else
                px = (at(r, c + 1) - at(r, c - 1)) / (2.0 * dx_);

            double qy;
            if (r == 0)
                qy = (at(0, c) - at(1, c)) / dy_;
            else if (r == ny_ - 1)
                qy = (at(ny_ - 2, c) - at(ny_ - 1, c)) / dy_;
            else
                qy = (at(r - 1, c) - at(r + 1, c)) / (2.0 * dy_);

            p_[idx(r, c)] = px;
            q_[idx(r, c)] = qy;
        }
    }
}

Domain2 HeightField::domain() const {
    return {x0_, x0_ + (nx_ - 1) * dx_, y0_, y0_ + (ny_ - 1) * dy_};
}

double HeightField::bilinear(const std::vector<double>& grid, double x, double y) const {
    const Domain2 dom = domain();
    if (!dom.contains(x, y))
        fail(ErrorKind::OutOfDomain, "point outside heightfield domain");
    double cx = (x - x0_) / dx_;
    double ry = (ny_ - 1) - (y - y0_) / dy_;
    int c0 = std::clamp(static_cast<int>(std::floor(cx)), 0, nx_ - 2);
    int r0 = std::clamp(static_cast<int>(std::floor(ry)), 0, ny_ - 2);
    double fx = cx - c0;
    double fy = ry - r0;
    double v00 = grid[idx(r0, c0)], v01 = grid[idx(r0, c0 + 1)];
    double v10 = grid[idx(r0 + 1, c0)], v11 = grid[idx(r0 + 1, c0 + 1)];
    return (1 - fy) * ((1 - fx) * v00 + fx * v01) + fy * ((1 - fx) * v10 + fx * v11);
}

double HeightField::eval(double x, double y) const { return bilinear(z_, x, y); }

Grad2 HeightField::gradient(double x, double y) const {
    return {bilinear(p_, x, y), bilinear(q_, x, y)};
}

Hess2 HeightField::hessian(double x, double y) const {
    const Domain2 dom = domain();
    if (!dom.contains(x, y))
        fail(ErrorKind::OutOfDomain, "point outside heightfield domain");
    // Differences of the gradient field, one cell wide, pulled inward at the
    // border; the mixed term is symmetrized.
    auto step_diff = [](double v, double lo, double hi, double h) {
        double a = std::max(lo, v - h), b = std::min(hi, v + h);
        return std::pair<double, double>(a, b);
    };
    auto [xa, xb] = step_diff(x, dom.x_lo, dom.x_hi, dx_);
    auto [ya, yb] = step_diff(y, dom.y_lo, dom.y_hi, dy_);
    Grad2 gxa = gradient(xa, y), gxb = gradient(xb, y);
    Grad2 gya = gradient(x, ya), gyb = gradient(x, yb);
    double fxx = (gxb[0] - gxa[0]) / (xb - xa);
    double fyy = (gyb[1] - gya[1]) / (yb - ya);
    double fxy = 0.5 * ((gyb[0] - gya[0]) / (yb - ya) + (gxb[1] - gxa[1]) / (xb - xa));
    return {fxx, fxy, fyy};
}

double HeightField::min_elevation() const {
    return *std::min_element(z_.begin(), z_.end());
}

double HeightField::max_elevation() const {
    return *std::max_element(z_.begin(), z_.end());
}

// ---------------------------------------------------------------------------
// PGM loading
// ---------------------------------------------------------------------------

namespace {

// Reads the next header token, skipping whitespace and # comments.
std::string pnm_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {}
            continue;
        }
        if (!std::isspace(ch)) {
            tok.push_back(static_cast<char>(ch));
            while ((ch = in.get()) != EOF && !std::isspace(ch) && ch != '#')
                tok.push_back(static_cast<char>(ch));
            if (ch == '#') in.unget();
            break;
        }
    }
    return tok;
}

long pnm_int(std::istream& in, const char* what) {
    std::string tok = pnm_token(in);
    if (tok.empty())
        fail(ErrorKind::BadFormat, std::string("truncated PGM header: missing ") + what);
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::BadFormat, std::string("bad PGM header field: ") + what);
    }
}

} // namespace

HeightField load_dem(const std::string& path, double dx, double dy,
                     double elevation_scale) {
    if (!(elevation_scale > 0.0))
        fail(ErrorKind::InvalidArgument, "elevation scale must be positive");
    if (!(dx > 0.0) || !(dy > 0.0))
        fail(ErrorKind::InvalidArgument, "grid spacing must be positive");

    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::IoError, "cannot open DEM file: " + path);

    std::string magic = pnm_token(in);
    if (magic == "P3" || magic == "P6")
        fail(ErrorKind::BadFormat, "color PPM is not a grayscale DEM: " + path);
    if (magic != "P2" && magic != "P5")
        fail(ErrorKind::BadFormat, "not a PGM file (expected P2 or P5): " + path);

    long w = pnm_int(in, "width");
    long h = pnm_int(in, "height");
    long maxval = pnm_int(in, "maxval");
    if (w < 2 || h < 2)
        fail(ErrorKind::InvalidArgument, "DEM dimensions must be at least 2x2");
    if (maxval <= 0 || maxval > 255)
        fail(ErrorKind::BadFormat, "DEM depth exceeds 8 bits (maxval " +
                                       std::to_string(maxval) + ")");

    std::vector<double> z(static_cast<size_t>(w) * h);
    if (magic == "P5") {
        // Binary data starts right after the single whitespace ending the header.
        std::vector<unsigned char> raw(z.size());
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size()))
            fail(ErrorKind::BadFormat, "truncated P5 pixel data");
        for (size_t i = 0; i < raw.size(); ++i)
            z[i] = raw[i] / 255.0 * elevation_scale;
    } else {
        for (size_t i = 0; i < z.size(); ++i) {
            long v = pnm_int(in, "pixel");
            if (v < 0 || v > maxval)
                fail(ErrorKind::BadFormat, "P2 pixel value out of range");
            z[i] = static_cast<double>(v) / 255.0 * elevation_scale;
        }
    }
    return HeightField(std::move(z), static_cast<int>(w), static_cast<int>(h),
                       dx, dy, 0.0, 0.0, elevation_scale);
}

// ---------------------------------------------------------------------------
// Gaussian smoothing
// ---------------------------------------------------------------------------

HeightField smooth(const HeightField& hf, double sigma) {
    if (!(sigma >= 0.0))
        fail(ErrorKind::InvalidArgument, "smoothing sigma must be >= 0");
    const int nx = hf.nx(), ny = hf.ny();
    std::vector<double> src(static_cast<size_t>(nx) * ny);
    for (int r = 0; r < ny; ++r)
        for (int c = 0; c < nx; ++c)
            src[static_cast<size_t>(r) * nx + c] = hf.at(r, c);

    if (sigma == 0.0)
        return HeightField(std::move(src), nx, ny, hf.dx(), hf.dy(), hf.x0(),
                           hf.y0(), hf.elevation_scale());

    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int k = -radius; k <= radius; ++k) {
        kernel[k + radius] = std::exp(-0.5 * k * k / (sigma * sigma));
        sum += kernel[k + radius];
    }
    for (double& w : kernel) w /= sum;

    auto clampi = [](int v, int hi) { return std::clamp(v, 0, hi); };

    // Separable passes with replicate padding.
    std::vector<double> tmp(src.size()), dst(src.size());
    for (int r = 0; r < ny; ++r)
        for (int c = 0; c < nx; ++c) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[k + radius] * src[static_cast<size_t>(r) * nx + clampi(c + k, nx - 1)];
            tmp[static_cast<size_t>(r) * nx + c] = acc;
        }
    for (int r = 0; r < ny; ++r)
        for (int c = 0; c < nx; ++c) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[k + radius] * tmp[static_cast<size_t>(clampi(r + k, ny - 1)) * nx + c];
            dst[static_cast<size_t>(r) * nx + c] = acc;
        }
    return HeightField(std::move(dst), nx, ny, hf.dx(), hf.dy(), hf.x0(), hf.y0(),
                       hf.elevation_scale());
}

// ---------------------------------------------------------------------------
// Derivative queries
// ---------------------------------------------------------------------------

Grad2 gradient_at(const AnalyticSurface& s, double x, double y) {
    if (!s.domain.contains(x, y))
        fail(ErrorKind::OutOfDomain, "point outside surface domain");
    return s.grad(x, y);
}

Grad2 gradient_at(const HeightField& hf, double x, double y) {
    return hf.gradient(x, y);
}

namespace {
double curvature_from(const Grad2& g, const Hess2& h) {
    double denom = 1.0 + g[0] * g[0] + g[1] * g[1];
    return (h[0] * h[2] - h[1] * h[1]) / (denom * denom);
}
} // namespace

double gaussian_curvature_at(const AnalyticSurface& s, double x, double y) {
    if (!s.domain.contains(x, y))
        fail(ErrorKind::OutOfDomain, "point outside surface domain");
    return curvature_from(s.grad(x, y), s.hess(x, y));
}

double gaussian_curvature_at(const HeightField& hf, double x, double y) {
    return curvature_from(hf.gradient(x, y), hf.hessian(x, y));
}

SurfaceField field_of(const AnalyticSurface& s) {
    return {s.domain,
            [&s](double x, double y) {
                if (!s.domain.contains(x, y))
                    fail(ErrorKind::OutOfDomain, "point outside surface domain");
                return s.eval(x, y);
            },
            [&s](double x, double y) { return gradient_at(s, x, y); },
            [&s](double x, double y) {
                if (!s.domain.contains(x, y))
                    fail(ErrorKind::OutOfDomain, "point outside surface domain");
                return s.hess(x, y);
            }};
}

SurfaceField field_of(const HeightField& hf) {
    return {hf.domain(),
            [&hf](double x, double y) { return hf.eval(x, y); },
            [&hf](double x, double y) { return hf.gradient(x, y); },
            [&hf](double x, double y) { return hf.hessian(x, y); }};
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

double jnum(const json& p, const char* key, double fallback) {
    if (!p.contains(key)) return fallback;
    if (!p[key].is_number())
        fail(ErrorKind::InvalidArgument, std::string("parameter '") + key + "' must be a number");
    return p[key].get<double>();
}

Interval jinterval(const json& p, Interval fallback) {
    if (!p.contains("domain")) return fallback;
    const json& d = p["domain"];
    if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number())
        fail(ErrorKind::InvalidArgument, "curve domain must be [lo, hi]");
    Interval iv{d[0].get<double>(), d[1].get<double>()};
    if (!(iv.lo < iv.hi))
        fail(ErrorKind::InvalidArgument, "curve domain must satisfy lo < hi");
    return iv;
}

Domain2 jdomain(const json& p, Domain2 fallback) {
    if (!p.contains("domain")) return fallback;
    const json& d = p["domain"];
    if (!d.is_array() || (d.size() != 2 && d.size() != 4))
        fail(ErrorKind::InvalidArgument, "surface domain must be [lo, hi] or [xlo, xhi, ylo, yhi]");
    for (const auto& v : d)
        if (!v.is_number())
            fail(ErrorKind::InvalidArgument, "surface domain entries must be numbers");
    Domain2 dom;
    if (d.size() == 2) {
        dom = {d[0].get<double>(), d[1].get<double>(), d[0].get<double>(), d[1].get<double>()};
    } else {
        dom = {d[0].get<double>(), d[1].get<double>(), d[2].get<double>(), d[3].get<double>()};
    }
    if (!(dom.x_lo < dom.x_hi) || !(dom.y_lo < dom.y_hi))
        fail(ErrorKind::InvalidArgument, "surface domain must have positive extent");
    return dom;
}

AnalyticCurve make_curve(std::string name, Interval dom,
                         std::function<double(double)> f,
                         std::function<double(double)> fp,
                         std::function<double(double)> fpp,
                         std::vector<double> kinks = {}) {
    AnalyticCurve c;
    c.name = std::move(name);
    c.domain = dom;
    c.smooth_everywhere = kinks.empty();
    c.nonsmooth_points = std::move(kinks);
    c.eval = std::move(f);
    c.deriv = std::move(fp);
    c.deriv2 = std::move(fpp);
    return c;
}

AnalyticCurve circle_branch(const json& p, bool upper) {
    double R = jnum(p, "radius", 1.0);
    double cx = jnum(p, "cx", 0.0);
    double cy = jnum(p, "cy", 0.0);
    if (!(R > 0.0)) fail(ErrorKind::InvalidArgument, "circle radius must be positive");
    // Keep away from the vertical tangents at x = cx +- R.
    Interval dom = jinterval(p, {cx - 0.9 * R, cx + 0.9 * R});
    double sgn = upper ? 1.0 : -1.0;
    auto root = [R, cx](double x) { return std::sqrt(R * R - (x - cx) * (x - cx)); };
    return make_curve(upper ? "circle_upper" : "circle_lower", dom,
                      [=](double x) { return cy + sgn * root(x); },
                      [=](double x) { return -sgn * (x - cx) / root(x); },
                      [=](double x) {
                          double s = root(x);
                          return -sgn * R * R / (s * s * s);
                      });
}

AnalyticSurface make_surface(std::string name, Domain2 dom,
                             std::function<double(double, double)> f,
                             std::function<Grad2(double, double)> g,
                             std::function<Hess2(double, double)> h) {
    AnalyticSurface s;
    s.name = std::move(name);
    s.domain = dom;
    s.eval = std::move(f);
    s.grad = std::move(g);
    s.hess = std::move(h);
    return s;
}

} // namespace

BuiltinObject make_builtin(const std::string& name, const nlohmann::json& params) {
    const json& p = params.is_null() ? json::object() : params;
    if (!p.is_object())
        fail(ErrorKind::InvalidArgument, "builtin params must be a JSON object");

    if (name == "sine") {
        return make_curve(name, jinterval(p, {-5.0, 5.0}),
                          [](double x) { return std::sin(x); },
                          [](double x) { return std::cos(x); },
                          [](double x) { return -std::sin(x); });
    }
    if (name == "parabola") {
        return make_curve(name, jinterval(p, {-5.0, 5.0}),
                          [](double x) { return x * x; },
                          [](double x) { return 2.0 * x; },
                          [](double) { return 2.0; });
    }
    if (name == "exp_sqrt_abs") {
        // Right-limit convention at the kink: deriv(0) = +inf.
        return make_curve(name, jinterval(p, {-5.0, 5.0}),
                          [](double x) { return std::exp(std::sqrt(std::abs(x))); },
                          [](double x) {
                              if (x == 0.0) return std::numeric_limits<double>::infinity();
                              double s = std::sqrt(std::abs(x));
                              return std::exp(s) * (x > 0 ? 1.0 : -1.0) / (2.0 * s);
                          },
                          [](double x) {
                              if (x == 0.0) return std::numeric_limits<double>::infinity();
                              double a = std::abs(x);
                              double s = std::sqrt(a);
                              return std::exp(s) * (1.0 / (4.0 * a) - 1.0 / (4.0 * a * s));
                          },
                          {0.0});
    }
    if (name == "absolute_slope") {
        double m = jnum(p, "m", 1.0);
        if (!(m > 0.0)) fail(ErrorKind::InvalidArgument, "absolute_slope m must be positive");
        return make_curve(name, jinterval(p, {-5.0, 5.0}),
                          [m](double x) { return std::abs(m * x); },
                          [m](double x) { return x >= 0.0 ? m : -m; },
                          [](double) { return 0.0; },
                          {0.0});
    }
    if (name == "constant") {
        double c = jnum(p, "c", 0.0);
        return make_curve(name, jinterval(p, {-5.0, 5.0}),
                          [c](double) { return c; },
                          [](double) { return 0.0; },
                          [](double) { return 0.0; });
    }
    if (name == "circle_upper") return circle_branch(p, true);
    if (name == "circle_lower") return circle_branch(p, false);

    if (name == "plane") {
        double a = jnum(p, "a", 0.0), b = jnum(p, "b", 0.0), c = jnum(p, "c", 0.0);
        return make_surface(name, jdomain(p, {-5, 5, -5, 5}),
                            [a, b, c](double x, double y) { return a * x + b * y + c; },
                            [a, b](double, double) { return Grad2{a, b}; },
                            [](double, double) { return Hess2{0, 0, 0}; });
    }
    if (name == "cos_plus_cos") {
        return make_surface(name, jdomain(p, {-5, 5, -5, 5}),
                            [](double x, double y) { return std::cos(x) + std::cos(y); },
                            [](double x, double y) { return Grad2{-std::sin(x), -std::sin(y)}; },
                            [](double x, double y) { return Hess2{-std::cos(x), 0.0, -std::cos(y)}; });
    }
    if (name == "cos2_plus_cos2") {
        auto sq = [](double v) { return v * v; };
        return make_surface(name, jdomain(p, {-5, 5, -5, 5}),
                            [sq](double x, double y) { return sq(std::cos(x)) + sq(std::cos(y)); },
                            [](double x, double y) {
                                return Grad2{-std::sin(2.0 * x), -std::sin(2.0 * y)};
                            },
                            [](double x, double y) {
                                return Hess2{-2.0 * std::cos(2.0 * x), 0.0, -2.0 * std::cos(2.0 * y)};
                            });
    }
    if (name == "sphere") {
        double R = jnum(p, "radius", 1.0);
        if (!(R > 0.0)) fail(ErrorKind::InvalidArgument, "sphere radius must be positive");
        // Lower-hemisphere graph patch; the default square keeps rho <= 0.99 R.
        Domain2 dom = jdomain(p, {-0.7 * R, 0.7 * R, -0.7 * R, 0.7 * R});
        auto root = [R](double x, double y) { return std::sqrt(R * R - x * x - y * y); };
        return make_surface(name, dom,
                            [root](double x, double y) { return -root(x, y); },
                            [root](double x, double y) {
                                double s = root(x, y);
                                return Grad2{x / s, y / s};
                            },
                            [root](double x, double y) {
                                double s = root(x, y);
                                double s3 = s * s * s;
                                return Hess2{(s * s + x * x) / s3, x * y / s3,
                                             (s * s + y * y) / s3};
                            });
    }
    if (name == "pseudosphere") {
        double a = jnum(p, "a", 1.0);
        if (!(a > 0.0)) fail(ErrorKind::InvalidArgument, "pseudosphere radius a must be positive");
        // Tractroid graph patch z(rho) with rho = a sin(u); the default
        // rectangle stays clear of both the axis and the rim.
        Domain2 dom = jdomain(p, {0.3 * a, 0.8 * a, -0.35 * a, 0.35 * a});
        auto profile = [a](double rho) {
            double u = std::asin(rho / a);
            return a * (std::cos(u) + std::log(std::tan(0.5 * u)));
        };
        auto slope = [a](double rho) {  // dz/drho = cot(u)
            double u = std::asin(rho / a);
            return std::cos(u) / std::sin(u);
        };
        auto slope2 = [a](double rho) {  // d2z/drho2 = -1/(a sin^2 u cos u)
            double u = std::asin(rho / a);
            return -1.0 / (a * std::sin(u) * std::sin(u) * std::cos(u));
        };
        return make_surface(name, dom,
                            [profile](double x, double y) { return profile(std::hypot(x, y)); },
                            [slope](double x, double y) {
                                double rho = std::hypot(x, y);
                                double g = slope(rho);
                                return Grad2{g * x / rho, g * y / rho};
                            },
                            [slope, slope2](double x, double y) {
                                double rho = std::hypot(x, y);
                                double g = slope(rho), gg = slope2(rho);
                                double r2 = rho * rho, r3 = r2 * rho;
                                return Hess2{gg * x * x / r2 + g * y * y / r3,
                                             gg * x * y / r2 - g * x * y / r3,
                                             gg * y * y / r2 + g * x * x / r3};
                            });
    }

    fail(ErrorKind::UnknownSurface, "unknown builtin: " + name);
}

const std::vector<BuiltinInfo>& builtin_catalog() {
    static const std::vector<BuiltinInfo> cat = {
        {"sine", true, "f(x) = sin(x)", "domain=[-5,5]"},
        {"parabola", true, "f(x) = x^2", "domain=[-5,5]"},
        {"exp_sqrt_abs", true, "f(x) = exp(sqrt(|x|)), kink at 0", "domain=[-5,5]"},
        {"absolute_slope", true, "f(x) = |m*x|, kink at 0", "m=1, domain=[-5,5]"},
        {"constant", true, "f(x) = c", "c=0, domain=[-5,5]"},
        {"circle_upper", true, "upper branch of a circle", "radius=1, cx=0, cy=0"},
        {"circle_lower", true, "lower branch of a circle", "radius=1, cx=0, cy=0"},
        {"plane", false, "f(x,y) = a*x + b*y + c", "a=0, b=0, c=0, domain=[-5,5]^2"},
        {"cos_plus_cos", false, "f(x,y) = cos(x) + cos(y)", "domain=[-5,5]^2"},
        {"cos2_plus_cos2", false, "f(x,y) = cos^2(x) + cos^2(y)", "domain=[-5,5]^2"},
        {"sphere", false, "lower-hemisphere patch, K = 1/R^2", "radius=1"},
        {"pseudosphere", false, "tractroid patch, K = -1/a^2", "a=1"},
    };
    return cat;
}

} // namespace ortho
