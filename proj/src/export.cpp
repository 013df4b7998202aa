#include "ortho/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace ortho {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Bbox {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -std::numeric_limits<double>::infinity();
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
    }
    void pad(double frac) {
        double mx = std::max(1e-9, (x_hi - x_lo) * frac);
        double my = std::max(1e-9, (y_hi - y_lo) * frac);
        x_lo -= mx, x_hi += mx, y_lo -= my, y_hi += my;
    }
};

// World-to-viewport mapping with uniform scale and a flipped y axis.
struct SvgCanvas {
    double width = 800.0, height = 600.0, margin = 40.0;
    Bbox box;
    double scale = 1.0, ox = 0.0, oy = 0.0;

    explicit SvgCanvas(Bbox b) : box(b) {
        double bw = std::max(1e-12, box.x_hi - box.x_lo);
        double bh = std::max(1e-12, box.y_hi - box.y_lo);
        scale = std::min((width - 2 * margin) / bw, (height - 2 * margin) / bh);
        ox = 0.5 * (width - scale * bw);
        oy = 0.5 * (height - scale * bh);
    }
    double X(double wx) const { return ox + (wx - box.x_lo) * scale; }
    double Y(double wy) const { return height - oy - (wy - box.y_lo) * scale; }

    std::string open(const std::string& title) const {
        std::string s;
        s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) +
             "\" height=\"" + px(height) + "\" viewBox=\"0 0 " + px(width) + " " +
             px(height) + "\">\n";
        s += "<title>" + title + "</title>\n";
        s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        return s;
    }
    std::string polyline(const std::vector<std::array<double, 2>>& pts,
                         const std::string& stroke, double stroke_width,
                         bool closed = false) const {
        if (pts.empty()) return "";
        std::string s = closed ? "<polygon points=\"" : "<polyline points=\"";
        for (const auto& p : pts)
            s += px(X(p[0])) + "," + px(Y(p[1])) + " ";
        s.pop_back();
        s += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
             px(stroke_width) + "\"/>\n";
        return s;
    }
    std::string dot(double wx, double wy, double r, const std::string& fill) const {
        return "<circle cx=\"" + px(X(wx)) + "\" cy=\"" + px(Y(wy)) + "\" r=\"" +
               px(r) + "\" fill=\"" + fill + "\"/>\n";
    }
};

} // namespace

std::string heightfield_csv(const HeightField& hf) {
    std::string s = "# " + std::to_string(hf.nx()) + " " + std::to_string(hf.ny()) +
                    " " + num(hf.dx()) + " " + num(hf.dy()) + " " + num(hf.x0()) +
                    " " + num(hf.y0()) + " " + num(hf.elevation_scale()) + "\n";
    for (int r = 0; r < hf.ny(); ++r) {
        for (int c = 0; c < hf.nx(); ++c) {
            if (c) s += ",";
            s += num(hf.at(r, c));
        }
        s += "\n";
    }
    return s;
}

namespace {

// Sample positions over the curve domain; samples landing on kinks split into
// half-step probes, matching the validity scan.
std::vector<double> curve_samples(const AnalyticCurve& c, int samples) {
    if (samples < 2)
        fail(ErrorKind::InvalidArgument, "need at least 2 samples");
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(samples) + 2);
    double step = c.domain.span() / (samples - 1);
    for (int k = 0; k < samples; ++k) {
        double x = c.domain.lo + k * step;
        if (k == samples - 1) x = c.domain.hi;
        if (c.is_nonsmooth_at(x)) {
            if (c.domain.contains(x - 0.5 * step)) xs.push_back(x - 0.5 * step);
            if (c.domain.contains(x + 0.5 * step)) xs.push_back(x + 0.5 * step);
        } else {
            xs.push_back(x);
        }
    }
    return xs;
}

} // namespace

std::string imaging_curve_csv(const AnalyticCurve& c,
                              const std::vector<double>& distances, int samples,
                              Orientation orientation) {
    if (distances.empty())
        fail(ErrorKind::InvalidArgument, "no imaging distances given");
    auto xs = curve_samples(c, samples);
    std::string s = "x,y,x_img,y_img,d\n";
    bool first = true;
    for (double d : distances) {
        if (!first) s += "\n";
        first = false;
        for (double x : xs) {
            auto im = imaging_curve(c, x, d, orientation);
            s += num(x) + "," + num(c.eval(x)) + "," + num(im[0]) + "," +
                 num(im[1]) + "," + num(d) + "\n";
        }
    }
    return s;
}

std::string imaging_surface_csv(const SurfaceField& s,
                                const std::vector<double>& distances,
                                int samples_per_axis, Orientation orientation) {
    if (distances.empty())
        fail(ErrorKind::InvalidArgument, "no imaging distances given");
    if (samples_per_axis < 2)
        fail(ErrorKind::InvalidArgument, "need at least 2 samples per axis");
    std::string out = "x,y,z,x_img,y_img,z_img,d\n";
    double sx = (s.domain.x_hi - s.domain.x_lo) / (samples_per_axis - 1);
    double sy = (s.domain.y_hi - s.domain.y_lo) / (samples_per_axis - 1);
    bool first = true;
    for (double d : distances) {
        if (!first) out += "\n";
        first = false;
        for (int j = 0; j < samples_per_axis; ++j) {
            double y = j == samples_per_axis - 1 ? s.domain.y_hi : s.domain.y_lo + j * sy;
            for (int i = 0; i < samples_per_axis; ++i) {
                double x = i == samples_per_axis - 1 ? s.domain.x_hi
                                                     : s.domain.x_lo + i * sx;
                ImagingSample im = imaging_point(s, x, y, d, orientation);
                out += num(im.base[0]) + "," + num(im.base[1]) + "," +
                       num(im.base[2]) + "," + num(im.image[0]) + "," +
                       num(im.image[1]) + "," + num(im.image[2]) + "," + num(d) + "\n";
            }
        }
    }
    return out;
}

std::string imaging_curve_svg(const AnalyticCurve& c,
                              const std::vector<double>& distances, int samples,
                              Orientation orientation, double scan_resolution) {
    if (distances.empty())
        fail(ErrorKind::InvalidArgument, "no imaging distances given");
    auto xs = curve_samples(c, samples);

    std::vector<std::array<double, 2>> base;
    base.reserve(xs.size());
    for (double x : xs) base.push_back({x, c.eval(x)});

    std::vector<std::vector<std::array<double, 2>>> images;
    std::vector<std::vector<std::array<double, 2>>> marks;
    for (double d : distances) {
        std::vector<std::array<double, 2>> img;
        img.reserve(xs.size());
        for (double x : xs) img.push_back(imaging_curve(c, x, d, orientation));
        images.push_back(std::move(img));

        std::vector<std::array<double, 2>> mk;
        for (double x : curve_validity(c, d, scan_resolution).violations)
            mk.push_back(imaging_curve(c, x, d, orientation));
        marks.push_back(std::move(mk));
    }

    Bbox box;
    for (const auto& p : base) box.add(p[0], p[1]);
    for (const auto& img : images)
        for (const auto& p : img) box.add(p[0], p[1]);
    box.pad(0.05);

    SvgCanvas cv(box);
    std::string svg = cv.open("imaging curves: " + c.name);
    static const char* palette[] = {"#1f77b4", "#2ca02c", "#9467bd",
                                    "#8c564b", "#17becf", "#bcbd22"};
    svg += cv.polyline(base, "black", 2.0);
    for (size_t k = 0; k < images.size(); ++k)
        svg += cv.polyline(images[k], palette[k % 6], 1.5);
    for (const auto& mk : marks)
        for (const auto& p : mk) svg += cv.dot(p[0], p[1], 3.0, "red");
    svg += "</svg>\n";
    return svg;
}

std::string region_members_csv(const OrthoRegion& region) {
    std::string s = "i,j,x,y,z\n";
    for (const auto& m : region.members)
        s += std::to_string(m.i) + "," + std::to_string(m.j) + "," + num(m.x) +
             "," + num(m.y) + "," + num(m.z) + "\n";
    return s;
}

std::string region_boundary_csv(const OrthoRegion& region) {
    std::string s = "x,y\n";
    for (const auto& p : region.boundary) s += num(p[0]) + "," + num(p[1]) + "\n";
    return s;
}

std::string region_svg(const OrthoRegion& region, const SurfaceField& s) {
    const double dx = region.params.dx, dy = region.params.dy;
    const double cx = region.center[0], cy = region.center[1];

    long i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
    for (const auto& m : region.members) {
        i_lo = std::min<long>(i_lo, m.i);
        i_hi = std::max<long>(i_hi, m.i);
        j_lo = std::min<long>(j_lo, m.j);
        j_hi = std::max<long>(j_hi, m.j);
    }
    long pad_i = std::max(2L, (i_hi - i_lo) / 5);
    long pad_j = std::max(2L, (j_hi - j_lo) / 5);
    i_lo -= pad_i, i_hi += pad_i, j_lo -= pad_j, j_hi += pad_j;

    // Elevation range over the window, ignoring out-of-domain cells.
    double z_lo = std::numeric_limits<double>::infinity(), z_hi = -z_lo;
    for (long j = j_lo; j <= j_hi; ++j)
        for (long i = i_lo; i <= i_hi; ++i) {
            double x = cx + i * dx, y = cy + j * dy;
            if (!s.domain.contains(x, y)) continue;
            double z = s.eval(x, y);
            z_lo = std::min(z_lo, z);
            z_hi = std::max(z_hi, z);
        }
    double z_span = std::max(1e-12, z_hi - z_lo);

    Bbox box;
    box.add(cx + (i_lo - 0.5) * dx, cy + (j_lo - 0.5) * dy);
    box.add(cx + (i_hi + 0.5) * dx, cy + (j_hi + 0.5) * dy);
    SvgCanvas cv(box);

    std::string svg = cv.open("orthographic region");
    for (long j = j_lo; j <= j_hi; ++j)
        for (long i = i_lo; i <= i_hi; ++i) {
            double x = cx + i * dx, y = cy + j * dy;
            std::string fill;
            if (region.contains(static_cast<int>(i), static_cast<int>(j))) {
                fill = "white";
            } else if (s.domain.contains(x, y)) {
                double t = (s.eval(x, y) - z_lo) / z_span;
                int r = static_cast<int>(30 + 200 * t);
                int g = static_cast<int>(40 + 60 * t);
                int b = static_cast<int>(220 - 180 * t);
                char buf[16];
                std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
                fill = buf;
            } else {
                fill = "#dddddd";
            }
            double x0p = cv.X(x - 0.5 * dx), y0p = cv.Y(y + 0.5 * dy);
            double x1p = cv.X(x + 0.5 * dx), y1p = cv.Y(y - 0.5 * dy);
            svg += "<rect x=\"" + px(x0p) + "\" y=\"" + px(y0p) + "\" width=\"" +
                   px(x1p - x0p) + "\" height=\"" + px(y1p - y0p) + "\" fill=\"" +
                   fill + "\"/>\n";
        }
    svg += cv.polyline(region.boundary, "black", 1.5);
    svg += cv.dot(cx, cy, 3.5, "red");
    svg += "</svg>\n";
    return svg;
}

std::string approx_svg(const BoundaryApprox& approx, const OrthoRegion& exact,
                       const SurfaceField& s) {
    (void)s;
    auto outline =
        approx_outline(approx, 0.25 * std::min(exact.params.dx, exact.params.dy) +
                                   1e-12);
    Bbox box;
    for (const auto& p : exact.boundary) box.add(p[0], p[1]);
    for (const auto& p : outline) box.add(p[0], p[1]);
    box.pad(0.08);

    SvgCanvas cv(box);
    std::string svg = cv.open("exact boundary (blue) vs " + approx.method_tag + " (red)");
    svg += cv.polyline(exact.boundary, "blue", 2.0);
    svg += cv.polyline(outline, "red", 2.0);
    svg += cv.dot(exact.center[0], exact.center[1], 3.0, "black");
    svg += "</svg>\n";
    return svg;
}

std::string comparison_json(const std::vector<ApproxComparison>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({{"method", r.method_tag},
                       {"iou", r.iou},
                       {"area_ratio", r.area_ratio},
                       {"hausdorff", r.hausdorff},
                       {"build_seconds", r.build_seconds}});
    }
    return arr.dump(2) + "\n";
}

std::string comparison_csv(const std::vector<ApproxComparison>& records) {
    std::string s = "method,iou,area_ratio,hausdorff,build_seconds\n";
    for (const auto& r : records)
        s += r.method_tag + "," + num(r.iou) + "," + num(r.area_ratio) + "," +
             num(r.hausdorff) + "," + num(r.build_seconds) + "\n";
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    // Stage into a sibling temp file, then rename: failures never leave a
    // partial file at the destination.
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorKind::IoError, "cannot open for writing: " + path);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::remove(tmp.c_str());
            fail(ErrorKind::IoError, "write failed: " + path);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        fail(ErrorKind::IoError, "cannot replace destination: " + path);
    }
}

} // namespace ortho
