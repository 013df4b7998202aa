#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ortho/export.hpp"
#include "support.hpp"

using ortho::AnalyticCurve;
using ortho::AnalyticSurface;
using ortho::ApproxComparison;
using ortho::Error;
using ortho::ErrorKind;
using ortho::HeightField;
using ortho::Orientation;
using ortho::OrthoParams;
using ortho::SurfaceField;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDeg = kPi / 180.0;
constexpr ErrorKind kNoError = static_cast<ErrorKind>(-1);

template <typename F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return kNoError;
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

size_t count_occurrences(const std::string& s, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = s.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

} // namespace

TEST_CASE("heightfield csv carries the grid header") {
    auto px = testsup::hill_field(8, 6);
    std::string path = testsup::temp_dir() + "/g.pgm";
    testsup::write_pgm_p5(path, 8, 6, px);
    HeightField hf = ortho::load_dem(path, 0.25, 0.5, 3.0);

    std::string csv = ortho::heightfield_csv(hf);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "# 8 6 0.25 0.5 0 0 3");
    CHECK(count_lines(csv) == 1 + 6);  // header, one line per row
    std::string row;
    std::getline(in, row);
    CHECK(std::count(row.begin(), row.end(), ',') == 7);
}

TEST_CASE("imaging curve csv blocks per distance") {
    auto sine = std::get<AnalyticCurve>(ortho::make_builtin("sine"));
    std::string csv = ortho::imaging_curve_csv(sine, {1.0, 2.0}, 64, Orientation::Up);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,y,x_img,y_img,d");
    // 64 samples per block, two blocks separated by a blank line.
    CHECK(count_lines(csv) == 1 + 64 + 1 + 64);
    CHECK(csv.find("\n\n") != std::string::npos);

    CHECK(kind_of([&] { ortho::imaging_curve_csv(sine, {}, 64, Orientation::Up); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { ortho::imaging_curve_csv(sine, {1.0}, 1, Orientation::Up); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("imaging surface csv covers the sample grid") {
    auto plane = std::get<AnalyticSurface>(ortho::make_builtin("plane", {{"c", 1.0}}));
    SurfaceField f = ortho::field_of(plane);
    std::string csv = ortho::imaging_surface_csv(f, {2.0}, 5, Orientation::Up);
    CHECK(count_lines(csv) == 1 + 25);
    // A flat patch lifts straight up: z' = c + d on every row.
    CHECK(count_occurrences(csv, ",3,") == 25);
}

TEST_CASE("curve svg marks violations in red") {
    auto parabola = std::get<AnalyticCurve>(ortho::make_builtin("parabola"));
    std::string bad = ortho::imaging_curve_svg(parabola, {5.0}, 128, Orientation::Up);
    CHECK(bad.rfind("<svg", 0) == 0);
    CHECK(bad.find("fill=\"red\"") != std::string::npos);

    std::string good = ortho::imaging_curve_svg(parabola, {1.0}, 128, Orientation::Up);
    CHECK(good.find("fill=\"red\"") == std::string::npos);

    auto sine = std::get<AnalyticCurve>(ortho::make_builtin("sine"));
    std::string family =
        ortho::imaging_curve_svg(sine, {1.0, 2.0, 5.0, 50.0}, 128, Orientation::Up);
    // Base curve plus one polyline per distance.
    CHECK(count_occurrences(family, "<polyline") == 5);
    CHECK(family.find("fill=\"red\"") == std::string::npos);
}

TEST_CASE("region exports are deterministic") {
    auto wavy = std::get<AnalyticSurface>(ortho::make_builtin("cos_plus_cos"));
    SurfaceField f = ortho::field_of(wavy);
    OrthoParams p{10.0 * kDeg, 1.0, 0.02, 0.02};
    auto r1 = ortho::surface_region(f, 0.3, -0.2, p);
    auto r2 = ortho::surface_region(f, 0.3, -0.2, p);

    CHECK(ortho::region_members_csv(r1) == ortho::region_members_csv(r2));
    CHECK(ortho::region_boundary_csv(r1) == ortho::region_boundary_csv(r2));
    CHECK(ortho::region_svg(r1, f) == ortho::region_svg(r2, f));

    std::string members = ortho::region_members_csv(r1);
    CHECK(members.rfind("i,j,x,y,z\n", 0) == 0);
    CHECK(count_lines(members) == 1 + r1.members.size());

    std::string boundary = ortho::region_boundary_csv(r1);
    CHECK(boundary.rfind("x,y\n", 0) == 0);
    CHECK(count_lines(boundary) == 1 + r1.boundary.size());

    std::string svg = ortho::region_svg(r1, f);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count_occurrences(svg, "<rect") > r1.members.size());
    CHECK(svg.find("fill=\"red\"") != std::string::npos);  // center marker
}

TEST_CASE("approximation overlay shows both boundaries") {
    auto plane = std::get<AnalyticSurface>(ortho::make_builtin("plane"));
    SurfaceField f = ortho::field_of(plane);
    OrthoParams p{10.0 * kDeg, 2.0, 0.01, 0.01};
    auto exact = ortho::surface_region(f, 0.0, 0.0, p);
    auto a = ortho::approx_circular_two(f, 0.0, 0.0, 2.0, p, 1.0);
    std::string svg = ortho::approx_svg(a, exact, f);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
    CHECK(svg.find("stroke=\"red\"") != std::string::npos);
    CHECK(svg.find("approach-4") != std::string::npos);
}

TEST_CASE("comparison reports round-trip through json") {
    std::vector<ApproxComparison> records = {
        {"approach-1", 0.9, 1.02, 0.015, 0.004},
        {"approach-4", 0.62, 0.5, 0.21, 0.0001},
    };
    std::string doc = ortho::comparison_json(records);
    json parsed = json::parse(doc);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["method"] == "approach-1");
    CHECK(parsed[0]["iou"] == 0.9);
    CHECK(parsed[1]["area_ratio"] == 0.5);
    CHECK(parsed[1]["build_seconds"] == 0.0001);

    std::string csv = ortho::comparison_csv(records);
    CHECK(csv.rfind("method,iou,area_ratio,hausdorff,build_seconds\n", 0) == 0);
    CHECK(count_lines(csv) == 3);
    CHECK(csv.find("approach-4,0.62,0.5,0.21,0.0001\n") != std::string::npos);
}

TEST_CASE("file writes are whole or absent") {
    std::string dir = testsup::temp_dir();
    std::string target = dir + "/report.csv";
    ortho::write_file(target, "a,b\n1,2\n");
    CHECK(testsup::read_file(target) == "a,b\n1,2\n");

    // Overwrite replaces the content in one step.
    ortho::write_file(target, "fresh\n");
    CHECK(testsup::read_file(target) == "fresh\n");

    std::string missing_dir = dir + "/nope/deeper/report.csv";
    CHECK(kind_of([&] { ortho::write_file(missing_dir, "x"); }) == ErrorKind::IoError);
    CHECK(!testsup::file_exists(missing_dir));
    CHECK(!testsup::file_exists(missing_dir + ".tmp"));
}
