#pragma once

#include <string>
#include <vector>

#include "ortho/approx.hpp"
#include "ortho/imaging.hpp"
#include "ortho/region.hpp"
#include "ortho/surface.hpp"

namespace ortho {

// All emitters build the complete document in memory and are byte-stable for
// identical inputs.

/// Row-major grid with header line "# nx ny dx dy x0 y0 scale".
std::string heightfield_csv(const HeightField& hf);

/// Columns x,y,x',y',d for curves; one block per distance.
std::string imaging_curve_csv(const AnalyticCurve& c, const std::vector<double>& distances,
                              int samples, Orientation orientation);

/// Columns x,y,z,x',y',z',d sampled on an n-by-n grid over the domain.
std::string imaging_surface_csv(const SurfaceField& s, const std::vector<double>& distances,
                                int samples_per_axis, Orientation orientation);

/// Plot of C with the C' family; invalid imaging points get violation markers.
std::string imaging_curve_svg(const AnalyticCurve& c, const std::vector<double>& distances,
                              int samples, Orientation orientation,
                              double scan_resolution = 0.0);

std::string region_members_csv(const OrthoRegion& region);
std::string region_boundary_csv(const OrthoRegion& region);

/// Heat-shaded surface window with the region in white and the center in red.
std::string region_svg(const OrthoRegion& region, const SurfaceField& s);

/// Exact boundary in blue, approximated boundary in red.
std::string approx_svg(const BoundaryApprox& approx, const OrthoRegion& exact,
                       const SurfaceField& s);

std::string comparison_json(const std::vector<ApproxComparison>& records);
std::string comparison_csv(const std::vector<ApproxComparison>& records);

/// Write a whole file or throw Error(IoError); never leaves partial output
/// behind on failure.
void write_file(const std::string& path, const std::string& content);

} // namespace ortho
