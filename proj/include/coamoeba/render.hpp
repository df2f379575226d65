#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coamoeba/bconfig.hpp"
#include "coamoeba/chain_builder.hpp"
#include "coamoeba/gale_plane.hpp"
#include "coamoeba/line_model.hpp"

namespace coamoeba {

/// Axis-parallel rectangle in π-units.
struct Window {
  Rational x0 = -1;
  Rational y0 = -1;
  Rational x1 = 1;
  Rational y1 = 1;
};

struct RenderOptions {
  int resolution = 256;  ///< cells per side, at least 16
  std::string palette = "gray";  ///< "gray" or "blue"
  std::optional<Window> window;  ///< torus default [-1,1]^2, cover default fits the chain
  bool labels = true;
};

/// Multiplicity at the query point of each cell; rows run top to bottom.
/// Cells whose center lies on a boundary edge are queried at a nearby
/// offset point; cells with no generic offset hold nullopt.
using DegreeGrid = std::vector<std::vector<std::optional<std::int64_t>>>;

DegreeGrid torus_degree_grid(const AffineLine& line, const BConfig& b, const RenderOptions& opts);

/// Fundamental-domain picture: cells shaded by coamoeba multiplicity, with
/// the zonotope Z_B and the coamoeba boundary loops drawn over it.
std::string render_torus(const AffineLine& line, const BConfig& b, const RenderOptions& opts = {});

DegreeGrid cover_coverage_grid(const ZonotopePath& path, const LinearMap2& map, const RenderOptions& opts);

/// Universal-cover picture of the image of P(ℓ) under map, with labeled
/// points q̃_j, q̃'_j and cells shaded by how many triangles cover them.
/// Throws DimensionMismatch if map does not match the path.
std::string render_cover(const ZonotopePath& path, const LinearMap2& map, const RenderOptions& opts = {});

/// Same, for a path that already lives in Z^2.
std::string render_cover(const ZonotopePath& path, const RenderOptions& opts = {});

/// Decimal rendering of a rational rounded half-up to at most `places` digits.
std::string fixed_decimal(const Rational& r, int places = 3);

}  // namespace coamoeba
