#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "coamoeba/bconfig.hpp"
#include "coamoeba/chain_builder.hpp"
#include "coamoeba/gale_plane.hpp"
#include "coamoeba/line_model.hpp"

namespace coamoeba {

/// Point of T^2 in π-units, reduced to the window [-1, 1)^2.
struct TorusPoint2 {
  Rational x;
  Rational y;

  static TorusPoint2 reduced(const Rational& x, const Rational& y);
  std::string str() const { return x.str() + "," + y.str(); }
};

/// Closed lattice polygon; the edge from the last vertex back to the first is implied.
struct ClosedPolygon2 {
  std::vector<Vec2> vertices;
};

/// Throws PointOnBoundary if pt lies on an edge.
std::int64_t winding_number(const ClosedPolygon2& poly, const RatVec2& pt);

/// Sum of winding numbers about every lift θ + 2k inside the bounding box.
std::int64_t torus_degree_polygon(const ClosedPolygon2& poly, const TorusPoint2& theta);

/// Signed count of triangles (over all lifts of θ) strictly containing θ.
/// Collinear triangles are ignored.
std::int64_t torus_degree_triangles(const TriangleChain& chain, const TorusPoint2& theta);

struct CoamoebaLoops {
  ClosedPolygon2 upper;  ///< edges -c_j from the lift of p_1
  ClosedPolygon2 lower;  ///< edges +c_j from the same start
};

/// c_j = map(f_j).
CoamoebaLoops coamoeba_loops(const AffineLine& line, const LinearMap2& map);

std::int64_t coamoeba_degree(const AffineLine& line, const LinearMap2& map, const TorusPoint2& theta);
/// b is the configuration the line was built from, in its input order.
std::int64_t coamoeba_degree(const AffineLine& line, const BConfig& b, const TorusPoint2& theta);

TriangleChain pushed_zonotope_chain(const AffineLine& line, const LinearMap2& map);

std::int64_t cycle_degree(const AffineLine& line, const LinearMap2& map, const TorusPoint2& theta);
std::int64_t cycle_degree(const AffineLine& line, const BConfig& b, const TorusPoint2& theta);

/// Random point with odd denominators in [7, 255].
TorusPoint2 random_torus_point(std::mt19937_64& rng);

/// Evaluates f at random points, redrawing whenever f throws PointOnBoundary.
std::int64_t at_generic_point(std::mt19937_64& rng, const std::function<std::int64_t(const TorusPoint2&)>& f,
                              TorusPoint2* used = nullptr);

/// Degree of the cycle projected to coordinates (i, j), 0-based, i < j < N.
std::int64_t class_oracle_2d(const AffineLine& line, std::size_t i, std::size_t j);

/// Unsigned number of pushed triangles covering θ in the plane (no torus
/// translates), ignoring collinear ones.
std::int64_t plane_coverage_triangles(const TriangleChain& chain, const RatVec2& pt);

struct SampleViolation {
  std::size_t index = 0;
  TorusPoint2 theta;
  std::int64_t degree = 0;
};

struct SampleReport {
  std::vector<std::array<double, 2>> points;  ///< π-units, in [-1, 1)^2
  std::size_t checked = 0;
  std::size_t skipped = 0;  ///< within tolerance of a loop edge
  std::vector<SampleViolation> violations;
};

/// Draws points z in the upper half-plane, maps them through the argument
/// map and checks coamoeba_degree >= 1 at each one not within 1e-6 radians
/// of a loop edge. Sample k depends only on (seed, k).
SampleReport sample_coamoeba(const AffineLine& line, const BConfig& b, std::size_t count, std::uint64_t seed);

}  // namespace coamoeba
