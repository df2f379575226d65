#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coamoeba/bconfig.hpp"
#include "coamoeba/chain_builder.hpp"
#include "coamoeba/lattice.hpp"

namespace coamoeba {

/// Integer linear map Z^N -> Z^2 given by the images of e_1..e_N.
struct LinearMap2 {
  std::vector<Vec2> columns;

  std::size_t dim() const noexcept { return columns.size(); }
  Vec2 apply(const LatticeVec& x) const;
};

/// e_i ↦ b_i for i = 1..N. Pass the configuration in line order.
LinearMap2 pushforward_map(const BConfig& b);

/// e_k ↦ (δ_ki, δ_kj), 0-based i, j.
LinearMap2 coordinate_projection(std::size_t n, std::size_t i, std::size_t j);

/// Σ coeff(i,j)·det(b_i, b_j). Throws IndexOutOfRange.
std::int64_t push_class(const HomologyClass2& cls, const BConfig& b);

/// Σ |det(b_i, b_j)| over pairs whose open cone contains v.
/// Throws NonGenericDirection when v is zero or parallel to some b_i.
std::int64_t d_B_chamber(const BConfig& b, Vec2 v);

struct ChamberValue {
  Vec2 v;
  std::int64_t value = 0;
};

/// One representative direction per chamber of the rays ±b_i, counterclockwise.
std::vector<ChamberValue> d_B_table(const BConfig& b);

/// Common chamber value. Throws ChamberMismatch if two chambers disagree.
std::int64_t d_B(const BConfig& b);

/// Minkowski sum of the segments [0, b_i], in π-units.
struct ZonotopeB {
  std::vector<Vec2> vertices;  ///< clockwise, starting at the largest x - y
  std::vector<Vec2> edges;     ///< edges[k] = vertices[k+1] - vertices[k], cyclically

  /// Twice the area, exact.
  std::int64_t area2() const;
};

ZonotopeB zonotope_b(const BConfig& b);

TriangleChain pushforward_chain(const TriangleChain& chain, const LinearMap2& map);

/// N+1 points in Z^{N-2} whose vectors (1, a) span the integer kernel of B.
struct GaleDualA {
  std::size_t dim = 0;
  std::vector<LatticeVec> points;
};

/// Throws NotGaleDualizable for repeated vectors or when B does not
/// generate Z^2.
GaleDualA gale_dual(const BConfig& b);

/// dim!·vol(conv A). Throws DegenerateHull unless A spans its ambient space.
std::int64_t normalized_volume(const GaleDualA& a);

}  // namespace coamoeba
