#pragma once

#include <vector>

#include "coamoeba/bconfig.hpp"
#include "coamoeba/line_model.hpp"

namespace fixtures {

using coamoeba::AffineForm;
using coamoeba::Vec2;

inline std::vector<Vec2> cubic_vectors() { return {{1, 0}, {-2, 1}, {1, -2}, {0, 1}}; }
inline coamoeba::BConfig cubic() { return coamoeba::validate_bconfig(cubic_vectors()); }

/// z, 1-2z, z-2, 1: the line of the cubic configuration with its last vector as pivot.
inline std::vector<AffineForm> three_zero_forms() { return {{1, 0}, {-2, 1}, {1, -2}, {0, 1}}; }

inline coamoeba::BConfig parallel() { return coamoeba::validate_bconfig({{1, 0}, {0, 1}, {-2, -2}, {1, 1}}); }

/// Repeated-zero lines in P^3.
inline std::vector<AffineForm> double_zero_forms() { return {{-1, -1}, {-1, -1}, {2, 0}, {0, 2}}; }
inline std::vector<AffineForm> half_shift_forms() { return {{2, 1}, {-2, 1}, {0, -4}, {0, 2}}; }
inline std::vector<AffineForm> double_one_forms() { return {{-1, 0}, {-1, 1}, {2, -2}, {0, 1}}; }

/// Unimodular triangle.
inline coamoeba::BConfig triangle() { return coamoeba::validate_bconfig({{1, 0}, {0, 1}, {-1, -1}}); }

inline coamoeba::BConfig cross() { return coamoeba::validate_bconfig({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

}  // namespace fixtures
