#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coamoeba/rational.hpp"

namespace coamoeba {

/// Integer vector in the plane. Used both for configuration vectors b_i and
/// for lattice points of R^2 measured in multiples of pi.
struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(std::int64_t k, Vec2 a) noexcept { return {k * a.x, k * a.y}; }
  Vec2 operator-() const noexcept { return {-x, -y}; }
  Vec2& operator+=(Vec2 o) noexcept { return *this = *this + o; }

  bool is_zero() const noexcept { return x == 0 && y == 0; }

  friend bool operator==(Vec2, Vec2) = default;
  friend auto operator<=>(Vec2, Vec2) = default;
};

/// det of the 2x2 matrix with columns a, b (the wedge a ∧ b).
inline std::int64_t det(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
inline std::int64_t dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }

/// Divides out the gcd of the coordinates; the zero vector is returned unchanged.
Vec2 primitive(Vec2 v) noexcept;

struct RatVec2 {
  Rational x;
  Rational y;

  friend bool operator==(const RatVec2&, const RatVec2&) = default;
};

/// Integer vector of fixed length N; a point of (πZ)^N in π-units, or a
/// direction such as f_j, g_j, h_j.
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(std::size_t n) : c_(n, 0) {}
  LatticeVec(std::initializer_list<std::int64_t> init) : c_(init) {}
  explicit LatticeVec(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

  std::size_t size() const noexcept { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return c_; }

  bool is_zero() const noexcept;

  /// Representative with every coordinate in {0, 1}: the torus point in π-units.
  LatticeVec mod2() const;

  /// gcd of the coordinates (0 for the zero vector).
  std::int64_t content() const noexcept;

  std::string str() const;

  LatticeVec& operator+=(const LatticeVec& o);
  LatticeVec& operator-=(const LatticeVec& o);
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator*(std::int64_t k, LatticeVec a);
  LatticeVec operator-() const;

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

 private:
  std::vector<std::int64_t> c_;
};

using LatticeAngleVec = LatticeVec;
using DirectionVec = LatticeVec;

/// Basis vector e_i of Z^n; for i == n this is e_{n+1} := -(e_1 + ... + e_n).
LatticeVec basis_vector(std::size_t n, std::size_t i);

inline std::int64_t mod2(std::int64_t v) noexcept { return ((v % 2) + 2) % 2; }

}  // namespace coamoeba
