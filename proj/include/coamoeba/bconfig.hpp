#pragma once

#include <cstddef>
#include <vector>

#include "coamoeba/lattice.hpp"

namespace coamoeba {

/// N+1 nonzero integer vectors in the plane with zero sum and rank 2.
/// Repeated vectors are allowed.
class BConfig {
 public:
  const std::vector<Vec2>& vectors() const noexcept { return b_; }
  std::size_t size() const noexcept { return b_.size(); }
  /// N, the dimension of the torus the line lives in.
  std::size_t n() const noexcept { return b_.size() - 1; }
  Vec2 operator[](std::size_t i) const { return b_[i]; }

  /// Same vectors listed in the order given by perm (perm[k] = old index).
  BConfig permuted(const std::vector<std::size_t>& perm) const;

 private:
  friend BConfig validate_bconfig(std::vector<Vec2> raw);
  std::vector<Vec2> b_;
};

/// Throws Error with TooFew, ZeroVector, SumNonzero or RankDeficient.
BConfig validate_bconfig(std::vector<Vec2> raw);

}  // namespace coamoeba
