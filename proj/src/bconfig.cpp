#include "coamoeba/bconfig.hpp"

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {
// Keeps every determinant and chart product comfortably inside 64 bits.
constexpr std::int64_t kMaxCoord = std::int64_t{1} << 24;
}  // namespace

BConfig BConfig::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != b_.size()) throw Error(ErrorCode::DimensionMismatch, "permutation length differs from configuration");
  std::vector<Vec2> out;
  out.reserve(perm.size());
  for (auto k : perm) out.push_back(b_.at(k));
  return validate_bconfig(std::move(out));
}

BConfig validate_bconfig(std::vector<Vec2> raw) {
  if (raw.size() < 3) {
    throw Error(ErrorCode::TooFew, "need at least 3 vectors, got " + std::to_string(raw.size()));
  }
  Vec2 sum;
  bool spans = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].x > kMaxCoord || raw[i].x < -kMaxCoord || raw[i].y > kMaxCoord || raw[i].y < -kMaxCoord) {
      throw Error(ErrorCode::SemanticError, "vector " + std::to_string(i + 1) + " has a coordinate beyond 2^24");
    }
    if (raw[i].is_zero()) throw Error(ErrorCode::ZeroVector, "vector " + std::to_string(i + 1) + " is zero");
    sum += raw[i];
    if (!spans && det(raw[0], raw[i]) != 0) spans = true;
  }
  if (!sum.is_zero()) {
    throw Error(ErrorCode::SumNonzero,
                "vectors sum to (" + std::to_string(sum.x) + "," + std::to_string(sum.y) + ")");
  }
  if (!spans) throw Error(ErrorCode::RankDeficient, "vectors are all parallel");
  BConfig b;
  b.b_ = std::move(raw);
  return b;
}

}  // namespace coamoeba
