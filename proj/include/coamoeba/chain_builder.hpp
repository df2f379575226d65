#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "coamoeba/lattice.hpp"
#include "coamoeba/line_model.hpp"

namespace coamoeba {

struct BlockVectors {
  std::vector<DirectionVec> f;
  std::vector<DirectionVec> g;
  std::vector<DirectionVec> h;
};

/// f_j sums e_i over block j, g_j over its first sign group and
/// h_j = Σ sgn_i e_i; e_{N+1} is expanded to -(e_1 + ... + e_N).
BlockVectors block_vectors(const AffineLine& line);

struct CoamoebaSkeleton {
  /// p_1, ..., p_{M+1} as lifts: p_1 ∈ {0,1}^N and p_{j+1} = p_j - f_j.
  /// Reduce with mod2() to get the torus points.
  std::vector<LatticeAngleVec> vertices;
  std::vector<DirectionVec> f;
  std::vector<DirectionVec> g;
  std::vector<DirectionVec> h;
};

CoamoebaSkeleton coamoeba_vertices(const AffineLine& line);

struct PathPoint {
  LatticeAngleVec point;
  bool primed = false;
  std::size_t j = 0;  ///< 1-based index, 1..2M+2
};

/// P(ℓ) listed as p̃'_{2M+2}, p̃_{2M+2}, ..., p̃'_1, p̃_1.
struct ZonotopePath {
  std::vector<LatticeAngleVec> p;        ///< p[j-1] = p̃_j, j = 1..2M+2
  std::vector<LatticeAngleVec> p_prime;  ///< p_prime[j-1] = p̃'_j

  std::vector<PathPoint> points() const;
  std::size_t dim() const noexcept { return p.empty() ? 0 : p.front().size(); }
};

ZonotopePath zonotope_path(const AffineLine& line);

struct Triangle {
  LatticeVec a;
  LatticeVec b;
  LatticeVec c;
  int coefficient = 1;
};

/// Formal signed sum of oriented lattice triangles; vertex order is the
/// orientation.
struct TriangleChain {
  std::size_t dim = 0;
  std::vector<Triangle> triangles;
};

/// Triangles (0, p̃_{i+1}, p̃'_i) and (0, p̃'_i, p̃_i) for i = 2M+2 down to 1.
TriangleChain zonotope_chain(const ZonotopePath& path);

/// 1-chain on T^N made of primitive lattice segments. An atom is a
/// basepoint in {0,1}^N and a primitive displacement; (a, d, s) and
/// (a + d mod 2, -d, -s) are stored under the lexicographically smaller key.
class EdgeChain {
 public:
  using Key = std::pair<LatticeVec, LatticeVec>;

  /// Adds the straight segment from `from` to `to` (any lattice lift),
  /// split into primitive steps.
  void add_segment(const LatticeVec& from, const LatticeVec& to, std::int64_t sign);
  void add(const EdgeChain& other);

  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  const std::map<Key, std::int64_t>& atoms() const noexcept { return atoms_; }

 private:
  void add_atom(LatticeVec base, LatticeVec step, std::int64_t sign);
  std::map<Key, std::int64_t> atoms_;
};

/// Upper runs p_j -> p_j - f_j and lower runs p_j -> p_j + f_j, each +1.
EdgeChain coamoeba_boundary(const CoamoebaSkeleton& skel);

EdgeChain chain_boundary(const TriangleChain& chain);

struct CycleReport {
  EdgeChain residual;
  bool ok() const noexcept { return residual.empty(); }
};

CycleReport verify_cycle(const AffineLine& line);

/// Coefficients over pairs i < j (0-based, j < N).
struct HomologyClass2 {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> coeff;

  std::int64_t at(std::size_t i, std::size_t j) const;
  friend bool operator==(const HomologyClass2&, const HomologyClass2&) = default;
};

/// e_i ∧ e_j appears exactly when p̃_1 has 0 at i and 1 at j.
HomologyClass2 homology_class(const AffineLine& line);

}  // namespace coamoeba
