#include "coamoeba/gale_plane.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

int sgn128(__int128 v) noexcept { return (v > 0) - (v < 0); }

int half_plane(Vec2 v) noexcept { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

bool angle_less(Vec2 a, Vec2 b) noexcept {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

// Distinct primitive directions among the given vectors and their negatives,
// sorted counterclockwise from the positive x-axis.
std::vector<Vec2> sorted_rays(const std::vector<Vec2>& vs) {
  std::set<Vec2> seen;
  for (Vec2 v : vs) {
    seen.insert(primitive(v));
    seen.insert(-primitive(v));
  }
  std::vector<Vec2> rays(seen.begin(), seen.end());
  std::sort(rays.begin(), rays.end(), angle_less);
  return rays;
}

// Interior directions of the chambers cut out by the rays; consecutive rays
// are less than a half-turn apart because the ray set is symmetric.
std::vector<Vec2> chamber_directions(const std::vector<Vec2>& vs) {
  const std::vector<Vec2> rays = sorted_rays(vs);
  std::vector<Vec2> out;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    out.push_back(primitive(rays[k] + rays[(k + 1) % rays.size()]));
  }
  return out;
}

// Determinant by fraction-free elimination.
__int128 determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  __int128 sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t affine_rank(const std::vector<LatticeVec>& pts) {
  if (pts.empty()) return 0;
  const std::size_t d = pts.front().size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<Rational> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = pts[k][i] - pts[0][i];
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < d; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Vec2 LinearMap2::apply(const LatticeVec& x) const {
  if (x.size() != columns.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(x.size()) +
                                                  " applied to map on Z^" + std::to_string(columns.size()));
  }
  Vec2 out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += x[i] * columns[i];
  return out;
}

LinearMap2 pushforward_map(const BConfig& b) {
  LinearMap2 map;
  map.columns.assign(b.vectors().begin(), b.vectors().end() - 1);
  return map;
}

LinearMap2 coordinate_projection(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n || i == j) {
    throw Error(ErrorCode::IndexOutOfRange, "projection pair out of range");
  }
  LinearMap2 map;
  map.columns.assign(n, Vec2{});
  map.columns[i] = {1, 0};
  map.columns[j] = {0, 1};
  return map;
}

std::int64_t push_class(const HomologyClass2& cls, const BConfig& b) {
  std::int64_t total = 0;
  for (const auto& [ij, c] : cls.coeff) {
    if (ij.first >= b.size() || ij.second >= b.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "class index beyond configuration size");
    }
    total += c * det(b[ij.first], b[ij.second]);
  }
  return total;
}

std::int64_t d_B_chamber(const BConfig& b, Vec2 v) {
  if (v.is_zero()) throw Error(ErrorCode::NonGenericDirection, "zero direction");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (det(b[i], v) == 0) {
      throw Error(ErrorCode::NonGenericDirection, "direction is parallel to vector " + std::to_string(i + 1));
    }
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const std::int64_t d = det(b[i], b[j]);
      if (d == 0) continue;
      // v = s b_i + t b_j with s = det(v, b_j)/d and t = det(b_i, v)/d.
      const int s = sgn128(det(v, b[j]));
      const int t = sgn128(det(b[i], v));
      const int sd = sgn128(d);
      if (s == sd && t == sd) total += d > 0 ? d : -d;
    }
  }
  return total;
}

std::vector<ChamberValue> d_B_table(const BConfig& b) {
  std::vector<ChamberValue> out;
  for (Vec2 v : chamber_directions(b.vectors())) out.push_back({v, d_B_chamber(b, v)});
  return out;
}

std::int64_t d_B(const BConfig& b) {
  const auto table = d_B_table(b);
  for (const auto& c : table) {
    if (c.value != table.front().value) {
      throw Error(ErrorCode::ChamberMismatch, "chamber values " + std::to_string(table.front().value) + " and " +
                                                  std::to_string(c.value) + " differ");
    }
  }
  return table.front().value;
}

std::int64_t ZonotopeB::area2() const {
  __int128 s = 0;
  for (std::size_t k = 0; k < vertices.size(); ++k) s += det(vertices[k], vertices[(k + 1) % vertices.size()]);
  return checked_narrow(s < 0 ? -s : s);
}

ZonotopeB zonotope_b(const BConfig& b) {
  // Normal fan: chambers of the lines orthogonal to the b_i.
  std::vector<Vec2> normals;
  for (Vec2 v : b.vectors()) normals.push_back({-v.y, v.x});
  std::vector<Vec2> verts;
  for (Vec2 w : chamber_directions(normals)) {
    Vec2 q;
    for (Vec2 v : b.vectors()) {
      if (dot(v, w) > 0) q += v;
    }
    verts.push_back(q);
  }
  // Support vertices of counterclockwise directions run counterclockwise.
  std::reverse(verts.begin(), verts.end());
  auto se = std::max_element(verts.begin(), verts.end(), [](Vec2 p, Vec2 q) {
    return p.x - p.y < q.x - q.y || (p.x - p.y == q.x - q.y && p < q);
  });
  std::rotate(verts.begin(), se, verts.end());
  ZonotopeB z;
  z.vertices = verts;
  for (std::size_t k = 0; k < verts.size(); ++k) z.edges.push_back(verts[(k + 1) % verts.size()] - verts[k]);
  return z;
}

TriangleChain pushforward_chain(const TriangleChain& chain, const LinearMap2& map) {
  if (chain.dim != map.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "chain lives in Z^" + std::to_string(chain.dim) + ", map expects Z^" +
                                                  std::to_string(map.dim()));
  }
  auto lift = [&](const LatticeVec& x) {
    const Vec2 p = map.apply(x);
    return LatticeVec{p.x, p.y};
  };
  TriangleChain out;
  out.dim = 2;
  for (const Triangle& t : chain.triangles) out.triangles.push_back({lift(t.a), lift(t.b), lift(t.c), t.coefficient});
  return out;
}

GaleDualA gale_dual(const BConfig& b) {
  const std::size_t n = b.size();
  {
    std::set<Vec2> seen(b.vectors().begin(), b.vectors().end());
    if (seen.size() != n) throw Error(ErrorCode::NotGaleDualizable, "configuration has repeated vectors");
  }

  // Column-reduce the 2 x n matrix by unimodular U, keeping U^{-1} in step.
  Matrix m(2, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[0][i] = b[i].x;
    m[1][i] = b[i].y;
  }
  Matrix u(n, std::vector<std::int64_t>(n, 0));
  Matrix uinv = u;
  for (std::size_t i = 0; i < n; ++i) u[i][i] = uinv[i][i] = 1;

  auto col_addmul = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (auto& row : m) row[dst] += k * row[src];
    for (auto& row : u) row[dst] += k * row[src];
    for (std::size_t c = 0; c < n; ++c) uinv[src][c] -= k * uinv[dst][c];
  };
  auto col_swap = [&](std::size_t a, std::size_t c) {
    for (auto& row : m) std::swap(row[a], row[c]);
    for (auto& row : u) std::swap(row[a], row[c]);
    std::swap(uinv[a], uinv[c]);
  };

  for (std::size_t r = 0; r < 2; ++r) {
    for (;;) {
      std::size_t piv = n;
      for (std::size_t c = r; c < n; ++c) {
        if (m[r][c] != 0 && (piv == n || std::abs(m[r][c]) < std::abs(m[r][piv]))) piv = c;
      }
      if (piv == n) break;
      col_swap(r, piv);
      bool done = true;
      for (std::size_t c = r + 1; c < n; ++c) {
        if (m[r][c] == 0) continue;
        col_addmul(c, r, -(m[r][c] / m[r][r]));
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
  }
  if (std::abs(m[0][0] * m[1][1]) != 1) {
    throw Error(ErrorCode::NotGaleDualizable, "vectors do not generate Z^2");
  }

  // Kernel basis: columns 2..n-1 of U. Coordinates of the all-ones vector.
  const std::size_t k = n - 2;
  std::vector<std::int64_t> c(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t col = 0; col < n; ++col) c[i] += uinv[i + 2][col];
  }
  // Row-reduce c to e_1, accumulating V^{-1} by columns so K V^{-1} has
  // the all-ones vector as first column.
  Matrix vinv(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) vinv[i][i] = 1;
  for (;;) {
    std::size_t piv = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] != 0 && (piv == k || std::abs(c[i]) < std::abs(c[piv]))) piv = i;
    }
    if (piv != 0) {
      std::swap(c[0], c[piv]);
      for (auto& row : vinv) std::swap(row[0], row[piv]);
    }
    bool done = true;
    for (std::size_t i = 1; i < k; ++i) {
      if (c[i] == 0) continue;
      const std::int64_t q = c[i] / c[0];
      c[i] -= q * c[0];
      for (auto& row : vinv) row[0] += q * row[i];
      if (c[i] != 0) done = false;
    }
    if (done) break;
  }
  if (c[0] < 0) {
    c[0] = -c[0];
    for (auto& row : vinv) row[0] = -row[0];
  }
  if (c[0] != 1) throw Error(ErrorCode::NotGaleDualizable, "all-ones vector is not primitive in the kernel");

  GaleDualA a;
  a.dim = k - 1;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVec pt(a.dim);
    for (std::size_t col = 1; col < k; ++col) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < k; ++t) s += u[i][t + 2] * vinv[t][col];
      pt[col - 1] = s;
    }
    a.points.push_back(std::move(pt));
  }

  // Canonical presentation: a_0 at the origin, row Hermite form, then shift
  // so every coordinate has minimum 0.
  const LatticeVec origin = a.points.front();
  for (auto& p : a.points) p -= origin;
  const std::size_t d = a.dim;
  std::size_t row = 0;
  for (std::size_t pcol = 0; pcol < n && row < d; ++pcol) {
    for (;;) {
      std::size_t piv = d;
      for (std::size_t r = row; r < d; ++r) {
        if (a.points[pcol][r] != 0 && (piv == d || std::abs(a.points[pcol][r]) < std::abs(a.points[pcol][piv]))) piv = r;
      }
      if (piv == d) break;
      if (piv != row) {
        for (auto& p : a.points) std::swap(p[row], p[piv]);
      }
      bool done = true;
      for (std::size_t r = row + 1; r < d; ++r) {
        if (a.points[pcol][r] == 0) continue;
        const std::int64_t q = a.points[pcol][r] / a.points[pcol][row];
        for (auto& p : a.points) p[r] -= q * p[row];
        if (a.points[pcol][r] != 0) done = false;
      }
      if (done) break;
    }
    if (a.points[pcol].size() > row && a.points[pcol][row] != 0) {
      if (a.points[pcol][row] < 0) {
        for (auto& p : a.points) p[row] = -p[row];
      }
      ++row;
    }
  }
  for (std::size_t r = 0; r < d; ++r) {
    std::int64_t lo = a.points.front()[r];
    for (const auto& p : a.points) lo = std::min(lo, p[r]);
    for (auto& p : a.points) p[r] -= lo;
  }
  return a;
}

std::int64_t normalized_volume(const GaleDualA& a) {
  std::vector<LatticeVec> pts = a.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t d = a.dim;
  if (d == 0) {
    if (pts.empty()) throw Error(ErrorCode::DegenerateHull, "no points");
    return 1;
  }
  if (affine_rank(pts) < d) throw Error(ErrorCode::DegenerateHull, "points do not span Z^" + std::to_string(d));

  // Regular triangulation from generic lifting heights: sum |det| over the
  // lower facets of the lifted point set.
  const std::size_t n = pts.size();
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<std::int64_t> height(0, std::int64_t{1} << 20);
  auto simplex_matrix = [&](const std::vector<std::size_t>& idx) {
    Matrix mat;
    for (auto s : idx) {
      std::vector<std::int64_t> r{1};
      r.insert(r.end(), pts[s].coords().begin(), pts[s].coords().end());
      mat.push_back(std::move(r));
    }
    return mat;
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::int64_t> h(n);
    for (auto& v : h) v = height(rng);
    __int128 total = 0;
    bool degenerate = false;

    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(d + 1), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) idx.push_back(i);
      }
      const Matrix mat = simplex_matrix(idx);
      const __int128 dm = determinant(mat);
      if (dm == 0) continue;
      bool lower = true;
      for (std::size_t kpt = 0; kpt < n && lower; ++kpt) {
        if (mask[kpt]) continue;
        // Sign of h_k - interp(a_k) via Cramer's rule for barycentric weights.
        __int128 acc = static_cast<__int128>(h[kpt]) * dm;
        for (std::size_t s = 0; s < idx.size(); ++s) {
          Matrix rep = mat;
          rep[s][0] = 1;
          for (std::size_t c = 0; c < d; ++c) rep[s][c + 1] = pts[kpt][c];
          acc -= determinant(rep) * h[idx[s]];
        }
        const int side = sgn128(acc) * sgn128(dm);
        if (side == 0) degenerate = true;
        if (side < 0) lower = false;
      }
      if (lower) total += dm < 0 ? -dm : dm;
    } while (!degenerate && std::prev_permutation(mask.begin(), mask.end()));
    if (!degenerate) return checked_narrow(total);
  }
  throw Error(ErrorCode::DegenerateHull, "could not find generic lifting heights");
}

}  // namespace coamoeba
