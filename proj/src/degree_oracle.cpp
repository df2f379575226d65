#include "coamoeba/degree_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

using i128 = __int128;

int sgn(i128 v) noexcept { return (v > 0) - (v < 0); }

i128 floor_div(i128 a, i128 b) noexcept {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) noexcept { return -floor_div(-a, b); }

// The point (X/D, Y/D) with D > 0.
struct Scaled {
  i128 x;
  i128 y;
  i128 d;
};

Scaled scale(const Rational& x, const Rational& y) {
  const i128 d = static_cast<i128>(x.den()) / gcd64(x.den(), y.den()) * y.den();
  return {static_cast<i128>(x.num()) * (d / x.den()), static_cast<i128>(y.num()) * (d / y.den()), d};
}

// Sign of det(b - a, p - a), scaled by D.
int orient(Vec2 a, Vec2 b, const Scaled& p) noexcept {
  return sgn(static_cast<i128>(b.x - a.x) * (p.y - a.y * p.d) - static_cast<i128>(b.y - a.y) * (p.x - a.x * p.d));
}

bool within_box(Vec2 a, Vec2 b, const Scaled& p) noexcept {
  return p.x >= std::min(a.x, b.x) * p.d && p.x <= std::max(a.x, b.x) * p.d && p.y >= std::min(a.y, b.y) * p.d &&
         p.y <= std::max(a.y, b.y) * p.d;
}

void check_off_segment(Vec2 a, Vec2 b, const Scaled& p) {
  if (orient(a, b, p) == 0 && within_box(a, b, p)) {
    throw Error(ErrorCode::PointOnBoundary, "query point lies on a chain edge");
  }
}

std::int64_t winding_scaled(const std::vector<Vec2>& v, const Scaled& p) {
  std::int64_t w = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Vec2 a = v[k];
    const Vec2 b = v[(k + 1) % v.size()];
    if (a == b) continue;
    check_off_segment(a, b, p);
    const bool a_below = a.y * p.d <= p.y;
    const bool b_below = b.y * p.d <= p.y;
    if (a_below && !b_below && orient(a, b, p) > 0) ++w;
    if (!a_below && b_below && orient(a, b, p) < 0) --w;
  }
  return w;
}

// Translates k with x + 2k in [lo, hi] (all scaled by d).
std::pair<i128, i128> translate_range(i128 x, i128 d, std::int64_t lo, std::int64_t hi) {
  return {ceil_div(lo * d - x, 2 * d), floor_div(hi * d - x, 2 * d)};
}

template <class F>
std::int64_t sum_over_lifts(const std::vector<Vec2>& pts, const TorusPoint2& theta, F f) {
  if (pts.empty()) return 0;
  std::int64_t xlo = pts[0].x, xhi = pts[0].x, ylo = pts[0].y, yhi = pts[0].y;
  for (Vec2 q : pts) {
    xlo = std::min(xlo, q.x);
    xhi = std::max(xhi, q.x);
    ylo = std::min(ylo, q.y);
    yhi = std::max(yhi, q.y);
  }
  const Scaled p = scale(theta.x, theta.y);
  const auto [kx0, kx1] = translate_range(p.x, p.d, xlo, xhi);
  const auto [ky0, ky1] = translate_range(p.y, p.d, ylo, yhi);
  std::int64_t total = 0;
  for (i128 kx = kx0; kx <= kx1; ++kx) {
    for (i128 ky = ky0; ky <= ky1; ++ky) total += f(Scaled{p.x + 2 * kx * p.d, p.y + 2 * ky * p.d, p.d});
  }
  return total;
}

// Orientation-signed containment of p in triangle abc; 0 when collinear.
int triangle_contains(Vec2 a, Vec2 b, Vec2 c, const Scaled& p) {
  const i128 area = static_cast<i128>(det(b - a, c - a));
  if (area == 0) return 0;
  check_off_segment(a, b, p);
  check_off_segment(b, c, p);
  check_off_segment(c, a, p);
  const int o = sgn(area);
  return (orient(a, b, p) == o && orient(b, c, p) == o && orient(c, a, p) == o) ? o : 0;
}

Vec2 as_vec2(const LatticeVec& v) {
  if (v.size() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a planar chain");
  return {v[0], v[1]};
}

std::uint64_t splitmix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double reduce_pi_units(double v) {
  double r = std::fmod(v + 1.0, 2.0);
  if (r < 0) r += 2.0;
  return r - 1.0;
}

// Euclidean distance (π-units) from p to the segment ab.
double segment_distance(double px, double py, Vec2 a, Vec2 b) {
  const double dx = static_cast<double>(b.x - a.x);
  const double dy = static_cast<double>(b.y - a.y);
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - a.x) * dx + (py - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (a.x + t * dx), py - (a.y + t * dy));
}

double torus_distance_to_polygon(double px, double py, const ClosedPolygon2& poly) {
  double best = std::numeric_limits<double>::infinity();
  const auto& v = poly.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Vec2 a = v[k];
    const Vec2 b = v[(k + 1) % v.size()];
    const double xlo = std::min(a.x, b.x) - 1.0, xhi = std::max(a.x, b.x) + 1.0;
    const double ylo = std::min(a.y, b.y) - 1.0, yhi = std::max(a.y, b.y) + 1.0;
    for (double tx = px + 2.0 * std::ceil((xlo - px) / 2.0); tx <= xhi; tx += 2.0) {
      for (double ty = py + 2.0 * std::ceil((ylo - py) / 2.0); ty <= yhi; ty += 2.0) {
        best = std::min(best, segment_distance(tx, ty, a, b));
      }
    }
  }
  return best;
}

}  // namespace

TorusPoint2 TorusPoint2::reduced(const Rational& x, const Rational& y) {
  auto wrap = [](const Rational& v) {
    const Rational shifted = (v + 1) / 2;
    return v - Rational(2 * shifted.floor());
  };
  return {wrap(x), wrap(y)};
}

std::int64_t winding_number(const ClosedPolygon2& poly, const RatVec2& pt) {
  return winding_scaled(poly.vertices, scale(pt.x, pt.y));
}

std::int64_t torus_degree_polygon(const ClosedPolygon2& poly, const TorusPoint2& theta) {
  return sum_over_lifts(poly.vertices, theta, [&](const Scaled& p) { return winding_scaled(poly.vertices, p); });
}

std::int64_t torus_degree_triangles(const TriangleChain& chain, const TorusPoint2& theta) {
  std::int64_t total = 0;
  for (const Triangle& t : chain.triangles) {
    const Vec2 a = as_vec2(t.a), b = as_vec2(t.b), c = as_vec2(t.c);
    if (det(b - a, c - a) == 0) continue;
    total += t.coefficient *
             sum_over_lifts({a, b, c}, theta, [&](const Scaled& p) { return std::int64_t{triangle_contains(a, b, c, p)}; });
  }
  return total;
}

std::int64_t plane_coverage_triangles(const TriangleChain& chain, const RatVec2& pt) {
  const Scaled p = scale(pt.x, pt.y);
  std::int64_t total = 0;
  for (const Triangle& t : chain.triangles) {
    if (triangle_contains(as_vec2(t.a), as_vec2(t.b), as_vec2(t.c), p) != 0) ++total;
  }
  return total;
}

CoamoebaLoops coamoeba_loops(const AffineLine& line, const LinearMap2& map) {
  const CoamoebaSkeleton skel = coamoeba_vertices(line);
  const Vec2 start = map.apply(skel.vertices.front());
  CoamoebaLoops loops;
  Vec2 up = start;
  Vec2 down = start;
  for (std::size_t j = 0; j < skel.f.size(); ++j) {
    loops.upper.vertices.push_back(up);
    loops.lower.vertices.push_back(down);
    const Vec2 c = map.apply(skel.f[j]);
    up = up - c;
    down = down + c;
  }
  return loops;
}

std::int64_t coamoeba_degree(const AffineLine& line, const LinearMap2& map, const TorusPoint2& theta) {
  const CoamoebaLoops loops = coamoeba_loops(line, map);
  return torus_degree_polygon(loops.upper, theta) + torus_degree_polygon(loops.lower, theta);
}

std::int64_t coamoeba_degree(const AffineLine& line, const BConfig& b, const TorusPoint2& theta) {
  return coamoeba_degree(line, pushforward_map(line_order(b, line)), theta);
}

TriangleChain pushed_zonotope_chain(const AffineLine& line, const LinearMap2& map) {
  return pushforward_chain(zonotope_chain(zonotope_path(line)), map);
}

std::int64_t cycle_degree(const AffineLine& line, const LinearMap2& map, const TorusPoint2& theta) {
  return coamoeba_degree(line, map, theta) + torus_degree_triangles(pushed_zonotope_chain(line, map), theta);
}

std::int64_t cycle_degree(const AffineLine& line, const BConfig& b, const TorusPoint2& theta) {
  return cycle_degree(line, pushforward_map(line_order(b, line)), theta);
}

TorusPoint2 random_torus_point(std::mt19937_64& rng) {
  auto draw = [&]() {
    const std::int64_t den = 7 + 2 * static_cast<std::int64_t>(rng() % 125);
    const std::int64_t num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * den)) - den;
    return Rational(num, den);
  };
  const Rational x = draw();
  const Rational y = draw();
  return TorusPoint2::reduced(x, y);
}

std::int64_t at_generic_point(std::mt19937_64& rng, const std::function<std::int64_t(const TorusPoint2&)>& f,
                              TorusPoint2* used) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const TorusPoint2 theta = random_torus_point(rng);
    try {
      const std::int64_t value = f(theta);
      if (used) *used = theta;
      return value;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PointOnBoundary) throw;
    }
  }
  throw Error(ErrorCode::PointOnBoundary, "no generic point found");
}

std::int64_t class_oracle_2d(const AffineLine& line, std::size_t i, std::size_t j) {
  const LinearMap2 map = coordinate_projection(line.n(), i, j);
  std::mt19937_64 rng(splitmix((static_cast<std::uint64_t>(i) << 32) ^ j));
  return at_generic_point(rng, [&](const TorusPoint2& theta) { return cycle_degree(line, map, theta); });
}

SampleReport sample_coamoeba(const AffineLine& line, const BConfig& b, std::size_t count, std::uint64_t seed) {
  const BConfig ordered = line_order(b, line);
  const LinearMap2 map = pushforward_map(ordered);
  const CoamoebaLoops loops = coamoeba_loops(line, map);
  constexpr double kTolerance = 1e-6;  // radians
  constexpr std::int64_t kDen = (std::int64_t{1} << 40) + 1;

  SampleReport report;
  for (std::size_t k = 0; k < count; ++k) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(k)));
    const double x = std::tan(M_PI * (unit(rng) - 0.5));
    const double y = std::pow(10.0, -3.0 + 6.0 * unit(rng));
    const std::complex<double> z(x, y);
    double tx = 0;
    double ty = 0;
    for (std::size_t i = 0; i < line.n(); ++i) {
      const double a = std::arg(static_cast<double>(line.forms[i].alpha) * z + static_cast<double>(line.forms[i].beta));
      tx += ordered[i].x * a;
      ty += ordered[i].y * a;
    }
    tx = reduce_pi_units(tx / M_PI);
    ty = reduce_pi_units(ty / M_PI);
    report.points.push_back({tx, ty});

    const double dist =
        std::min(torus_distance_to_polygon(tx, ty, loops.upper), torus_distance_to_polygon(tx, ty, loops.lower)) * M_PI;
    if (dist <= kTolerance) {
      ++report.skipped;
      continue;
    }
    const TorusPoint2 theta = TorusPoint2::reduced(Rational(std::llround(tx * static_cast<double>(kDen)), kDen),
                                                   Rational(std::llround(ty * static_cast<double>(kDen)), kDen));
    ++report.checked;
    std::int64_t degree = 0;
    try {
      degree = coamoeba_degree(line, map, theta);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PointOnBoundary) throw;
    }
    if (degree < 1) report.violations.push_back({k, theta, degree});
  }
  return report;
}

}  // namespace coamoeba
