#pragma once

// Test-only reference computations. None of these share code paths with the
// library beyond the basic value types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "coamoeba/bconfig.hpp"
#include "coamoeba/line_model.hpp"
#include "coamoeba/rational.hpp"

namespace oracle {

using coamoeba::AffineForm;
using coamoeba::Rational;
using coamoeba::Vec2;

inline __int128 cross(Vec2 o, Vec2 a, Vec2 b) {
  return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

/// Strict convex hull vertices (no collinear points), counterclockwise from the lowest-leftmost.
inline std::vector<Vec2> hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline std::int64_t area2(const std::vector<Vec2>& poly) {
  __int128 s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % poly.size()];
    s += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
  }
  return static_cast<std::int64_t>(s < 0 ? -s : s);
}

/// Hull of all 2^(N+1) subset sums.
inline std::vector<Vec2> brute_zonotope(const std::vector<Vec2>& b) {
  std::vector<Vec2> sums;
  for (std::uint32_t mask = 0; mask < (1u << b.size()); ++mask) {
    Vec2 s{};
    for (std::size_t i = 0; i < b.size(); ++i)
      if (mask & (1u << i)) s += b[i];
    sums.push_back(s);
  }
  return hull(sums);
}

/// Σ |det(b_i, b_j)| over pairs with v = s b_i + t b_j, s, t > 0, solved by Cramer's rule.
inline std::int64_t cone_sum(const std::vector<Vec2>& b, Vec2 v) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const std::int64_t d = b[i].x * b[j].y - b[i].y * b[j].x;
      if (d == 0) continue;
      const Rational s(v.x * b[j].y - v.y * b[j].x, d);
      const Rational t(b[i].x * v.y - b[i].y * v.x, d);
      if (s > 0 && t > 0) total += d < 0 ? -d : d;
    }
  return total;
}

/// Integer determinant by fraction-free elimination with pivoting.
inline std::int64_t int_det(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

/// gcd of all maximal minors of a tall matrix (rows >= cols).
inline std::int64_t maximal_minor_gcd(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  std::vector<bool> pick(r, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(c), true);
  std::int64_t g = 0;
  do {
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t i = 0; i < r; ++i)
      if (pick[i]) sub.push_back(rows[i]);
    g = std::gcd(g, int_det(sub));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

/// Winding count of the image of the boundary of the upper half-plane under
/// z ↦ Σ_{i<N} b_i·arg(form_i(z))/π about every lift θ + 2k. The boundary is
/// the line Im z = eps from -R to R followed by the half circle |z| = R.
/// Returns nullopt when θ is too close to the traced curve.
class HalfPlaneWinding {
 public:
  HalfPlaneWinding(std::vector<AffineForm> forms, std::vector<Vec2> b) : forms_(std::move(forms)), b_(std::move(b)) {
    b_.resize(forms_.size() - 1);
  }

  std::optional<std::int64_t> degree(double tx, double ty) const {
    double bound = 1.0;
    for (Vec2 v : b_) bound += std::abs(static_cast<double>(v.x)) + std::abs(static_cast<double>(v.y));
    targets_.clear();
    for (int kx = -static_cast<int>(bound) - 2; kx <= static_cast<int>(bound) + 2; ++kx)
      for (int ky = -static_cast<int>(bound) - 2; ky <= static_cast<int>(bound) + 2; ++ky)
        if (std::abs(tx + 2 * kx) <= bound && std::abs(ty + 2 * ky) <= bound) targets_.push_back({tx + 2 * kx, ty + 2 * ky});
    angle_.assign(targets_.size(), 0.0);
    ok_ = true;

    std::vector<double> nodes{-kR, kR};
    for (const AffineForm& f : forms_) {
      if (f.alpha == 0) continue;
      const double z = -static_cast<double>(f.beta) / static_cast<double>(f.alpha);
      nodes.push_back(z);
      for (double d = 1e-9; d < 1e3; d *= 4) {
        nodes.push_back(z - d);
        nodes.push_back(z + d);
      }
    }
    for (double d = 1.0; d < kR; d *= 2) {
      nodes.push_back(d);
      nodes.push_back(-d);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::remove_if(nodes.begin(), nodes.end(), [](double t) { return std::abs(t) > kR; }), nodes.end());
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) walk(line_point(nodes[k]), line_point(nodes[k + 1]), nodes[k], nodes[k + 1], true, 0);
    for (int k = 0; k < 4096; ++k) {
      const double a0 = M_PI * k / 4096.0;
      const double a1 = M_PI * (k + 1) / 4096.0;
      walk(arc_point(a0), arc_point(a1), a0, a1, false, 0);
    }
    if (!ok_) return std::nullopt;
    double total = 0;
    for (double a : angle_) total += a;
    return static_cast<std::int64_t>(std::llround(total / (2 * M_PI)));
  }

 private:
  struct Pt {
    double x, y;
  };
  static constexpr double kR = 1e6;
  static constexpr double kEps = 1e-11;

  Pt image(double re, double im) const {
    Pt p{0, 0};
    for (std::size_t i = 0; i < b_.size(); ++i) {
      const double u = forms_[i].alpha * re + forms_[i].beta;
      const double v = forms_[i].alpha * im;
      const double a = std::atan2(v, u) / M_PI;
      p.x += b_[i].x * a;
      p.y += b_[i].y * a;
    }
    return p;
  }
  Pt line_point(double t) const { return image(t, kEps); }
  Pt arc_point(double a) const { return image(kR * std::cos(a), kR * std::sin(a)); }

  void walk(Pt p, Pt q, double s0, double s1, bool on_line, int depth) const {
    const double step = std::hypot(q.x - p.x, q.y - p.y);
    double near = 1e300;
    for (const Pt& t : targets_) near = std::min(near, std::min(std::hypot(p.x - t.x, p.y - t.y), std::hypot(q.x - t.x, q.y - t.y)));
    if (step > 0.02 || step > 0.25 * near) {
      if (depth > 80) {
        ok_ = false;
        return;
      }
      const double sm = 0.5 * (s0 + s1);
      const Pt m = on_line ? line_point(sm) : arc_point(sm);
      walk(p, m, s0, sm, on_line, depth + 1);
      walk(m, q, sm, s1, on_line, depth + 1);
      return;
    }
    if (near < 1e-6) ok_ = false;
    for (std::size_t k = 0; k < targets_.size(); ++k) {
      const double a = std::atan2(p.y - targets_[k].y, p.x - targets_[k].x);
      const double b = std::atan2(q.y - targets_[k].y, q.x - targets_[k].x);
      double d = b - a;
      while (d > M_PI) d -= 2 * M_PI;
      while (d <= -M_PI) d += 2 * M_PI;
      angle_[k] += d;
    }
  }

  std::vector<AffineForm> forms_;
  std::vector<Vec2> b_;
  mutable std::vector<Pt> targets_;
  mutable std::vector<double> angle_;
  mutable bool ok_ = true;
};

/// Random valid configuration with n + 1 vectors and small coordinates.
inline coamoeba::BConfig random_bconfig(std::mt19937_64& rng, std::size_t n, int range = 3) {
  std::uniform_int_distribution<int> coord(-range, range);
  for (;;) {
    std::vector<Vec2> v;
    Vec2 sum{};
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 w{coord(rng), coord(rng)};
      while (w.is_zero()) w = {coord(rng), coord(rng)};
      v.push_back(w);
      sum += w;
    }
    if (sum.is_zero()) continue;
    v.push_back(-sum);
    bool rank2 = false;
    for (std::size_t i = 1; i < v.size(); ++i) rank2 = rank2 || (v[0].x * v[i].y - v[0].y * v[i].x != 0);
    if (!rank2) continue;
    std::shuffle(v.begin(), v.end(), rng);
    return coamoeba::validate_bconfig(v);
  }
}

/// Random n + 1 forms with at least two distinct zeros and a positive constant somewhere.
inline std::vector<AffineForm> random_forms(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    std::vector<AffineForm> f;
    for (std::size_t i = 0; i < n; ++i) {
      AffineForm a{coef(rng), coef(rng)};
      while (a.alpha == 0 && a.beta == 0) a = {coef(rng), coef(rng)};
      f.push_back(a);
    }
    f.push_back({0, 1 + static_cast<int>(rng() % 3)});
    std::set<std::pair<std::int64_t, std::int64_t>> zeros;
    for (const AffineForm& a : f) {
      if (a.alpha == 0) continue;
      const std::int64_t g = std::gcd(a.alpha, a.beta);
      std::int64_t num = -a.beta / g, den = a.alpha / g;
      if (den < 0) num = -num, den = -den;
      zeros.insert({num, den});
    }
    if (zeros.empty()) continue;
    std::shuffle(f.begin(), f.end(), rng);
    return f;
  }
}

}  // namespace oracle
