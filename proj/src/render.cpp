#include "coamoeba/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "coamoeba/degree_oracle.hpp"
#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

constexpr std::int64_t kUnit = 100;        // SVG units per π
constexpr std::int64_t kLegendWidth = 80;  // extra canvas to the right

// Query offsets as fractions of a cell, tried in order.
constexpr std::array<std::array<int, 2>, 9> kOffsets{{{0, 0}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}, {3, 1}, {1, 3},
                                                      {-3, -1}, {-1, -3}}};
constexpr int kOffsetDen = 8;

struct Ramp {
  std::array<const char*, 4> shades;
  const char* negative;
};

Ramp palette(const std::string& name) {
  if (name == "gray") return {{"#d9d9d9", "#a6a6a6", "#737373", "#404040"}, "#e34a33"};
  if (name == "blue") return {{"#c6dbef", "#6baed6", "#2171b5", "#08306b"}, "#e34a33"};
  throw Error(ErrorCode::SemanticError, "unknown palette '" + name + "'");
}

const char* shade(const Ramp& ramp, std::int64_t value) {
  if (value < 0) return ramp.negative;
  return ramp.shades[static_cast<std::size_t>(std::min<std::int64_t>(value, 4) - 1)];
}

void check_options(const RenderOptions& opts, const Window& w) {
  if (opts.resolution < 16) throw Error(ErrorCode::SemanticError, "resolution must be at least 16");
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw Error(ErrorCode::SemanticError, "empty render window");
  palette(opts.palette);
}

template <class F>
DegreeGrid query_grid(const Window& w, int res, F f) {
  const Rational hx = (w.x1 - w.x0) / res;
  const Rational hy = (w.y1 - w.y0) / res;
  DegreeGrid grid(static_cast<std::size_t>(res), std::vector<std::optional<std::int64_t>>(static_cast<std::size_t>(res)));
  for (int r = 0; r < res; ++r) {
    for (int c = 0; c < res; ++c) {
      const Rational cx = w.x0 + hx * c + hx / 2;
      const Rational cy = w.y1 - hy * r - hy / 2;
      for (const auto& off : kOffsets) {
        try {
          grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              f(RatVec2{cx + hx * Rational(off[0], kOffsetDen), cy + hy * Rational(off[1], kOffsetDen)});
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::PointOnBoundary) throw;
        }
      }
    }
  }
  return grid;
}

class Svg {
 public:
  Svg(const Window& w, const std::string& title) : w_(w) {
    const Rational width = (w.x1 - w.x0) * kUnit + kLegendWidth;
    const Rational height = (w.y1 - w.y0) * kUnit;
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed_decimal(width)
        << "\" height=\"" << fixed_decimal(height) << "\" viewBox=\"0 0 " << fixed_decimal(width) << ' '
        << fixed_decimal(height) << "\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fixed_decimal(width) << "\" height=\"" << fixed_decimal(height)
        << "\" fill=\"#ffffff\"/>\n";
  }

  std::string sx(const Rational& x) const { return fixed_decimal((x - w_.x0) * kUnit); }
  std::string sy(const Rational& y) const { return fixed_decimal((w_.y1 - y) * kUnit); }

  void cells(const DegreeGrid& grid, const Ramp& ramp) {
    const int res = static_cast<int>(grid.size());
    const Rational hx = (w_.x1 - w_.x0) / res;
    const Rational hy = (w_.y1 - w_.y0) / res;
    os_ << "<g id=\"cells\" stroke=\"none\">\n";
    for (int r = 0; r < res; ++r) {
      const auto& row = grid[static_cast<std::size_t>(r)];
      for (int c = 0; c < res;) {
        const auto value = row[static_cast<std::size_t>(c)];
        int end = c + 1;
        while (end < res && row[static_cast<std::size_t>(end)] == value) ++end;
        if (value && *value != 0) {
          os_ << "<rect x=\"" << sx(w_.x0 + hx * c) << "\" y=\"" << sy(w_.y1 - hy * r) << "\" width=\""
              << fixed_decimal(hx * (end - c) * kUnit) << "\" height=\"" << fixed_decimal(hy * kUnit) << "\" fill=\""
              << shade(ramp, *value) << "\" data-degree=\"" << *value << "\"/>\n";
        }
        c = end;
      }
    }
    os_ << "</g>\n";
  }

  void integer_lines() {
    os_ << "<g id=\"grid\" stroke=\"#808080\" stroke-width=\"0.4\" stroke-dasharray=\"2 2\" fill=\"none\">\n";
    for (std::int64_t k = w_.x0.floor(); k <= w_.x1.floor(); ++k) {
      if (Rational(k) <= w_.x0 || Rational(k) >= w_.x1) continue;
      os_ << "<line x1=\"" << sx(k) << "\" y1=\"" << sy(w_.y1) << "\" x2=\"" << sx(k) << "\" y2=\"" << sy(w_.y0)
          << "\"/>\n";
    }
    for (std::int64_t k = w_.y0.floor(); k <= w_.y1.floor(); ++k) {
      if (Rational(k) <= w_.y0 || Rational(k) >= w_.y1) continue;
      os_ << "<line x1=\"" << sx(w_.x0) << "\" y1=\"" << sy(k) << "\" x2=\"" << sx(w_.x1) << "\" y2=\"" << sy(k)
          << "\"/>\n";
    }
    os_ << "</g>\n";
  }

  // Segments clipped to the window; with `wrap`, every 2Z^2 translate too.
  void segments(const std::string& id, const char* stroke, const char* width,
                const std::vector<std::pair<Vec2, Vec2>>& segs, bool wrap) {
    std::ostringstream d;
    for (const auto& [a, b] : segs) {
      std::int64_t kx0 = 0, kx1 = 0, ky0 = 0, ky1 = 0;
      if (wrap) {
        kx0 = ((w_.x0 - std::max(a.x, b.x)) / 2).floor();
        kx1 = ((w_.x1 - std::min(a.x, b.x)) / 2).floor() + 1;
        ky0 = ((w_.y0 - std::max(a.y, b.y)) / 2).floor();
        ky1 = ((w_.y1 - std::min(a.y, b.y)) / 2).floor() + 1;
      }
      for (std::int64_t kx = kx0; kx <= kx1; ++kx) {
        for (std::int64_t ky = ky0; ky <= ky1; ++ky) {
          const Vec2 shift{2 * kx, 2 * ky};
          clip_into(d, a + shift, b + shift);
        }
      }
    }
    if (d.str().empty()) return;
    os_ << "<g id=\"" << id << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\" stroke-linecap=\"round\">\n<path d=\"" << d.str() << "\"/>\n</g>\n";
  }

  void label(Vec2 p, const std::string& base, std::size_t index, bool primed) {
    os_ << "<text x=\"" << fixed_decimal((Rational(p.x) - w_.x0) * kUnit + 3) << "\" y=\""
        << fixed_decimal((w_.y1 - Rational(p.y)) * kUnit - 3)
        << "\" font-family=\"serif\" font-size=\"9\" fill=\"#000000\">" << base << "<tspan font-size=\"6\" dy=\"2\">"
        << index << "</tspan>" << (primed ? "<tspan dy=\"-2\">′</tspan>" : "") << "</text>\n";
  }

  void open_group(const std::string& id) { os_ << "<g id=\"" << id << "\">\n"; }
  void close_group() { os_ << "</g>\n"; }

  void legend(const DegreeGrid& grid, const Ramp& ramp, const std::string& caption) {
    std::vector<std::int64_t> values;
    for (const auto& row : grid) {
      for (const auto& v : row) {
        if (v && *v != 0) values.push_back(*v);
      }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const Rational left = (w_.x1 - w_.x0) * kUnit + 8;
    os_ << "<g id=\"legend\" font-family=\"serif\" font-size=\"8\">\n"
        << "<text x=\"" << fixed_decimal(left) << "\" y=\"12\">" << caption << "</text>\n";
    std::int64_t y = 20;
    for (auto v : values) {
      os_ << "<rect x=\"" << fixed_decimal(left) << "\" y=\"" << y << "\" width=\"10\" height=\"10\" fill=\""
          << shade(ramp, v) << "\" stroke=\"#000000\" stroke-width=\"0.3\" data-degree=\"" << v << "\"/>\n"
          << "<text x=\"" << fixed_decimal(left + 14) << "\" y=\"" << y + 8 << "\">" << v << "</text>\n";
      y += 14;
    }
    os_ << "</g>\n";
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  void clip_into(std::ostringstream& d, Vec2 a, Vec2 b) const {
    Rational t0 = 0;
    Rational t1 = 1;
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    auto edge = [&](const Rational& p, const Rational& q) {
      // Keep the part where p·t <= q.
      if (p == 0) return q >= 0;
      const Rational t = q / p;
      if (p < 0) {
        if (t > t1) return false;
        if (t > t0) t0 = t;
      } else {
        if (t < t0) return false;
        if (t < t1) t1 = t;
      }
      return true;
    };
    if (!edge(-dx, Rational(a.x) - w_.x0) || !edge(dx, w_.x1 - a.x) || !edge(-dy, Rational(a.y) - w_.y0) ||
        !edge(dy, w_.y1 - a.y) || !(t0 < t1)) {
      return;
    }
    const Rational ax = Rational(a.x) + dx * t0, ay = Rational(a.y) + dy * t0;
    const Rational bx = Rational(a.x) + dx * t1, by = Rational(a.y) + dy * t1;
    d << (d.tellp() > 0 ? " " : "") << "M" << sx(ax) << ' ' << sy(ay) << " L" << sx(bx) << ' ' << sy(by);
  }

  Window w_;
  std::ostringstream os_;
};

std::vector<std::pair<Vec2, Vec2>> polygon_segments(const std::vector<Vec2>& v) {
  std::vector<std::pair<Vec2, Vec2>> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != v[(k + 1) % v.size()]) out.emplace_back(v[k], v[(k + 1) % v.size()]);
  }
  return out;
}

Window fit_window(const std::vector<Vec2>& pts) {
  std::int64_t xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  for (Vec2 p : pts) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  return {xlo - 1, ylo - 1, xhi + 1, yhi + 1};
}

struct PlanarPath {
  std::vector<Vec2> points;  ///< in P(ℓ) order
  std::vector<PathPoint> meta;
  TriangleChain chain;
};

PlanarPath planar(const ZonotopePath& path, const LinearMap2& map) {
  if (path.dim() != map.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "path lives in Z^" + std::to_string(path.dim()) + ", map expects Z^" +
                                                  std::to_string(map.dim()));
  }
  PlanarPath out;
  out.meta = path.points();
  for (const auto& pp : out.meta) out.points.push_back(map.apply(pp.point));
  out.chain = pushforward_chain(zonotope_chain(path), map);
  return out;
}

LinearMap2 identity2() { return LinearMap2{{Vec2{1, 0}, Vec2{0, 1}}}; }

}  // namespace

std::string fixed_decimal(const Rational& r, int places) {
  std::int64_t scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  const Rational scaled = r * scale + Rational(1, 2);
  const std::int64_t q = scaled.floor();
  const bool negative = q < 0;
  const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-q) : static_cast<std::uint64_t>(q);
  std::string whole = std::to_string(mag / static_cast<std::uint64_t>(scale));
  std::string frac = std::to_string(mag % static_cast<std::uint64_t>(scale));
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

DegreeGrid torus_degree_grid(const AffineLine& line, const BConfig& b, const RenderOptions& opts) {
  const Window w = opts.window.value_or(Window{});
  check_options(opts, w);
  const CoamoebaLoops loops = coamoeba_loops(line, pushforward_map(line_order(b, line)));
  return query_grid(w, opts.resolution, [&](const RatVec2& p) {
    const TorusPoint2 theta = TorusPoint2::reduced(p.x, p.y);
    return torus_degree_polygon(loops.upper, theta) + torus_degree_polygon(loops.lower, theta);
  });
}

std::string render_torus(const AffineLine& line, const BConfig& b, const RenderOptions& opts) {
  const Window w = opts.window.value_or(Window{});
  const DegreeGrid grid = torus_degree_grid(line, b, opts);
  const Ramp ramp = palette(opts.palette);
  const CoamoebaLoops loops = coamoeba_loops(line, pushforward_map(line_order(b, line)));

  Svg svg(w, "coamoeba multiplicity on the fundamental domain");
  svg.cells(grid, ramp);
  svg.integer_lines();
  svg.segments("zonotope", "#000000", "0.8", polygon_segments(zonotope_b(b).vertices), true);
  auto loop_segs = polygon_segments(loops.upper.vertices);
  const auto lower = polygon_segments(loops.lower.vertices);
  loop_segs.insert(loop_segs.end(), lower.begin(), lower.end());
  svg.segments("boundary", "#b2182b", "1", loop_segs, true);
  svg.legend(grid, ramp, "multiplicity");
  return svg.finish();
}

DegreeGrid cover_coverage_grid(const ZonotopePath& path, const LinearMap2& map, const RenderOptions& opts) {
  const PlanarPath pp = planar(path, map);
  const Window w = opts.window.value_or(fit_window(pp.points));
  check_options(opts, w);
  return query_grid(w, opts.resolution, [&](const RatVec2& p) { return plane_coverage_triangles(pp.chain, p); });
}

std::string render_cover(const ZonotopePath& path, const LinearMap2& map, const RenderOptions& opts) {
  const PlanarPath pp = planar(path, map);
  const Window w = opts.window.value_or(fit_window(pp.points));
  RenderOptions resolved = opts;
  resolved.window = w;
  const DegreeGrid grid = cover_coverage_grid(path, map, resolved);
  const Ramp ramp = palette(opts.palette);

  Svg svg(w, "image of the zonotope chain");
  svg.cells(grid, ramp);
  svg.integer_lines();
  std::vector<std::pair<Vec2, Vec2>> spokes;
  for (Vec2 p : pp.points) {
    if (!p.is_zero()) spokes.emplace_back(Vec2{}, p);
  }
  svg.segments("spokes", "#606060", "0.4", spokes, false);
  svg.segments("path", "#000000", "1", polygon_segments(pp.points), false);
  if (opts.labels) {
    svg.open_group("labels");
    for (std::size_t k = 0; k < pp.points.size(); ++k) {
      const PathPoint& m = pp.meta[k];
      // A primed point equal to its unprimed partner carries no extra label.
      if (m.primed && pp.points[k] == pp.points[k + 1]) continue;
      svg.label(pp.points[k], "q̃", m.j, m.primed);
    }
    svg.close_group();
  }
  svg.legend(grid, ramp, "coverage");
  return svg.finish();
}

std::string render_cover(const ZonotopePath& path, const RenderOptions& opts) {
  return render_cover(path, identity2(), opts);
}

}  // namespace coamoeba
