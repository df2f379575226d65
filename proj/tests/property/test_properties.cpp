#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coamoeba/degree_oracle.hpp"
#include "property/config_checks.hpp"

using namespace coamoeba;

namespace {

std::int64_t sq(const AffineForm& f) { return f.alpha * f.alpha + f.beta * f.beta; }

}  // namespace

TEST_CASE("random configurations satisfy every exact identity") {
  std::mt19937_64 rng(0xC0A);
  int configs = 0;
  for (std::size_t n = 2; n <= 7; ++n)
    for (int k = 0; k < 40; ++k) {
      const BConfig b = oracle::random_bconfig(rng, n);
      const std::size_t pivot = rng() % b.size();
      for (const std::string& msg : props::check_config(b, pivot, rng, 100)) FAIL_CHECK(msg);
      ++configs;
    }
  CHECK(configs >= 200);
}

TEST_CASE("every pivot of a configuration gives the same degree") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20; ++k) {
    const BConfig b = oracle::random_bconfig(rng, 3 + k % 3);
    for (std::size_t p = 0; p < b.size(); ++p)
      for (const std::string& msg : props::check_config(b, p, rng, 3)) FAIL_CHECK(msg);
  }
}

TEST_CASE("line structure on random forms") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const bool normalize = trial % 4 != 0;
    const AffineLine l = line_from_forms(oracle::random_forms(rng, 2 + trial % 6), {.normalize = normalize});
    CAPTURE(trial);

    // Feeding the ordered forms back in changes nothing.
    const AffineLine again = line_from_forms(l.forms, {.normalize = normalize});
    CHECK(again.forms == l.forms);
    CHECK(again.blocks == l.blocks);

    REQUIRE(l.forms.back() == AffineForm{0, 1});
    for (std::size_t j = 0; j + 1 < l.blocks.size(); ++j) CHECK(l.blocks[j].zeta < l.blocks[j + 1].zeta);
    CHECK(l.blocks.back().zeta.infinite);

    for (const Block& blk : l.blocks) {
      for (std::size_t k = blk.m; k < blk.m_next; ++k) {
        CHECK(zero_of_form(l.forms[k]) == blk.zeta);
        CHECK(l.signs[k] == l.signs[k < blk.n ? blk.m : blk.n]);
      }
      if (blk.mixed()) CHECK(l.signs[blk.m] != l.signs[blk.n]);
      if (normalize && blk.mixed() && !blk.zeta.infinite) {
        AffineForm first{}, second{};
        for (std::size_t k = blk.m; k < blk.n; ++k) first = {first.alpha + l.forms[k].alpha, first.beta + l.forms[k].beta};
        for (std::size_t k = blk.n; k < blk.m_next; ++k)
          second = {second.alpha + l.forms[k].alpha, second.beta + l.forms[k].beta};
        CHECK(sq(first) <= sq(second));
      }
    }

    // Signs between zeros match the coamoeba vertex on that interval.
    const CoamoebaSkeleton sk = coamoeba_vertices(l);
    for (std::size_t j = 0; j + 1 < l.blocks.size(); ++j) {
      const Rational t = j == 0 ? l.blocks[0].zeta.value - 1
                                : (l.blocks[j - 1].zeta.value + l.blocks[j].zeta.value) / 2;
      const LatticeVec p = sk.vertices[j].mod2();
      for (std::size_t i = 0; i < l.n(); ++i) CHECK((evaluate(l.forms[i], t).sign() < 0) == (p[i] == 1));
    }
  }
}

TEST_CASE("path identities on random forms") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 300; ++trial) {
    const AffineLine l = line_from_forms(oracle::random_forms(rng, 2 + trial % 6), {.normalize = trial % 3 != 0});
    CAPTURE(trial);
    const BlockVectors bv = block_vectors(l);
    const CoamoebaSkeleton sk = coamoeba_vertices(l);
    const ZonotopePath path = zonotope_path(l);
    const std::size_t m1 = l.blocks.size();
    REQUIRE(path.p.size() == 2 * m1);

    LatticeVec total(l.n());
    for (const auto& f : bv.f) total += f;
    CHECK(total.is_zero());

    for (std::size_t j = 0; j < m1; ++j) {
      const int s = l.signs[l.blocks[j].m];
      CHECK(bv.h[j] == s * (2 * bv.g[j] - bv.f[j]));
      for (std::int64_t c : bv.f[j].coords()) CHECK(std::abs(c) <= 1);
      CHECK(sk.vertices[j + 1 < sk.vertices.size() ? j + 1 : 0].mod2() == (sk.vertices[j] - bv.f[j]).mod2());
    }
    for (std::size_t j = 0; j < 2 * m1; ++j) {
      const LatticeVec expect = sk.vertices[j % m1].mod2();
      CHECK(path.p[j].mod2() == expect);
      CHECK(path.p_prime[j].mod2() == expect);
      if (j + 1 < 2 * m1) CHECK(path.p[j + 1] == path.p[j] + (j < m1 ? bv.h[j] : -bv.h[j - m1]));
      if (j < m1) {
        CHECK(path.p[j + m1] == -path.p[j]);
        CHECK(path.p_prime[j + m1] == -path.p_prime[j]);
        if (l.blocks[j].mixed()) CHECK(path.p[j + 1] == path.p_prime[j] - l.signs[l.blocks[j].m] * bv.f[j]);
      }
    }
    CHECK(verify_cycle(l).ok());
  }
}

TEST_CASE("zonotope symmetry and vertex count") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const BConfig b = oracle::random_bconfig(rng, 2 + trial % 6);
    const ZonotopeB z = zonotope_b(b);
    const std::set<Vec2> verts(z.vertices.begin(), z.vertices.end());
    for (Vec2 v : z.vertices) CHECK(verts.count(-v) == 1);
    std::set<Vec2> dirs;
    for (Vec2 v : b.vectors()) {
      Vec2 p = primitive(v);
      if (p.x < 0 || (p.x == 0 && p.y < 0)) p = -p;
      dirs.insert(p);
    }
    CHECK(z.vertices.size() == 2 * dirs.size());
  }
}

TEST_CASE("canonical pushed zonotope chain has the area of Z_B") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const BConfig b = oracle::random_bconfig(rng, 2 + trial % 6);
    const AffineLine l = line_from_bconfig(b, rng() % b.size());
    const TriangleChain pushed = pushforward_chain(zonotope_chain(zonotope_path(l)), pushforward_map(line_order(b, l)));
    std::int64_t signed_area2 = 0;
    for (const Triangle& t : pushed.triangles) {
      const Vec2 a{t.a[0], t.a[1]}, c1{t.b[0], t.b[1]}, c2{t.c[0], t.c[1]};
      signed_area2 += t.coefficient * det(c1 - a, c2 - a);
    }
    CHECK(signed_area2 == zonotope_b(b).area2());
  }
}

TEST_CASE("lattice translates of a loop do not change torus degrees") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const BConfig b = oracle::random_bconfig(rng, 2 + trial % 4);
    const AffineLine l = line_from_bconfig(b, 0);
    const CoamoebaLoops loops = coamoeba_loops(l, pushforward_map(line_order(b, l)));
    ClosedPolygon2 moved = loops.upper;
    const Vec2 shift{2 * static_cast<std::int64_t>(rng() % 7) - 6, 2 * static_cast<std::int64_t>(rng() % 7) - 6};
    for (Vec2& v : moved.vertices) v += shift;
    for (int k = 0; k < 5; ++k) {
      const TorusPoint2 t = random_torus_point(rng);
      std::int64_t here = 0, there = 0;
      try {
        here = torus_degree_polygon(loops.upper, t);
        there = torus_degree_polygon(moved, t);
      } catch (const Error&) {
        continue;
      }
      CHECK(here == there);
    }
  }
}

TEST_CASE("winding number is additive over concatenated loops") {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    ClosedPolygon2 a, b;
    for (int k = 0; k < 4; ++k) a.vertices.push_back({c(rng), c(rng)});
    b.vertices.push_back(a.vertices.front());
    for (int k = 0; k < 3; ++k) b.vertices.push_back({c(rng), c(rng)});
    ClosedPolygon2 both = a;
    both.vertices.push_back(a.vertices.front());
    both.vertices.insert(both.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    const RatVec2 pt{Rational(2 * c(rng) + 1, 7), Rational(2 * c(rng) + 1, 9)};
    std::int64_t wa = 0, wb = 0, wboth = 0;
    try {
      wa = winding_number(a, pt);
      wb = winding_number(b, pt);
      wboth = winding_number(both, pt);
    } catch (const Error&) {
      continue;
    }
    CHECK(wboth == wa + wb);
  }
}
