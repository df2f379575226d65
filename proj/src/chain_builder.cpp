#include "coamoeba/chain_builder.hpp"

#include "coamoeba/error.hpp"

namespace coamoeba {

BlockVectors block_vectors(const AffineLine& line) {
  const std::size_t n = line.n();
  BlockVectors out;
  for (const Block& blk : line.blocks) {
    LatticeVec f(n);
    LatticeVec g(n);
    LatticeVec h(n);
    for (std::size_t k = blk.m; k < blk.m_next; ++k) {
      const LatticeVec e = basis_vector(n, k);
      f += e;
      if (k < blk.n) g += e;
      h += line.signs[k] * e;
    }
    out.f.push_back(std::move(f));
    out.g.push_back(std::move(g));
    out.h.push_back(std::move(h));
  }
  return out;
}

CoamoebaSkeleton coamoeba_vertices(const AffineLine& line) {
  BlockVectors bv = block_vectors(line);
  CoamoebaSkeleton skel;
  LatticeVec p(line.n());
  for (std::size_t i = 0; i < line.n(); ++i) p[i] = line.signs[i] < 0 ? 1 : 0;
  for (std::size_t j = 0; j < line.blocks.size(); ++j) {
    skel.vertices.push_back(p);
    p -= bv.f[j];
  }
  skel.f = std::move(bv.f);
  skel.g = std::move(bv.g);
  skel.h = std::move(bv.h);
  return skel;
}

std::vector<PathPoint> ZonotopePath::points() const {
  std::vector<PathPoint> out;
  for (std::size_t j = p.size(); j >= 1; --j) {
    out.push_back({p_prime[j - 1], true, j});
    out.push_back({p[j - 1], false, j});
  }
  return out;
}

ZonotopePath zonotope_path(const AffineLine& line) {
  const CoamoebaSkeleton skel = coamoeba_vertices(line);
  const std::size_t half = line.blocks.size();  // M + 1
  ZonotopePath path;
  LatticeVec p = skel.vertices.front();
  for (std::size_t j = 0; j < half; ++j) {
    const Block& blk = line.blocks[j];
    path.p.push_back(p);
    path.p_prime.push_back(blk.mixed() ? p + (2 * line.signs[blk.m]) * skel.g[j] : p);
    p += skel.h[j];
  }
  for (std::size_t j = 0; j < half; ++j) {
    path.p.push_back(-path.p[j]);
    path.p_prime.push_back(-path.p_prime[j]);
  }
  return path;
}

TriangleChain zonotope_chain(const ZonotopePath& path) {
  TriangleChain chain;
  chain.dim = path.dim();
  const LatticeVec origin(chain.dim);
  const std::size_t count = path.p.size();
  for (std::size_t i = count; i >= 1; --i) {
    const LatticeVec& next = path.p[i % count];
    chain.triangles.push_back({origin, next, path.p_prime[i - 1], 1});
    chain.triangles.push_back({origin, path.p_prime[i - 1], path.p[i - 1], 1});
  }
  return chain;
}

void EdgeChain::add_atom(LatticeVec base, LatticeVec step, std::int64_t sign) {
  base = base.mod2();
  LatticeVec other_base = (base + step).mod2();
  LatticeVec other_step = -step;
  Key key{std::move(base), std::move(step)};
  Key other{std::move(other_base), std::move(other_step)};
  if (other < key) {
    key = std::move(other);
    sign = -sign;
  }
  auto it = atoms_.find(key);
  if (it == atoms_.end()) {
    atoms_.emplace(std::move(key), sign);
  } else if ((it->second += sign) == 0) {
    atoms_.erase(it);
  }
}

void EdgeChain::add_segment(const LatticeVec& from, const LatticeVec& to, std::int64_t sign) {
  if (from.size() != to.size()) throw Error(ErrorCode::DimensionMismatch, "segment endpoints differ in dimension");
  LatticeVec d = to - from;
  const std::int64_t steps = d.content();
  if (steps == 0 || sign == 0) return;
  LatticeVec step(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) step[i] = d[i] / steps;
  LatticeVec at = from;
  for (std::int64_t k = 0; k < steps; ++k) {
    add_atom(at, step, sign);
    at += step;
  }
}

void EdgeChain::add(const EdgeChain& other) {
  for (const auto& [key, sign] : other.atoms_) add_atom(key.first, key.second, sign);
}

EdgeChain coamoeba_boundary(const CoamoebaSkeleton& skel) {
  EdgeChain out;
  for (std::size_t j = 0; j < skel.vertices.size(); ++j) {
    const LatticeVec& p = skel.vertices[j];
    out.add_segment(p, p - skel.f[j], 1);
    out.add_segment(p, p + skel.f[j], 1);
  }
  return out;
}

EdgeChain chain_boundary(const TriangleChain& chain) {
  EdgeChain out;
  for (const Triangle& t : chain.triangles) {
    out.add_segment(t.a, t.b, t.coefficient);
    out.add_segment(t.b, t.c, t.coefficient);
    out.add_segment(t.c, t.a, t.coefficient);
  }
  return out;
}

CycleReport verify_cycle(const AffineLine& line) {
  CycleReport report;
  report.residual = coamoeba_boundary(coamoeba_vertices(line));
  report.residual.add(chain_boundary(zonotope_chain(zonotope_path(line))));
  return report;
}

std::int64_t HomologyClass2::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i > j) return -at(j, i);
  auto it = coeff.find({i, j});
  return it == coeff.end() ? 0 : it->second;
}

HomologyClass2 homology_class(const AffineLine& line) {
  const LatticeVec p1 = coamoeba_vertices(line).vertices.front();
  HomologyClass2 cls;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    for (std::size_t j = i + 1; j < p1.size(); ++j) {
      if (p1[i] == 0 && p1[j] == 1) cls.coeff[{i, j}] = 1;
    }
  }
  return cls;
}

}  // namespace coamoeba
