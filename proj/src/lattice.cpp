#include "coamoeba/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coamoeba {

Vec2 primitive(Vec2 v) noexcept {
  std::int64_t g = gcd64(v.x, v.y);
  if (g <= 1) return v;
  return {v.x / g, v.y / g};
}

bool LatticeVec::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

LatticeVec LatticeVec::mod2() const {
  LatticeVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r.c_[i] = coamoeba::mod2(c_[i]);
  return r;
}

std::int64_t LatticeVec::content() const noexcept {
  std::int64_t g = 0;
  for (auto v : c_) g = gcd64(g, v);
  return g;
}

std::string LatticeVec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

LatticeVec& LatticeVec::operator+=(const LatticeVec& o) {
  if (o.size() != size()) throw std::invalid_argument("LatticeVec size mismatch");
  for (std::size_t i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVec& LatticeVec::operator-=(const LatticeVec& o) {
  if (o.size() != size()) throw std::invalid_argument("LatticeVec size mismatch");
  for (std::size_t i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LatticeVec operator*(std::int64_t k, LatticeVec a) {
  for (auto& v : a.c_) v *= k;
  return a;
}

LatticeVec LatticeVec::operator-() const { return -1 * *this; }

LatticeVec basis_vector(std::size_t n, std::size_t i) {
  LatticeVec e(n);
  if (i < n) {
    e[i] = 1;
  } else {
    for (std::size_t k = 0; k < n; ++k) e[k] = -1;
  }
  return e;
}

}  // namespace coamoeba
