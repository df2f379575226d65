#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coamoeba/bconfig.hpp"
#include "coamoeba/lattice.hpp"
#include "coamoeba/rational.hpp"

namespace coamoeba {

/// The affine function t ↦ alpha·t + beta.
struct AffineForm {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(AffineForm, AffineForm) = default;
};

/// Zero of an affine form: a rational, or infinity for constants.
/// Infinity compares greater than every finite value.
struct Zero {
  bool infinite = false;
  Rational value;

  static Zero infinity() { return {true, Rational()}; }
  std::string str() const { return infinite ? "inf" : value.str(); }

  friend bool operator==(const Zero& a, const Zero& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Zero& a, const Zero& b) {
    if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
    return a.value <=> b.value;
  }
};

/// Forms [m, m_next) vanish at zeta. Signs are constant on [m, n) and on
/// [n, m_next); n == m_next means the block has a single sign.
/// All indices are 0-based positions in AffineLine::forms.
struct Block {
  std::size_t m = 0;
  std::size_t m_next = 0;
  std::size_t n = 0;
  Zero zeta;

  bool mixed() const noexcept { return n < m_next; }
  std::size_t size() const noexcept { return m_next - m; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Chart used by line_from_bconfig: the line is t ↦ x + t·v.
struct Chart {
  Vec2 v;
  RatVec2 x;
};

struct LineOptions {
  /// When false, finite blocks keep the sign group that appears first in
  /// the input first instead of putting the shorter group first.
  bool normalize = true;
};

/// A real line in P^N presented by N+1 ordered affine forms.
struct AffineLine {
  std::vector<AffineForm> forms;
  std::vector<std::size_t> perm;  ///< perm[k] = input index of forms[k]
  std::vector<Block> blocks;
  std::vector<int> signs;  ///< sign of each form on (-inf, first zero)
  std::optional<Chart> chart;
  bool normalized = true;

  std::size_t n() const noexcept { return forms.size() - 1; }
  std::size_t m() const noexcept { return blocks.size() - 1; }
  /// Block index containing form k.
  std::size_t block_of(std::size_t k) const;
};

int sign_at_minus_infinity(AffineForm form) noexcept;
Zero zero_of_form(AffineForm form);

/// Sorts by zero, splits into sign-ordered blocks and scales the last form
/// to the constant 1. Throws ZeroForm, TooFew, DegenerateLine, NotNormalized.
AffineLine line_from_forms(const std::vector<AffineForm>& forms, LineOptions opts = {});

/// Line through x = b_p/|b_p|² + shift·v in direction v, where v is the
/// primitive vector orthogonal to b_p with det(b_p, v) < 0. The pivot is
/// 0-based and plays the role of the last form.
AffineLine line_from_bconfig(const BConfig& b, std::size_t pivot, LineOptions opts = {},
                             const Rational& shift = Rational());

/// Exact value of a form at t.
Rational evaluate(AffineForm form, const Rational& t);

/// Configuration vectors listed in the order of the line's forms.
BConfig line_order(const BConfig& b, const AffineLine& line);

}  // namespace coamoeba
