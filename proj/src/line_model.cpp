#include "coamoeba/line_model.hpp"

#include <algorithm>
#include <numeric>

#include "coamoeba/error.hpp"

namespace coamoeba {

namespace {

int sgn(std::int64_t v) noexcept { return (v > 0) - (v < 0); }

// Squared length of the summed (alpha, beta) vectors of the forms at
// positions [first, last) of order.
__int128 group_norm2(const std::vector<AffineForm>& forms, const std::vector<std::size_t>& order,
                     std::size_t first, std::size_t last) {
  __int128 a = 0;
  __int128 b = 0;
  for (std::size_t k = first; k < last; ++k) {
    a += forms[order[k]].alpha;
    b += forms[order[k]].beta;
  }
  return a * a + b * b;
}

std::size_t min_index(const std::vector<std::size_t>& order, std::size_t first, std::size_t last) {
  return *std::min_element(order.begin() + static_cast<std::ptrdiff_t>(first),
                           order.begin() + static_cast<std::ptrdiff_t>(last));
}

}  // namespace

std::size_t AffineLine::block_of(std::size_t k) const {
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (k < blocks[j].m_next) return j;
  }
  throw Error(ErrorCode::IndexOutOfRange, "form index " + std::to_string(k));
}

int sign_at_minus_infinity(AffineForm form) noexcept {
  return form.alpha != 0 ? -sgn(form.alpha) : sgn(form.beta);
}

Zero zero_of_form(AffineForm form) {
  if (form.alpha == 0) return Zero::infinity();
  return {false, Rational(-form.beta, form.alpha)};
}

Rational evaluate(AffineForm form, const Rational& t) { return Rational(form.alpha) * t + form.beta; }

AffineLine line_from_forms(const std::vector<AffineForm>& forms, LineOptions opts) {
  if (forms.size() < 3) {
    throw Error(ErrorCode::TooFew, "need at least 3 forms, got " + std::to_string(forms.size()));
  }
  std::vector<Zero> zeros;
  zeros.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].alpha == 0 && forms[i].beta == 0) {
      throw Error(ErrorCode::ZeroForm, "form " + std::to_string(i + 1) + " is identically zero");
    }
    zeros.push_back(zero_of_form(forms[i]));
  }

  std::vector<std::size_t> order(forms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return zeros[a] < zeros[b]; });

  AffineLine line;
  line.normalized = opts.normalize;
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && zeros[order[end]] == zeros[order[start]]) ++end;
    const bool at_infinity = zeros[order[start]].infinite;

    // Split the block into its two sign groups, each in stable order.
    std::vector<std::size_t> first_group;
    std::vector<std::size_t> second_group;
    const int lead = sign_at_minus_infinity(forms[order[start]]);
    for (std::size_t k = start; k < end; ++k) {
      (sign_at_minus_infinity(forms[order[k]]) == lead ? first_group : second_group).push_back(order[k]);
    }
    bool swap_groups = false;
    if (!second_group.empty()) {
      if (at_infinity) {
        swap_groups = lead > 0;  // the positive constants must close the line
      } else if (opts.normalize) {
        std::copy(first_group.begin(), first_group.end(), order.begin() + static_cast<std::ptrdiff_t>(start));
        std::copy(second_group.begin(), second_group.end(),
                  order.begin() + static_cast<std::ptrdiff_t>(start + first_group.size()));
        const std::size_t split = start + first_group.size();
        const __int128 n1 = group_norm2(forms, order, start, split);
        const __int128 n2 = group_norm2(forms, order, split, end);
        swap_groups = n2 < n1 || (n1 == n2 && min_index(order, split, end) < min_index(order, start, split));
      }
    }
    if (swap_groups) std::swap(first_group, second_group);
    std::copy(first_group.begin(), first_group.end(), order.begin() + static_cast<std::ptrdiff_t>(start));
    std::copy(second_group.begin(), second_group.end(),
              order.begin() + static_cast<std::ptrdiff_t>(start + first_group.size()));

    line.blocks.push_back({start, end, start + first_group.size(), zeros[order[start]]});
    start = end;
  }

  if (line.blocks.size() < 2) {
    throw Error(ErrorCode::DegenerateLine, "all forms share one zero");
  }
  const AffineForm last = forms[order.back()];
  if (last.alpha != 0 || last.beta <= 0) {
    throw Error(ErrorCode::NotNormalized, "no positive constant form can close the line");
  }

  line.perm = order;
  for (auto i : order) {
    line.forms.push_back(forms[i]);
    line.signs.push_back(sign_at_minus_infinity(forms[i]));
  }
  line.forms.back() = {0, 1};
  return line;
}

AffineLine line_from_bconfig(const BConfig& b, std::size_t pivot, LineOptions opts, const Rational& shift) {
  if (pivot >= b.size()) {
    throw Error(ErrorCode::InvalidPivot, "pivot " + std::to_string(pivot + 1) + " out of range 1.." +
                                             std::to_string(b.size()));
  }
  const Vec2 bp = b[pivot];
  const Vec2 v = primitive({bp.y, -bp.x});
  const Rational len2(dot(bp, bp));
  const RatVec2 x{Rational(bp.x) / len2 + shift * v.x, Rational(bp.y) / len2 + shift * v.y};

  // Input order with the pivot moved to the end, so it closes the line.
  std::vector<std::size_t> input;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i != pivot) input.push_back(i);
  }
  input.push_back(pivot);

  std::vector<Rational> betas;
  std::int64_t denom = 1;
  for (auto i : input) {
    betas.push_back(x.x * b[i].x + x.y * b[i].y);
    denom = checked_narrow(static_cast<__int128>(denom) / gcd64(denom, betas.back().den()) * betas.back().den());
  }
  std::vector<AffineForm> forms;
  for (std::size_t k = 0; k < input.size(); ++k) {
    const Rational beta = betas[k] * denom;
    forms.push_back({checked_narrow(static_cast<__int128>(dot(b[input[k]], v)) * denom), beta.num()});
  }

  AffineLine line = line_from_forms(forms, opts);
  for (auto& p : line.perm) p = input[p];
  line.chart = Chart{v, x};
  return line;
}

BConfig line_order(const BConfig& b, const AffineLine& line) {
  if (line.perm.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "line has " + std::to_string(line.perm.size()) +
                                                  " forms, configuration has " + std::to_string(b.size()));
  }
  return b.permuted(line.perm);
}

}  // namespace coamoeba
