#include "behaviocog/biometric/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "behaviocog/errors.hpp"

namespace behaviocog {

DtwResult dtw(std::span<const double> a, std::span<const double> b, double band_radius) {
  if (a.empty() || b.empty()) throw ConfigError("DTW needs non-empty series");
  if (!(band_radius >= 0.0)) throw ConfigError("band radius must be non-negative");
  if (a.size() < b.size()) std::swap(a, b);

  const std::size_t rows = a.size();
  const std::size_t cols = b.size();
  const double slope = rows > 1 ? static_cast<double>(cols - 1) / static_cast<double>(rows - 1) : 0.0;

  // With slope <= 1 the band is connected as soon as every row holds a cell,
  // so the smallest feasible radius is the largest gap from the centre line
  // to an integer column.
  double radius = band_radius;
  for (std::size_t i = 0; i < rows; ++i) {
    const double c = slope * static_cast<double>(i);
    radius = std::max(radius, std::abs(c - std::round(c)));
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr double kEps = 1e-9;
  std::vector<double> prev(cols, kInf), cur(cols, kInf);
  std::size_t prev_lo = 0, prev_hi = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const double c = slope * static_cast<double>(i);
    const auto lo = static_cast<std::size_t>(std::max(0.0, std::ceil(c - radius - kEps)));
    const auto hi = static_cast<std::size_t>(
        std::min(static_cast<double>(cols - 1), std::floor(c + radius + kEps)));
    for (std::size_t j = lo; j <= hi; ++j) {
      const double diff = a[i] - b[j];
      double best;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else {
        best = kInf;
        if (i > 0) best = std::min(best, prev[j]);
        if (j > 0) best = std::min(best, cur[j - 1]);
        if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
      }
      cur[j] = best + diff * diff;
    }
    if (i > 0)
      for (std::size_t j = prev_lo; j <= prev_hi; ++j) prev[j] = kInf;
    std::swap(prev, cur);
    prev_lo = lo;
    prev_hi = hi;
  }
  return {prev[cols - 1], radius};
}

}  // namespace behaviocog
