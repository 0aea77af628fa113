#pragma once

#include <span>

namespace behaviocog {

inline constexpr double kDefaultBandRadius = 20.0;

struct DtwResult {
  double distance = 0.0;
  double effective_radius = 0.0;  // >= the requested radius; larger when widened
};

// Exact banded DTW with squared pointwise cost and steps (1,0), (0,1), (1,1).
// The longer series indexes rows; cell (i, j) is inside the band when
// |i * (short-1)/(long-1) - j| <= radius. A band too narrow to connect the
// corners is widened to the smallest radius that does.
/// Throws ConfigError on an empty series or negative radius.
DtwResult dtw(std::span<const double> a, std::span<const double> b,
              double band_radius = kDefaultBandRadius);

inline double dtw_distance(std::span<const double> a, std::span<const double> b,
                           double band_radius = kDefaultBandRadius) {
  return dtw(a, b, band_radius).distance;
}

}  // namespace behaviocog
