#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "behaviocog/biometric/trace.hpp"

namespace behaviocog {

// The 40 per-rendering time series. Stylometric extents are running
// prefixes over the trace so that every feature is a series.
enum class Feature : int {
  x, y, dx, dy, x_dot, y_dot, x_ddot, y_ddot, p, dp, s, ds, force, action,
  tmp, bmp, lmp, rmp, width, height, area, whr, slope, path, curve,
  Rx, Ry, Rz, Gx, Gy, Gz, Ax, Ay, Az, gx, gy, gz, ax, ay, az,
};

inline constexpr int kFeatureCount = 40;

using Series = std::vector<double>;

std::string_view feature_name(Feature f);
std::optional<Feature> feature_from_name(std::string_view name);

/// All 40 features in declaration order.
std::span<const Feature> all_features();

struct FeatureSet {
  std::array<std::optional<Series>, kFeatureCount> series;

  bool available(Feature f) const { return series[static_cast<std::size_t>(f)].has_value(); }
  /// Throws DataError naming the feature when it is absent.
  const Series& at(Feature f) const;
  void set(Feature f, Series s) { series[static_cast<std::size_t>(f)] = std::move(s); }
  std::vector<Feature> available_features() const;
};

/// Features present in every set.
std::vector<Feature> common_features(std::span<const FeatureSet> sets);

/// Population z-score in place; a constant series becomes all zeros.
void zscore(Series& s);

/// Derivatives of the quadratic through each point and its two neighbours
/// (one-sided stencils at the ends), so non-uniform timestamps are exact
/// for quadratic motion.
Series first_derivative(std::span<const double> t, std::span<const double> v);
Series second_derivative(std::span<const double> t, std::span<const double> v);

// Pressure/size features exist only when every event carries p/s, motion
// features only when every event carries a motion block.
/// Throws DataError on an invalid trace.
FeatureSet extract_features(const Trace& trace, bool normalize = true);

}  // namespace behaviocog
