#include "behaviocog/attacks/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/distributions/chi_squared.hpp>

#include "behaviocog/combinatorics.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

double log_pmf(int v, int i, double p) {
  if (p <= 0.0) return i == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return i == v ? 0.0 : -std::numeric_limits<double>::infinity();
  return static_cast<double>(log_binomial(v, i)) + i * std::log(p) + (v - i) * std::log1p(-p);
}

void check(int v, int i, double p) {
  if (v < 0 || i < 0 || i > v) throw ConfigError("binomial: need 0 <= i <= v");
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("binomial: p must lie in [0, 1]");
}

}  // namespace

double binomial_pmf(int v, int i, double p) {
  check(v, i, p);
  return std::exp(log_pmf(v, i, p));
}

double binomial_significance(int v, int i, double p) {
  check(v, i, p);
  if (i == 0) return 1.0;
  double peak = -std::numeric_limits<double>::infinity();
  for (int j = i; j <= v; ++j) peak = std::max(peak, log_pmf(v, j, p));
  if (std::isinf(peak)) return 0.0;
  double sum = 0.0;
  for (int j = i; j <= v; ++j) sum += std::exp(log_pmf(v, j, p) - peak);
  return std::min(1.0, std::exp(peak + std::log(sum)));
}

double chi_square_critical(int degrees_of_freedom, double alpha) {
  if (degrees_of_freedom < 1) throw ConfigError("chi-square needs at least one degree of freedom");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  const boost::math::chi_squared dist(degrees_of_freedom);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

double chi_square_sf(int degrees_of_freedom, double x) {
  if (degrees_of_freedom < 1) throw ConfigError("chi-square needs at least one degree of freedom");
  if (x <= 0.0) return 1.0;
  const boost::math::chi_squared dist(degrees_of_freedom);
  return boost::math::cdf(boost::math::complement(dist, x));
}

}  // namespace behaviocog
