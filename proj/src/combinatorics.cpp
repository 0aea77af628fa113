#include "behaviocog/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace behaviocog {

std::optional<std::uint64_t> binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

double log_binomial(double n, double k) {
  if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(std::lgamma(static_cast<long double>(n) + 1) -
                             std::lgamma(static_cast<long double>(k) + 1) -
                             std::lgamma(static_cast<long double>(n - k) + 1));
}

double log2_binomial(double n, double k) { return log_binomial(n, k) / std::log(2.0); }

double binomial_real(double n, double k) {
  if (k < 0.0 || k > n) return 0.0;
  return std::exp(log_binomial(n, k));
}

double hypergeom_zero(int n, int k, int l) { return hypergeom(n, k, l, 0); }

double hypergeom(int n, int k, int l, int i) {
  if (i < 0 || i > k || i > l || l - i > n - k) return 0.0;
  if (i == 0 && n > 64) {
    // prod_{j<l} (n-k-j)/(n-j): every factor in (0,1], no overflow
    long double p = 1.0L;
    for (int j = 0; j < l; ++j) p *= static_cast<long double>(n - k - j) / (n - j);
    return static_cast<double>(p);
  }
  if (n <= 64) {
    const auto num = *binomial_exact(k, i) * *binomial_exact(n - k, l - i);
    return static_cast<double>(static_cast<long double>(num) /
                               static_cast<long double>(*binomial_exact(n, l)));
  }
  const long double lp = std::lgamma(static_cast<long double>(k) + 1) -
                         std::lgamma(static_cast<long double>(i) + 1) -
                         std::lgamma(static_cast<long double>(k - i) + 1) +
                         std::lgamma(static_cast<long double>(n - k) + 1) -
                         std::lgamma(static_cast<long double>(l - i) + 1) -
                         std::lgamma(static_cast<long double>(n - k - l + i) + 1) -
                         (std::lgamma(static_cast<long double>(n) + 1) -
                          std::lgamma(static_cast<long double>(l) + 1) -
                          std::lgamma(static_cast<long double>(n - l) + 1));
  return static_cast<double>(std::exp(lp));
}

}  // namespace behaviocog
