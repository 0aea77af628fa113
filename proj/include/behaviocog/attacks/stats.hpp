#pragma once

namespace behaviocog {

/// P[X = i] for X ~ Binomial(v, p).
double binomial_pmf(int v, int i, double p);

/// P[X >= i] for X ~ Binomial(v, p), accumulated in log space.
double binomial_significance(int v, int i, double p);

/// Upper-tail critical value of the chi-square distribution.
double chi_square_critical(int degrees_of_freedom, double alpha);

/// P[Y >= x] for Y ~ chi-square(df).
double chi_square_sf(int degrees_of_freedom, double x);

/// Pearson goodness-of-fit statistic of `observed` against uniform.
template <typename Counts>
double chi_square_uniform(const Counts& observed) {
  double total = 0.0;
  for (auto c : observed) total += static_cast<double>(c);
  if (total <= 0.0) return 0.0;
  const double expected = total / static_cast<double>(observed.size());
  double stat = 0.0;
  for (auto c : observed) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

}  // namespace behaviocog
