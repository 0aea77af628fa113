#pragma once

#include <cstdint>
#include <optional>

namespace behaviocog {

/// Exact C(n, k) when it fits in 64 bits, nullopt otherwise.
std::optional<std::uint64_t> binomial_exact(std::uint64_t n, std::uint64_t k);

/// Natural log of the real-valued binomial Gamma(n+1) / (Gamma(k+1) Gamma(n-k+1)).
/// Defined for real 0 <= k <= n; returns -infinity when k < 0 or k > n.
double log_binomial(double n, double k);

/// log2 of the real-valued binomial.
double log2_binomial(double n, double k);

/// Real-valued binomial; 0 when k < 0 or k > n.
double binomial_real(double n, double k);

/// P[no marked item in an l-subset drawn from n items of which k are marked].
double hypergeom_zero(int n, int k, int l);

/// P[exactly i marked items in an l-subset drawn from n items with k marked].
double hypergeom(int n, int k, int l, int i);

}  // namespace behaviocog
