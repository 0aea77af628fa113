#include "behaviocog/cognitive/params.hpp"

#include "behaviocog/errors.hpp"

namespace behaviocog {

SchemeParams new_params(int d, int k, int l, int n, int gamma, int t) {
  SchemeParams p{d, k, l, n, gamma, t};
  validate(p);
  return p;
}

void validate(const SchemeParams& p) {
  if (p.d < 2) throw ConfigError("d must be at least 2");
  if (p.n < 2) throw ConfigError("n must be at least 2");
  if (p.k < 1 || p.k >= p.n) throw ConfigError("k must satisfy 1 <= k < n");
  if (p.l < 1 || p.l > p.n) throw ConfigError("l must satisfy 1 <= l <= n");
  if (p.gamma < 1) throw ConfigError("gamma must be at least 1");
  if (p.t < 1) throw ConfigError("t must be at least 1");
}

std::string to_string(const SchemeParams& p) {
  return "(" + std::to_string(p.d) + ", " + std::to_string(p.k) + ", " + std::to_string(p.l) +
         ", " + std::to_string(p.n) + ")";
}

}  // namespace behaviocog
