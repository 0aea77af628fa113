#pragma once

#include <cmath>
#include <vector>

#include "behaviocog/biometric/selection.hpp"
#include "behaviocog/rng.hpp"

namespace behaviocog::testing {

// Candidate set for the planted-feature experiment: x carries the writer's
// identity, the rest are the same white noise for everyone.
inline std::vector<Feature> planted_candidates() {
  return {Feature::x, Feature::y, Feature::dx, Feature::dy, Feature::p};
}

inline FeatureSet planted_sample(bool genuine, Rng& rng, int length = 30) {
  FeatureSet fs;
  for (Feature f : planted_candidates()) {
    Series s(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
      double v = rng.normal();
      if (f == Feature::x)
        v = (genuine ? std::sin(0.2 * i) : std::cos(0.3 * i)) + 0.05 * v;
      s[static_cast<std::size_t>(i)] = v;
    }
    fs.set(f, std::move(s));
  }
  return fs;
}

inline UserAttackerPair planted_pair(Rng& rng, int per_set = 5) {
  UserAttackerPair pair;
  for (int i = 0; i < per_set; ++i) {
    pair.registration.push_back(planted_sample(true, rng));
    pair.user_tests.push_back(planted_sample(true, rng));
    pair.attacker_tests.push_back(planted_sample(false, rng));
  }
  return pair;
}

}  // namespace behaviocog::testing
