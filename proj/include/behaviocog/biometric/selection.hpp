#pragma once

#include <span>
#include <vector>

#include "behaviocog/biometric/dtw.hpp"
#include "behaviocog/biometric/features.hpp"
#include "json.hpp"

namespace behaviocog {

inline constexpr double kZStep = 0.125;
inline constexpr double kZMax = 10.0;
inline constexpr int kZCount = 81;

/// z = 0, 0.125, ..., 10.
std::vector<double> z_grid();

struct ZListEntry {
  double z = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
};

struct UserAttackerPair {
  std::vector<FeatureSet> registration;
  std::vector<FeatureSet> user_tests;
  std::vector<FeatureSet> attacker_tests;
};

// TPR/FPR of the template built from `registration` over the z grid; a test
// sample is accepted when its distance is <= mu + z * sigma.
/// Throws ConfigError on empty test sets or fewer than 2 registration samples.
std::vector<ZListEntry> get_z_list(std::span<const Feature> subset, const UserAttackerPair& pair,
                                   double band_radius = kDefaultBandRadius);

struct SelectionStep {
  std::vector<Feature> subset;
  double z = 0.0;
  double tpr_sum = 0.0;
  double fpr_sum = 0.0;
};

struct FeatureSelection {
  std::vector<Feature> subset;
  double z = 0.0;
  double tpr_sum = 0.0;
  double fpr_sum = 0.0;
  std::vector<SelectionStep> steps;  // best nested subset of each size
};

// Greedy forward selection over `candidates` with z-lists summed over all
// pairs. Subsets are ranked by larger TPR sum, then smaller FPR sum, then
// smaller z, then fewer features.
/// Throws ConfigError when `candidates` or `pairs` is empty.
FeatureSelection select_features(std::span<const Feature> candidates,
                                 std::span<const UserAttackerPair> pairs,
                                 double band_radius = kDefaultBandRadius);

nlohmann::json to_json(const std::vector<ZListEntry>& zlist);
nlohmann::json to_json(const FeatureSelection& selection);

}  // namespace behaviocog
