#pragma once

#include <span>
#include <vector>

#include "behaviocog/biometric/dtw.hpp"
#include "behaviocog/biometric/features.hpp"
#include "json.hpp"

namespace behaviocog {

enum class TemplatePurpose { sym, user };

const char* to_string(TemplatePurpose purpose);

// Per-feature medoid series with the spread of the registration samples
// around them. Accepts a distance d when d <= mu + z * sigma.
struct Template {
  TemplatePurpose purpose = TemplatePurpose::user;
  std::vector<Feature> subset;
  std::vector<Series> series;  // parallel to subset
  std::vector<int> source;     // registration sample each medoid came from
  double mu = 0.0;
  double sigma = 0.0;          // population deviation
  double z = 3.0;
  double band_radius = kDefaultBandRadius;

  double threshold() const { return mu + z * sigma; }
};

/// Index of the series with the least summed DTW distance to the others;
/// ties go to the lowest index.
std::size_t medoid_index(std::span<const Series* const> series, double band_radius);

/// A sym template always uses {x, y}, whatever `subset` says.
/// Throws ConfigError for fewer than 2 samples or an empty subset,
/// DataError when a sample lacks a feature.
Template build_template(std::span<const FeatureSet> samples, std::span<const Feature> subset,
                        TemplatePurpose purpose, double z = 3.0,
                        double band_radius = kDefaultBandRadius);

/// Sum of per-feature DTW distances. Throws DataError naming a missing feature.
double multi_dtw(const Template& tmpl, const FeatureSet& sample);

/// (distance - mu) / sigma; with sigma = 0 this is 0 at or below mu, +inf above.
double standardized_residual(const Template& tmpl, double distance);

/// Largest standardized residual over `samples`; choosing z at least this
/// large accepts every one of them.
double max_standardized_residual(const Template& tmpl, std::span<const FeatureSet> samples);

nlohmann::json to_json(const Template& tmpl);
/// Throws DataError on schema violations.
Template template_from_json(const nlohmann::json& j);

}  // namespace behaviocog
