#include "behaviocog/biometric/template.hpp"

#include <cmath>
#include <limits>

#include "behaviocog/errors.hpp"

namespace behaviocog {

const char* to_string(TemplatePurpose purpose) {
  return purpose == TemplatePurpose::sym ? "sym" : "user";
}

std::size_t medoid_index(std::span<const Series* const> series, double band_radius) {
  const std::size_t t = series.size();
  if (t == 0) throw ConfigError("medoid of an empty set");
  std::vector<double> sums(t, 0.0);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      const double d = dtw_distance(*series[i], *series[j], band_radius);
      sums[i] += d;
      sums[j] += d;
    }
  std::size_t best = 0;
  for (std::size_t i = 1; i < t; ++i)
    if (sums[i] < sums[best]) best = i;
  return best;
}

Template build_template(std::span<const FeatureSet> samples, std::span<const Feature> subset,
                        TemplatePurpose purpose, double z, double band_radius) {
  if (samples.size() < 2) throw ConfigError("a template needs at least 2 samples");
  static constexpr Feature kSymSubset[] = {Feature::x, Feature::y};
  if (purpose == TemplatePurpose::sym) subset = kSymSubset;
  if (subset.empty()) throw ConfigError("empty feature subset");

  Template tmpl;
  tmpl.purpose = purpose;
  tmpl.subset.assign(subset.begin(), subset.end());
  tmpl.z = z;
  tmpl.band_radius = band_radius;

  std::vector<const Series*> column(samples.size());
  for (Feature f : subset) {
    for (std::size_t i = 0; i < samples.size(); ++i) column[i] = &samples[i].at(f);
    const std::size_t m = medoid_index(column, band_radius);
    tmpl.series.push_back(*column[m]);
    tmpl.source.push_back(static_cast<int>(m));
  }

  std::vector<double> dist;
  dist.reserve(samples.size());
  for (const auto& s : samples) dist.push_back(multi_dtw(tmpl, s));
  double mean = 0.0;
  for (double d : dist) mean += d;
  mean /= static_cast<double>(dist.size());
  double var = 0.0;
  for (double d : dist) var += (d - mean) * (d - mean);
  tmpl.mu = mean;
  tmpl.sigma = std::sqrt(var / static_cast<double>(dist.size()));
  return tmpl;
}

double multi_dtw(const Template& tmpl, const FeatureSet& sample) {
  double total = 0.0;
  for (std::size_t i = 0; i < tmpl.subset.size(); ++i)
    total += dtw_distance(tmpl.series[i], sample.at(tmpl.subset[i]), tmpl.band_radius);
  return total;
}

double standardized_residual(const Template& tmpl, double distance) {
  if (tmpl.sigma > 0.0) return (distance - tmpl.mu) / tmpl.sigma;
  return distance <= tmpl.mu ? 0.0 : std::numeric_limits<double>::infinity();
}

double max_standardized_residual(const Template& tmpl, std::span<const FeatureSet> samples) {
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, standardized_residual(tmpl, multi_dtw(tmpl, s)));
  return worst;
}

nlohmann::json to_json(const Template& tmpl) {
  nlohmann::json j;
  j["purpose"] = to_string(tmpl.purpose);
  j["mu"] = tmpl.mu;
  j["sigma"] = tmpl.sigma;
  j["z"] = tmpl.z;
  j["band_radius"] = tmpl.band_radius;
  auto& subset = j["subset"] = nlohmann::json::array();
  auto& series = j["series"] = nlohmann::json::object();
  for (std::size_t i = 0; i < tmpl.subset.size(); ++i) {
    const std::string name(feature_name(tmpl.subset[i]));
    subset.push_back(name);
    series[name] = tmpl.series[i];
  }
  j["source"] = tmpl.source;
  return j;
}

Template template_from_json(const nlohmann::json& j) {
  try {
    Template tmpl;
    const auto purpose = j.at("purpose").get<std::string>();
    if (purpose == "sym") tmpl.purpose = TemplatePurpose::sym;
    else if (purpose == "user") tmpl.purpose = TemplatePurpose::user;
    else throw DataError("unknown template purpose '" + purpose + "'");
    tmpl.mu = j.at("mu").get<double>();
    tmpl.sigma = j.at("sigma").get<double>();
    tmpl.z = j.at("z").get<double>();
    tmpl.band_radius = j.value("band_radius", kDefaultBandRadius);
    for (const auto& name : j.at("subset")) {
      const auto n = name.get<std::string>();
      const auto f = feature_from_name(n);
      if (!f) throw DataError("unknown feature '" + n + "'");
      tmpl.subset.push_back(*f);
      tmpl.series.push_back(j.at("series").at(n).get<Series>());
      if (tmpl.series.back().empty()) throw DataError("empty series for feature '" + n + "'");
    }
    if (tmpl.subset.empty()) throw DataError("template has no features");
    if (j.contains("source")) tmpl.source = j["source"].get<std::vector<int>>();
    if (!(tmpl.mu >= 0.0 && tmpl.sigma >= 0.0)) throw DataError("mu and sigma must be non-negative");
    return tmpl;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("template: ") + e.what());
  }
}

}  // namespace behaviocog
