#include "behaviocog/biometric/selection.hpp"

#include <cmath>
#include <tuple>

#include "behaviocog/biometric/template.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

// Distances from one feature's medoid to every sample of a pair. Because
// multi-DTW is a per-feature sum and medoids are chosen per feature, any
// subset's distances are sums of these.
struct FeatureDistances {
  std::vector<double> registration, user, attacker;
};

FeatureDistances feature_distances(Feature f, const UserAttackerPair& pair, double radius) {
  std::vector<const Series*> column;
  for (const auto& s : pair.registration) column.push_back(&s.at(f));
  const Series& medoid = *column[medoid_index(column, radius)];
  FeatureDistances out;
  for (const auto* s : column) out.registration.push_back(dtw_distance(medoid, *s, radius));
  for (const auto& s : pair.user_tests) out.user.push_back(dtw_distance(medoid, s.at(f), radius));
  for (const auto& s : pair.attacker_tests)
    out.attacker.push_back(dtw_distance(medoid, s.at(f), radius));
  return out;
}

void check_pair(const UserAttackerPair& pair) {
  if (pair.registration.size() < 2) throw ConfigError("need at least 2 registration samples");
  if (pair.user_tests.empty() || pair.attacker_tests.empty())
    throw ConfigError("z-list needs non-empty user and attacker test sets");
}

void accumulate(std::vector<double>& total, const std::vector<double>& part) {
  if (total.empty()) total.assign(part.size(), 0.0);
  for (std::size_t i = 0; i < part.size(); ++i) total[i] += part[i];
}

std::vector<ZListEntry> z_list_from(const std::vector<double>& reg, const std::vector<double>& user,
                                    const std::vector<double>& attacker) {
  const double n = static_cast<double>(reg.size());
  double mu = 0.0;
  for (double d : reg) mu += d;
  mu /= n;
  double var = 0.0;
  for (double d : reg) var += (d - mu) * (d - mu);
  const double sigma = std::sqrt(var / n);

  std::vector<ZListEntry> out;
  out.reserve(kZCount);
  for (double z : z_grid()) {
    const double threshold = mu + z * sigma;
    std::size_t tp = 0, fp = 0;
    for (double d : user) tp += d <= threshold;
    for (double d : attacker) fp += d <= threshold;
    out.push_back({z, static_cast<double>(tp) / static_cast<double>(user.size()),
                   static_cast<double>(fp) / static_cast<double>(attacker.size())});
  }
  return out;
}

// Summed z-list of one subset; cache[p][f] holds FeatureDistances.
std::vector<ZListEntry> summed_z_list(const std::vector<std::vector<FeatureDistances>>& cache,
                                      const std::vector<std::size_t>& subset) {
  std::vector<ZListEntry> total;
  for (const auto& per_feature : cache) {
    std::vector<double> reg, user, attacker;
    for (std::size_t f : subset) {
      accumulate(reg, per_feature[f].registration);
      accumulate(user, per_feature[f].user);
      accumulate(attacker, per_feature[f].attacker);
    }
    const auto zl = z_list_from(reg, user, attacker);
    if (total.empty()) total = zl;
    else
      for (std::size_t i = 0; i < zl.size(); ++i) {
        total[i].tpr += zl[i].tpr;
        total[i].fpr += zl[i].fpr;
      }
  }
  return total;
}

// Smaller is better.
auto rank(const ZListEntry& e) { return std::make_tuple(-e.tpr, e.fpr, e.z); }

ZListEntry best_entry(const std::vector<ZListEntry>& zl) {
  ZListEntry best = zl.front();
  for (const auto& e : zl)
    if (rank(e) < rank(best)) best = e;
  return best;
}

}  // namespace

std::vector<double> z_grid() {
  std::vector<double> z(kZCount);
  for (int i = 0; i < kZCount; ++i) z[static_cast<std::size_t>(i)] = i * kZStep;
  return z;
}

std::vector<ZListEntry> get_z_list(std::span<const Feature> subset, const UserAttackerPair& pair,
                                   double band_radius) {
  check_pair(pair);
  if (subset.empty()) throw ConfigError("empty feature subset");
  std::vector<double> reg, user, attacker;
  for (Feature f : subset) {
    const auto fd = feature_distances(f, pair, band_radius);
    accumulate(reg, fd.registration);
    accumulate(user, fd.user);
    accumulate(attacker, fd.attacker);
  }
  return z_list_from(reg, user, attacker);
}

FeatureSelection select_features(std::span<const Feature> candidates,
                                 std::span<const UserAttackerPair> pairs, double band_radius) {
  if (candidates.empty()) throw ConfigError("no candidate features");
  if (pairs.empty()) throw ConfigError("no user-attacker pairs");
  for (const auto& p : pairs) check_pair(p);

  std::vector<std::vector<FeatureDistances>> cache(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (Feature f : candidates) cache[p].push_back(feature_distances(f, pairs[p], band_radius));

  FeatureSelection out;
  std::vector<std::size_t> selected;
  std::vector<bool> used(candidates.size(), false);
  for (std::size_t round = 0; round < candidates.size(); ++round) {
    std::optional<std::size_t> pick;
    ZListEntry pick_entry;
    for (std::size_t f = 0; f < candidates.size(); ++f) {
      if (used[f]) continue;
      auto trial = selected;
      trial.push_back(f);
      const auto entry = best_entry(summed_z_list(cache, trial));
      if (!pick || rank(entry) < rank(pick_entry)) {
        pick = f;
        pick_entry = entry;
      }
    }
    used[*pick] = true;
    selected.push_back(*pick);
    SelectionStep step;
    for (std::size_t f : selected) step.subset.push_back(candidates[f]);
    step.z = pick_entry.z;
    step.tpr_sum = pick_entry.tpr;
    step.fpr_sum = pick_entry.fpr;
    out.steps.push_back(std::move(step));
  }

  const SelectionStep* best = &out.steps.front();
  for (const auto& s : out.steps)
    if (std::make_tuple(-s.tpr_sum, s.fpr_sum, s.z, s.subset.size()) <
        std::make_tuple(-best->tpr_sum, best->fpr_sum, best->z, best->subset.size()))
      best = &s;
  out.subset = best->subset;
  out.z = best->z;
  out.tpr_sum = best->tpr_sum;
  out.fpr_sum = best->fpr_sum;
  return out;
}

nlohmann::json to_json(const std::vector<ZListEntry>& zlist) {
  auto j = nlohmann::json::array();
  for (const auto& e : zlist) j.push_back({{"z", e.z}, {"tpr", e.tpr}, {"fpr", e.fpr}});
  return j;
}

nlohmann::json to_json(const FeatureSelection& selection) {
  auto names = [](const std::vector<Feature>& fs) {
    std::vector<std::string> out;
    for (Feature f : fs) out.emplace_back(feature_name(f));
    return out;
  };
  nlohmann::json j = {{"subset", names(selection.subset)},
                      {"z", selection.z},
                      {"tpr_sum", selection.tpr_sum},
                      {"fpr_sum", selection.fpr_sum}};
  auto& steps = j["steps"] = nlohmann::json::array();
  for (const auto& s : selection.steps)
    steps.push_back({{"subset", names(s.subset)}, {"z", s.z}, {"tpr_sum", s.tpr_sum},
                     {"fpr_sum", s.fpr_sum}});
  return j;
}

}  // namespace behaviocog
