#pragma once

#include <optional>
#include <span>
#include <vector>

#include "behaviocog/biometric/template.hpp"
#include "json.hpp"

namespace behaviocog {

// Templates for one user, indexed by response.
struct BiometricProfile {
  std::vector<Template> sym;
  std::vector<Template> user;
};

struct EnrollOptions {
  double z_sym = 3.0;
  double z_user = 3.0;
  // Raise each template's z to its largest registration residual.
  bool cover_registration = false;
  double band_radius = kDefaultBandRadius;
  // User-template features; defaults to those every registration sample has.
  std::optional<std::vector<Feature>> user_subset;
};

/// `renderings[r]` holds the registration samples of symbol r.
/// Throws ConfigError with fewer than 2 samples for a symbol.
BiometricProfile enroll(std::span<const std::vector<FeatureSet>> renderings,
                        const EnrollOptions& options = {});

enum class DecisionStage { symbol, user };

const char* to_string(DecisionStage stage);

struct Decision {
  bool accepted = false;
  std::optional<int> symbol;  // matched (or expected) symbol
  std::optional<DecisionStage> failed;
  double sym_distance = 0.0;
  double user_distance = 0.0;
};

// Step 1 checks the sym template of `expected`, or of the nearest symbol
// when no expectation exists (empty case). Step 2 checks that symbol's user
// template.
/// Throws DataError when the rendering lacks a template feature.
Decision classify(const FeatureSet& rendering, const BiometricProfile& profile,
                  std::optional<int> expected);

nlohmann::json to_json(const BiometricProfile& profile);
BiometricProfile profile_from_json(const nlohmann::json& j);

}  // namespace behaviocog
