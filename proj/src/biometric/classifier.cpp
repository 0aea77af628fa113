#include "behaviocog/biometric/classifier.hpp"

#include <algorithm>

#include "behaviocog/errors.hpp"

namespace behaviocog {

BiometricProfile enroll(std::span<const std::vector<FeatureSet>> renderings,
                        const EnrollOptions& options) {
  if (renderings.empty()) throw ConfigError("no symbols to enroll");
  BiometricProfile profile;
  for (const auto& samples : renderings) {
    if (samples.size() < 2) throw ConfigError("each symbol needs at least 2 renderings");
    const auto subset = options.user_subset ? *options.user_subset : common_features(samples);
    auto sym = build_template(samples, {}, TemplatePurpose::sym, options.z_sym, options.band_radius);
    auto user = build_template(samples, subset, TemplatePurpose::user, options.z_user,
                               options.band_radius);
    if (options.cover_registration) {
      sym.z = std::max(sym.z, max_standardized_residual(sym, samples));
      user.z = std::max(user.z, max_standardized_residual(user, samples));
    }
    profile.sym.push_back(std::move(sym));
    profile.user.push_back(std::move(user));
  }
  return profile;
}

const char* to_string(DecisionStage stage) {
  return stage == DecisionStage::symbol ? "symbol" : "user";
}

Decision classify(const FeatureSet& rendering, const BiometricProfile& profile,
                  std::optional<int> expected) {
  const int d = static_cast<int>(profile.sym.size());
  if (d == 0 || profile.user.size() != profile.sym.size())
    throw DataError("profile needs one sym and one user template per symbol");
  if (expected && (*expected < 0 || *expected >= d)) throw DataError("expected symbol out of range");

  Decision out;
  if (expected) {
    out.symbol = *expected;
    out.sym_distance = multi_dtw(profile.sym[static_cast<std::size_t>(*expected)], rendering);
  } else {
    for (int r = 0; r < d; ++r) {
      const double dist = multi_dtw(profile.sym[static_cast<std::size_t>(r)], rendering);
      if (!out.symbol || dist < out.sym_distance) {
        out.symbol = r;
        out.sym_distance = dist;
      }
    }
  }
  const auto s = static_cast<std::size_t>(*out.symbol);
  if (out.sym_distance > profile.sym[s].threshold()) {
    out.failed = DecisionStage::symbol;
    return out;
  }
  out.user_distance = multi_dtw(profile.user[s], rendering);
  if (out.user_distance > profile.user[s].threshold()) {
    out.failed = DecisionStage::user;
    return out;
  }
  out.accepted = true;
  return out;
}

nlohmann::json to_json(const BiometricProfile& profile) {
  nlohmann::json j = {{"sym", nlohmann::json::array()}, {"user", nlohmann::json::array()}};
  for (const auto& t : profile.sym) j["sym"].push_back(to_json(t));
  for (const auto& t : profile.user) j["user"].push_back(to_json(t));
  return j;
}

BiometricProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sym") || !j.contains("user"))
    throw DataError("profile needs 'sym' and 'user' template arrays");
  BiometricProfile p;
  for (const auto& t : j["sym"]) p.sym.push_back(template_from_json(t));
  for (const auto& t : j["user"]) p.user.push_back(template_from_json(t));
  if (p.sym.size() != p.user.size() || p.sym.empty())
    throw DataError("profile needs one sym and one user template per symbol");
  return p;
}

}  // namespace behaviocog
