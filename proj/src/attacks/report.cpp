#include "behaviocog/attacks/report.hpp"

namespace behaviocog {
namespace {

nlohmann::json work_json(const AttackWork& w) {
  return {{"rows", w.rows}, {"candidates", w.candidates}};
}

}  // namespace

nlohmann::json attack_report(const std::string& name, const CandidateSet& result) {
  nlohmann::json j = {{"attack", name}, {"recovered", result.candidates.size() == 1}};
  j["secret"] = result.candidates.size() == 1 ? nlohmann::json(result.candidates[0].objects())
                                              : nlohmann::json(nullptr);
  j["work"] = work_json(result.work);
  auto& list = j["stats"]["candidates"] = nlohmann::json::array();
  for (const auto& c : result.candidates) list.push_back(c.objects());
  j["stats"]["candidate_count"] = result.candidates.size();
  return j;
}

nlohmann::json attack_report(const std::string& name, const RecoveryResult& result) {
  nlohmann::json j = {{"attack", name}, {"recovered", result.secret.has_value()}};
  j["secret"] = result.secret ? nlohmann::json(result.secret->objects()) : nlohmann::json(nullptr);
  j["work"] = work_json(result.work);
  j["stats"] = result.stats;
  if (!result.failure.empty()) j["stats"]["failure"] = result.failure;
  if (!result.slack.empty()) j["stats"]["slack"] = result.slack;
  return j;
}

}  // namespace behaviocog
