#pragma once

#include <string>

#include "behaviocog/attacks/enumeration.hpp"
#include "behaviocog/attacks/linearization.hpp"
#include "json.hpp"

namespace behaviocog {

// {"attack", "recovered", "secret", "work":{"rows","candidates"}, "stats"}
nlohmann::json attack_report(const std::string& name, const CandidateSet& result);
nlohmann::json attack_report(const std::string& name, const RecoveryResult& result);

}  // namespace behaviocog
