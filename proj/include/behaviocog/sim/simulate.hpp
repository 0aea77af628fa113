#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "behaviocog/service/service.hpp"
#include "behaviocog/sim/synth.hpp"
#include "json.hpp"

namespace behaviocog {

struct SimulatedUser {
  std::string id;
  std::vector<ObjectId> secret;
  HandwritingStyle style;
};

SimulatedUser make_user(std::string id, const SchemeParams& params, Rng& rng);

/// t renderings of every symbol, labelled, ready for register_user.
std::vector<Trace> registration_set(const SimulatedUser& user, const ServiceConfig& config,
                                    const RenderOptions& render, Rng& rng);

// Who answers the challenges of a session.
struct Responder {
  const std::vector<ObjectId>* secret = nullptr;  // null: guess uniformly
  HandwritingStyle style;
};

/// Runs one full session against `target`; returns the verdict.
bool run_session(AuthService& service, const std::string& target, const Responder& responder,
                 const RenderOptions& render, Rng& rng,
                 std::vector<Trace>* submitted = nullptr);

struct SimulationSpec {
  SchemeParams params;
  std::string symbol_set = "complex-words";
  int users = 10;
  int sessions = 5;
  RenderOptions render;
  std::uint64_t seed = 1;
};

struct SimulationResult {
  std::vector<SimulatedUser> users;
  int sessions = 0;
  int accepted = 0;
  std::vector<Transcript> transcripts;  // per user, accepted sessions
};

/// Registers spec.users synthetic users and runs spec.sessions legitimate
/// sessions each. With `out`, writes config.json, users.json, store.jsonl,
/// transcripts/<user>.json and traces/<user>/<session>-<round>.jsonl.
SimulationResult simulate(const SimulationSpec& spec,
                          const std::optional<std::filesystem::path>& out = std::nullopt);

nlohmann::json to_json(const HandwritingStyle& style);

}  // namespace behaviocog
