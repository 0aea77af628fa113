#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "behaviocog/cognitive/scheme.hpp"
#include "json.hpp"

namespace behaviocog {

struct Round {
  Challenge challenge;
  int response = 0;

  friend bool operator==(const Round&, const Round&) = default;
};

// Observed (challenge, response) history. Serialized as
//   {"params":{"d","k","l","n"},"rounds":[{"a":[..],"w":[..],"r":..}]}
struct Transcript {
  SchemeParams params;
  std::vector<Round> rounds;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

nlohmann::json to_json(const Transcript& transcript);

/// Throws DataError on schema or range violations.
Transcript transcript_from_json(const nlohmann::json& j);

Transcript load_transcript(const std::filesystem::path& path);
void save_transcript(const Transcript& transcript, const std::filesystem::path& path);

}  // namespace behaviocog
