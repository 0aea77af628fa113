#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "behaviocog/attacks/enumeration.hpp"
#include "behaviocog/cognitive/transcript.hpp"
#include "json.hpp"

namespace behaviocog {

struct LinearizationOptions {
  // Cap on binary assignments of the free coordinates that are scanned.
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
};

struct RecoveryResult {
  std::optional<Secret> secret;
  std::string failure;     // reason when `secret` is empty
  std::vector<int> slack;  // slack-variable values, one per response-1 round
  AttackWork work;
  nlohmann::json stats = nlohmann::json::object();
};

// Linearization over the prime field Z_d.
//
// Every round answered 0 gives a congruence w . x = 0 (mod d), empty-case
// rounds included since their pass-object weights are all absent. The planted
// indicator vector lies in the nullspace, so the system has rank at most
// n - 1. The nullspace is scanned over binary values of its free
// coordinates (any binary solution has binary free coordinates); a unique
// weight-k solution consistent with the whole transcript is the secret.
//
/// Throws UnsupportedModulus for composite d and DataError when the
/// transcript admits no weight-k binary solution at all.
RecoveryResult ge_recover(const Transcript& transcript, LinearizationOptions options = {});

// d = 2 variant keeping every round: response-1 rows carry a private slack
// variable (1 exactly on empty-case rows). Slack columns are eliminated first.
/// Throws ConfigError unless d = 2, DataError on an inconsistent system.
RecoveryResult ge_slack_recover(const Transcript& transcript, LinearizationOptions options = {});

/// Fraction of `reps` random n x n challenge-weight matrices of full rank
/// over Z_d. Rows hold l uniform weights at l random positions. Deterministic
/// in `seed` regardless of thread count.
double monte_carlo_full_rank(int d, int l, int n, int reps, std::uint64_t seed,
                             unsigned threads = 0);

}  // namespace behaviocog
