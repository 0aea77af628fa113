#pragma once

#include <vector>

#include "behaviocog/cognitive/scheme.hpp"
#include "behaviocog/cognitive/transcript.hpp"

namespace behaviocog {

// How a simulated user answers a challenge that shows none of their pass-objects.
enum class EmptyCasePolicy {
  random_response,  // the scheme as designed
  answer_zero,      // the flawed variant whose responses skew towards 0
};

// A transcript together with the ground truth that produced it.
struct PlantedTranscript {
  Transcript transcript;
  Secret secret;
  std::vector<bool> empty_case;  // per round
};

PlantedTranscript plant_transcript(const SchemeParams& params, const Secret& secret, int rounds,
                                   Rng& rng,
                                   EmptyCasePolicy policy = EmptyCasePolicy::random_response);

PlantedTranscript plant_transcript(const SchemeParams& params, int rounds, Rng& rng,
                                   EmptyCasePolicy policy = EmptyCasePolicy::random_response);

/// True when `candidate` could have produced every round of the transcript.
bool consistent_with(const Transcript& transcript, const Secret& candidate);

}  // namespace behaviocog
