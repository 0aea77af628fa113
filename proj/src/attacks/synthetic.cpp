#include "behaviocog/attacks/synthetic.hpp"

namespace behaviocog {

PlantedTranscript plant_transcript(const SchemeParams& params, const Secret& secret, int rounds,
                                   Rng& rng, EmptyCasePolicy policy) {
  PlantedTranscript out{Transcript{params, {}}, secret, {}};
  out.transcript.rounds.reserve(static_cast<std::size_t>(rounds));
  out.empty_case.reserve(static_cast<std::size_t>(rounds));
  for (int i = 0; i < rounds; ++i) {
    Round round{sample_challenge(params, rng), 0};
    const auto sum = weighted_sum(params, secret, round.challenge);
    if (sum) {
      round.response = *sum;
    } else if (policy == EmptyCasePolicy::random_response) {
      round.response = static_cast<int>(rng.below(static_cast<std::uint64_t>(params.d)));
    }
    out.empty_case.push_back(!sum.has_value());
    out.transcript.rounds.push_back(std::move(round));
  }
  return out;
}

PlantedTranscript plant_transcript(const SchemeParams& params, int rounds, Rng& rng,
                                   EmptyCasePolicy policy) {
  const Secret secret = sample_secret(params, rng);
  return plant_transcript(params, secret, rounds, rng, policy);
}

bool consistent_with(const Transcript& transcript, const Secret& candidate) {
  for (const auto& round : transcript.rounds)
    if (verify_response(transcript.params, candidate, round.challenge, round.response) ==
        VerifyOutcome::wrong)
      return false;
  return true;
}

}  // namespace behaviocog
