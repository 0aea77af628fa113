#pragma once

#include <cstdint>
#include <vector>

#include "behaviocog/cognitive/transcript.hpp"
#include "json.hpp"

namespace behaviocog {

enum class FrequencyMode { rifa, rdfa };

struct TupleStats {
  std::vector<ObjectId> tuple;
  std::uint64_t appearances = 0;
  std::vector<std::uint64_t> by_response;  // RDFA only, length d
  double statistic = 0.0;
  bool flagged = false;
};

struct FrequencyReport {
  int delta = 1;
  FrequencyMode mode = FrequencyMode::rdfa;
  double alpha = 0.01;
  int degrees_of_freedom = 1;
  double critical_value = 0.0;
  std::vector<double> response_marginal;  // observed response frequencies
  std::vector<TupleStats> tuples;         // sorted by tuple
  std::size_t flagged = 0;
};

// Frequency table of delta-tuples of shown objects.
//
// RIFA scores a tuple's appearance count against its binomial expectation
// (1 degree of freedom). RDFA scores the response histogram of the rounds a
// tuple appears in against the transcript's overall response distribution
// (d - 1 degrees of freedom); under the scheme as designed that marginal is
// uniform. A tuple is flagged when its statistic exceeds the chi-square
// critical value at level alpha.
//
// For delta = 1 every object is listed, including unseen ones; larger
// deltas list only tuples that occurred.
FrequencyReport frequency_analysis(const Transcript& transcript, int delta, FrequencyMode mode,
                                   double alpha = 0.01);

nlohmann::json to_json(const FrequencyReport& report, bool include_tuples = true);

}  // namespace behaviocog
