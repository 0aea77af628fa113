#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "behaviocog/attacks/enumeration.hpp"
#include "behaviocog/attacks/frequency.hpp"
#include "behaviocog/attacks/linearization.hpp"
#include "behaviocog/attacks/report.hpp"
#include "behaviocog/attacks/synthetic.hpp"
#include "behaviocog/cognitive/analysis.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

bool contains(const CandidateSet& set, const Secret& s) {
  return std::find(set.candidates.begin(), set.candidates.end(), s) != set.candidates.end();
}

TEST(SyntheticTest, ZeroRowsAnnihilatePlantedSecret) {
  const auto p = new_params(5, 14, 30, 40);
  Rng rng(4);
  const auto planted = plant_transcript(p, 400, rng);
  int zero_empty = 0;
  for (std::size_t i = 0; i < planted.transcript.rounds.size(); ++i) {
    const auto& round = planted.transcript.rounds[i];
    if (round.response != 0) continue;
    int acc = 0;
    for (std::size_t j = 0; j < round.challenge.objects.size(); ++j)
      if (planted.secret.contains(round.challenge.objects[j])) acc += round.challenge.weights[j];
    EXPECT_EQ(acc % 5, 0);
    zero_empty += planted.empty_case[i];
  }
  EXPECT_TRUE(consistent_with(planted.transcript, planted.secret));
  (void)zero_empty;
}

TEST(EnumerationTest, EmptyTranscriptKeepsEverything) {
  const auto p = new_params(3, 2, 3, 6);
  const Transcript t{p, {}};
  EXPECT_EQ(brute_force_recover(t).candidates.size(), 15u);
  EXPECT_EQ(mitm_recover(t).candidates.size(), 15u);
}

TEST(EnumerationTest, BruteForceIsSoundAndNearBound) {
  const auto p = new_params(3, 2, 3, 6);
  const int m = info_theoretic_bound(p);
  double total = 0.0;
  for (int seed = 0; seed < 200; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const auto planted = plant_transcript(p, m, rng);
    const auto set = brute_force_recover(planted.transcript);
    EXPECT_TRUE(contains(set, planted.secret));
    for (const auto& c : set.candidates) EXPECT_TRUE(consistent_with(planted.transcript, c));
    total += static_cast<double>(set.candidates.size());
  }
  const double mean = total / 200;
  EXPECT_GE(mean, 1.0);
  EXPECT_LE(mean, 3.0);
}

TEST(EnumerationTest, MitmMatchesBruteForce) {
  for (int k : {3, 4}) {
    const auto p = new_params(3, k, 6, 12);
    for (int seed = 0; seed < 10; ++seed) {
      for (int m : {0, 5, 15}) {
        Rng rng(static_cast<std::uint64_t>(seed * 100 + m));
        const auto planted = plant_transcript(p, m, rng);
        const auto bf = brute_force_recover(planted.transcript);
        const auto mitm = mitm_recover(planted.transcript);
        EXPECT_EQ(bf.candidates, mitm.candidates) << "k=" << k << " seed=" << seed << " m=" << m;
        EXPECT_TRUE(contains(mitm, planted.secret));
      }
    }
  }
}

TEST(EnumerationTest, BudgetRefusal) {
  const auto p = new_params(5, 14, 30, 180);
  const Transcript t{p, {}};
  try {
    brute_force_recover(t);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_NEAR(e.estimated_log2_work(), complexity_bits(p).brute_force, 1e-6);
  }
  EXPECT_THROW(mitm_recover(t), BudgetExceeded);
}

TEST(LinearizationTest, RecoversPlantedSecret) {
  const auto p = new_params(5, 14, 30, 40);
  int recovered = 0;
  for (int seed = 0; seed < 5; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const auto planted = plant_transcript(p, 5 * p.n, rng);
    const auto result = ge_recover(planted.transcript);
    if (result.secret) {
      EXPECT_EQ(*result.secret, planted.secret);
      ++recovered;
    }
    EXPECT_GE(result.stats["nullspace_dim"].get<int>(), 1);
  }
  EXPECT_GE(recovered, 4);
}

TEST(LinearizationTest, FewRowsAreUnderdetermined) {
  const auto p = new_params(5, 14, 30, 40);
  Rng rng(1);
  const auto planted = plant_transcript(p, 20, rng);
  const auto result = ge_recover(planted.transcript);
  EXPECT_FALSE(result.secret.has_value());
  EXPECT_NE(result.failure.find("underdetermined"), std::string::npos);
}

TEST(LinearizationTest, CorruptTranscriptIsInconsistent) {
  const auto p = new_params(5, 4, 6, 12);
  Rng rng(2);
  Transcript t{p, {}};
  for (int i = 0; i < 120; ++i) t.rounds.push_back({sample_challenge(p, rng), 0});
  EXPECT_THROW(ge_recover(t), DataError);
}

TEST(LinearizationTest, CompositeModulusRejected) {
  const auto p = new_params(4, 3, 6, 12);
  Rng rng(2);
  const auto planted = plant_transcript(p, 50, rng);
  EXPECT_THROW(ge_recover(planted.transcript), UnsupportedModulus);
}

TEST(LinearizationTest, SlackRecoveryAndEmptyCaseFlags) {
  const auto p = new_params(2, 3, 6, 16);
  int recovered = 0;
  for (int seed = 0; seed < 10; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const auto planted = plant_transcript(p, 2 * p.n + 10, rng);
    const auto result = ge_slack_recover(planted.transcript);
    if (!result.secret) continue;
    ++recovered;
    EXPECT_EQ(*result.secret, planted.secret);
    std::size_t s = 0;
    for (std::size_t i = 0; i < planted.transcript.rounds.size(); ++i) {
      if (planted.transcript.rounds[i].response != 1) continue;
      ASSERT_LT(s, result.slack.size());
      EXPECT_EQ(result.slack[s++], planted.empty_case[i] ? 1 : 0);
    }
    EXPECT_EQ(s, result.slack.size());
  }
  EXPECT_GE(recovered, 8);
}

TEST(LinearizationTest, SlackWithoutOnesMatchesPlainElimination) {
  const auto p = new_params(2, 3, 6, 16);
  Rng rng(8);
  const auto planted = plant_transcript(p, 200, rng);
  Transcript zeros{p, {}};
  for (const auto& r : planted.transcript.rounds)
    if (r.response == 0) zeros.rounds.push_back(r);
  const auto plain = ge_recover(zeros);
  const auto slack = ge_slack_recover(zeros);
  EXPECT_EQ(plain.secret, slack.secret);
  EXPECT_TRUE(slack.slack.empty());
  EXPECT_THROW(ge_slack_recover(plant_transcript(new_params(3, 3, 6, 16), 10, rng).transcript),
               ConfigError);
}

TEST(MonteCarloTest, KnownLimits) {
  EXPECT_NEAR(monte_carlo_full_rank(5, 1, 1, 20000, 1), 0.8, 0.02);
  double limit = 1.0;
  for (int i = 1; i <= 8; ++i) limit *= 1.0 - std::pow(5.0, -i);
  EXPECT_NEAR(monte_carlo_full_rank(5, 8, 8, 20000, 2), limit, 0.02);
  EXPECT_EQ(monte_carlo_full_rank(5, 10, 30, 50, 9, 1), monte_carlo_full_rank(5, 10, 30, 50, 9, 4));
  EXPECT_THROW(monte_carlo_full_rank(6, 4, 4, 10, 1), UnsupportedModulus);
}

TEST(FrequencyTest, EmptyTranscript) {
  const auto p = new_params(5, 3, 4, 10);
  const auto report = frequency_analysis(Transcript{p, {}}, 1, FrequencyMode::rdfa);
  ASSERT_EQ(report.tuples.size(), 10u);
  for (const auto& t : report.tuples) {
    EXPECT_EQ(t.appearances, 0u);
    EXPECT_EQ(t.statistic, 0.0);
  }
  EXPECT_EQ(report.flagged, 0u);
}

TEST(FrequencyTest, CountsAreConsistent) {
  const auto p = new_params(5, 3, 4, 10);
  Rng rng(6);
  const auto planted = plant_transcript(p, 500, rng);
  const auto report = frequency_analysis(planted.transcript, 2, FrequencyMode::rdfa);
  std::uint64_t total = 0;
  for (const auto& t : report.tuples) {
    std::uint64_t sum = 0;
    for (auto c : t.by_response) sum += c;
    EXPECT_EQ(sum, t.appearances);
    total += t.appearances;
  }
  EXPECT_EQ(total, 500u * 6u);  // C(4, 2) pairs per round
  EXPECT_EQ(report.degrees_of_freedom, 4);
}

TEST(FrequencyTest, FlawedVariantSeparatesPassObjects) {
  const auto p = new_params(5, 14, 30, 180);
  Rng rng(12);
  const auto planted = plant_transcript(p, 20000, rng, EmptyCasePolicy::answer_zero);
  const auto report = frequency_analysis(planted.transcript, 1, FrequencyMode::rdfa);
  double pass_min = 1e300, decoy_max = 0.0;
  for (const auto& t : report.tuples) {
    if (planted.secret.contains(t.tuple[0]))
      pass_min = std::min(pass_min, t.statistic);
    else
      decoy_max = std::max(decoy_max, t.statistic);
  }
  EXPECT_GT(pass_min, decoy_max);
}

TEST(ReportTest, Shape) {
  const auto p = new_params(3, 2, 3, 6);
  Rng rng(3);
  const auto planted = plant_transcript(p, 30, rng);
  const auto j = attack_report("brute-force", brute_force_recover(planted.transcript));
  EXPECT_EQ(j["attack"], "brute-force");
  EXPECT_TRUE(j.contains("recovered"));
  EXPECT_TRUE(j["work"].contains("rows"));
  EXPECT_TRUE(j["work"].contains("candidates"));
  if (j["recovered"].get<bool>())
    EXPECT_EQ(j["secret"].get<std::vector<int>>(), planted.secret.objects());
  else
    EXPECT_TRUE(j["secret"].is_null());
}

}  // namespace
}  // namespace behaviocog
