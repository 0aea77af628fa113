#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "behaviocog/cognitive/params.hpp"
#include "json.hpp"

namespace behaviocog {

/// Probability that a random challenge shows none of the k pass-objects.
double p_empty(const SchemeParams& params);

/// Probability that exactly `i` pass-objects appear in a challenge.
/// Throws ConfigError for i outside [0, min(k, l)].
double hypergeom_pmf(const SchemeParams& params, int i);

/// Success probability of answering a single round by guessing.
double p_random_guess(const SchemeParams& params);

/// Real-valued number of observed rounds after which one candidate is expected to remain.
double info_theoretic_bound_real(const SchemeParams& params);

/// The bound above rounded to the nearest integer.
int info_theoretic_bound(const SchemeParams& params);

/// Expected count of secrets still consistent with `m` observed rounds.
double expected_surviving_candidates(const SchemeParams& params, int m);

struct ComplexityBits {
  double brute_force;     // log2 C(n, k)
  double meet_in_middle;  // log2 C(n, k/2), real-valued for odd k
};

ComplexityBits complexity_bits(const SchemeParams& params);

// Cost estimate for the Coskun-Herley style attack.
//
// The secret is measured in whole bits, B = floor(log2 C(n, k)). For a
// candidate radius xi the running time is B - log2 C(B, xi) bits and the
// sample count is ceil(1 / eps^2), with
//   eps = (C(B-xi+1, u) - C(B-xi-1, u)) / C(B, u) * (1 - 1/d),  u = (l/n) * B.
// The smallest xi whose cost, at whole-bit precision, fits the budget wins.
struct ChEstimate {
  int secret_bits = 0;
  int xi = 0;
  double time_bits = 0.0;
  double epsilon = 0.0;
  std::optional<std::uint64_t> required_samples;  // nullopt: eps == 0, never separates
  bool feasible = false;  // false: no xi met the budget, fields describe the cheapest xi
};

double ch_time_bits(const SchemeParams& params, int xi);
double ch_epsilon(const SchemeParams& params, int xi);

/// Throws ConfigError when the budget is not positive.
ChEstimate ch_attack_estimate(const SchemeParams& params, double time_budget_bits);

/// (p_rg * fpr_bar)^gamma: chance of passing every round by guessing the
/// response and mimicking its symbol.
double combined_security(double p_rg, double fpr_bar, int gamma);

struct SecurityRowInput {
  SchemeParams params;
  double ch_budget_bits;
};

struct AnalysisRow {
  SchemeParams params;
  double p_empty = 0.0;
  double p_rg = 0.0;
  int m_it = 0;
  double bf_bits = 0.0;
  double mitm_bits = 0.0;
  ChEstimate ch;
  std::uint64_t ch_samples = 0;  // max(required samples, m_it); UINT64_MAX if unbounded
  std::uint64_t ge_samples = 0;  // d * n
  std::vector<std::pair<int, double>> combined;  // (gamma, security)
};

/// Throws ConfigError unless 0 < fpr_bar <= 1.
std::vector<AnalysisRow> security_table(std::span<const SecurityRowInput> rows,
                                        double fpr_bar, std::span<const int> gammas);

/// The four reference parameter sets with their published CH time budgets.
std::vector<SecurityRowInput> reference_rows();

nlohmann::json to_json(const ChEstimate& estimate);
nlohmann::json to_json(const AnalysisRow& row);

}  // namespace behaviocog
