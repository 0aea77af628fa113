#include "behaviocog/attacks/frequency.hpp"

#include <algorithm>
#include <map>

#include "behaviocog/attacks/stats.hpp"
#include "behaviocog/combinatorics.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

struct Counts {
  std::uint64_t appearances = 0;
  std::vector<std::uint64_t> by_response;
};

template <typename Visit>
void for_each_tuple(std::vector<ObjectId> shown, int delta, Visit&& visit) {
  std::sort(shown.begin(), shown.end());
  const int l = static_cast<int>(shown.size());
  if (delta > l) return;
  std::vector<int> idx(static_cast<std::size_t>(delta));
  for (int i = 0; i < delta; ++i) idx[i] = i;
  std::vector<ObjectId> tuple(static_cast<std::size_t>(delta));
  while (true) {
    for (int i = 0; i < delta; ++i) tuple[i] = shown[static_cast<std::size_t>(idx[i])];
    visit(tuple);
    int i = delta - 1;
    while (i >= 0 && idx[i] == l - delta + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < delta; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FrequencyReport frequency_analysis(const Transcript& t, int delta, FrequencyMode mode,
                                   double alpha) {
  const auto& p = t.params;
  if (delta < 1 || delta > p.l) throw ConfigError("delta must lie in [1, l]");

  FrequencyReport report;
  report.delta = delta;
  report.mode = mode;
  report.alpha = alpha;
  report.degrees_of_freedom = mode == FrequencyMode::rdfa ? p.d - 1 : 1;
  report.critical_value = chi_square_critical(report.degrees_of_freedom, alpha);

  const std::size_t d = static_cast<std::size_t>(p.d);
  std::map<std::vector<ObjectId>, Counts> table;
  if (delta == 1)
    for (ObjectId id = 0; id < p.n; ++id) table[{id}].by_response.assign(d, 0);

  std::vector<std::uint64_t> marginal(d, 0);
  for (const auto& round : t.rounds) {
    ++marginal[static_cast<std::size_t>(round.response)];
    for_each_tuple(round.challenge.objects, delta, [&](const std::vector<ObjectId>& tuple) {
      auto& c = table[tuple];
      if (c.by_response.empty()) c.by_response.assign(d, 0);
      ++c.appearances;
      ++c.by_response[static_cast<std::size_t>(round.response)];
    });
  }

  const double m = static_cast<double>(t.rounds.size());
  report.response_marginal.assign(d, 0.0);
  if (m > 0)
    for (std::size_t r = 0; r < d; ++r) report.response_marginal[r] = marginal[r] / m;

  // Chance that a fixed delta-tuple is shown in one round.
  const double q = static_cast<double>(hypergeom(p.n, delta, p.l, delta));

  for (auto& [tuple, c] : table) {
    TupleStats s;
    s.tuple = tuple;
    s.appearances = c.appearances;
    if (mode == FrequencyMode::rifa) {
      const double expected = m * q;
      const double var = expected * (1.0 - q);
      if (var > 0.0) {
        const double diff = static_cast<double>(c.appearances) - expected;
        s.statistic = diff * diff / var;
      }
    } else {
      const double a = static_cast<double>(c.appearances);
      for (std::size_t r = 0; r < d; ++r) {
        const double expected = a * report.response_marginal[r];
        if (expected <= 0.0) continue;
        const double diff = static_cast<double>(c.by_response[r]) - expected;
        s.statistic += diff * diff / expected;
      }
      s.by_response = std::move(c.by_response);
    }
    s.flagged = s.statistic > report.critical_value;
    if (s.flagged) ++report.flagged;
    report.tuples.push_back(std::move(s));
  }
  return report;
}

nlohmann::json to_json(const FrequencyReport& report, bool include_tuples) {
  nlohmann::json j = {
      {"delta", report.delta},
      {"mode", report.mode == FrequencyMode::rdfa ? "rdfa" : "rifa"},
      {"alpha", report.alpha},
      {"degrees_of_freedom", report.degrees_of_freedom},
      {"critical_value", report.critical_value},
      {"response_marginal", report.response_marginal},
      {"flagged", report.flagged},
  };
  if (include_tuples) {
    auto& tuples = j["tuples"] = nlohmann::json::array();
    for (const auto& s : report.tuples) {
      nlohmann::json e = {{"tuple", s.tuple}, {"appearances", s.appearances},
                          {"statistic", s.statistic}, {"flagged", s.flagged}};
      if (!s.by_response.empty()) e["by_response"] = s.by_response;
      tuples.push_back(std::move(e));
    }
  }
  return j;
}

}  // namespace behaviocog
