#include "behaviocog/cognitive/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "behaviocog/combinatorics.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {

double p_empty(const SchemeParams& p) { return hypergeom_zero(p.n, p.k, p.l); }

double hypergeom_pmf(const SchemeParams& p, int i) {
  if (i < 0 || i > std::min(p.k, p.l)) throw ConfigError("hypergeometric index out of range");
  return hypergeom(p.n, p.k, p.l, i);
}

double p_random_guess(const SchemeParams& p) {
  const double p0 = p_empty(p);
  return p0 + (1.0 - p0) / p.d;
}

double info_theoretic_bound_real(const SchemeParams& p) {
  return -log2_binomial(p.n, p.k) / std::log2(p_random_guess(p));
}

int info_theoretic_bound(const SchemeParams& p) {
  return static_cast<int>(std::lround(info_theoretic_bound_real(p)));
}

double expected_surviving_candidates(const SchemeParams& p, int m) {
  if (m < 0) throw ConfigError("observed round count must be non-negative");
  const double log2_count = log2_binomial(p.n, p.k) + m * std::log2(p_random_guess(p));
  return std::exp2(log2_count);
}

ComplexityBits complexity_bits(const SchemeParams& p) {
  return {log2_binomial(p.n, p.k), log2_binomial(p.n, p.k / 2.0)};
}

namespace {

int secret_bits(const SchemeParams& p) {
  return static_cast<int>(std::floor(log2_binomial(p.n, p.k)));
}

}  // namespace

double ch_time_bits(const SchemeParams& p, int xi) {
  const int bits = secret_bits(p);
  return bits - log2_binomial(bits, xi);
}

double ch_epsilon(const SchemeParams& p, int xi) {
  const double bits = secret_bits(p);
  const double used = static_cast<double>(p.l) / p.n * bits;
  const double denom = binomial_real(bits, used);
  const double near = binomial_real(bits - xi + 1, used) / denom;
  const double far = binomial_real(bits - xi - 1, used) / denom;
  return (near - far) * (1.0 - 1.0 / p.d);
}

ChEstimate ch_attack_estimate(const SchemeParams& p, double time_budget_bits) {
  if (!(time_budget_bits > 0.0)) throw ConfigError("time budget must be positive");
  const int bits = secret_bits(p);

  auto fill = [&](int xi, bool feasible) {
    ChEstimate e;
    e.secret_bits = bits;
    e.xi = xi;
    e.time_bits = ch_time_bits(p, xi);
    e.epsilon = ch_epsilon(p, xi);
    e.feasible = feasible;
    if (e.epsilon > 0.0) {
      const double m = std::ceil(1.0 / (e.epsilon * e.epsilon));
      if (m < 1.8e19) e.required_samples = static_cast<std::uint64_t>(m);
    }
    return e;
  };

  int cheapest = 1;
  for (int xi = 1; xi <= bits; ++xi) {
    const double cost = ch_time_bits(p, xi);
    // costs are quoted at whole-bit precision
    if (std::round(cost) <= time_budget_bits) return fill(xi, true);
    if (cost < ch_time_bits(p, cheapest)) cheapest = xi;
  }
  return fill(cheapest, false);
}

double combined_security(double p_rg, double fpr_bar, int gamma) {
  return std::pow(p_rg * fpr_bar, gamma);
}

std::vector<AnalysisRow> security_table(std::span<const SecurityRowInput> rows, double fpr_bar,
                                        std::span<const int> gammas) {
  if (!(fpr_bar > 0.0 && fpr_bar <= 1.0)) throw ConfigError("fpr_bar must lie in (0, 1]");
  std::vector<AnalysisRow> out;
  out.reserve(rows.size());
  for (const auto& in : rows) {
    validate(in.params);
    AnalysisRow row;
    row.params = in.params;
    row.p_empty = p_empty(in.params);
    row.p_rg = p_random_guess(in.params);
    row.m_it = info_theoretic_bound(in.params);
    const auto bits = complexity_bits(in.params);
    row.bf_bits = bits.brute_force;
    row.mitm_bits = bits.meet_in_middle;
    row.ch = ch_attack_estimate(in.params, in.ch_budget_bits);
    row.ch_samples = row.ch.required_samples
                         ? std::max<std::uint64_t>(*row.ch.required_samples,
                                                   static_cast<std::uint64_t>(row.m_it))
                         : std::numeric_limits<std::uint64_t>::max();
    row.ge_samples = static_cast<std::uint64_t>(in.params.d) *
                     static_cast<std::uint64_t>(in.params.n);
    for (int g : gammas) {
      if (g < 1) throw ConfigError("gamma must be at least 1");
      row.combined.emplace_back(g, combined_security(row.p_rg, fpr_bar, g));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<SecurityRowInput> reference_rows() {
  return {
      {new_params(5, 5, 24, 60), 11.0},
      {new_params(5, 10, 30, 130), 33.0},
      {new_params(5, 14, 30, 180), 40.0},
      {new_params(5, 18, 30, 225), 51.0},
  };
}

nlohmann::json to_json(const ChEstimate& e) {
  nlohmann::json j = {{"secret_bits", e.secret_bits}, {"xi", e.xi},           {"time_bits", e.time_bits},
                      {"epsilon", e.epsilon},         {"feasible", e.feasible}};
  j["required_samples"] = e.required_samples ? nlohmann::json(*e.required_samples) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const AnalysisRow& row) {
  const auto& p = row.params;
  nlohmann::json j = {{"params", {{"d", p.d}, {"k", p.k}, {"l", p.l}, {"n", p.n}}},
                      {"p_empty", row.p_empty},
                      {"p_rg", row.p_rg},
                      {"m_it", row.m_it},
                      {"bf_bits", row.bf_bits},
                      {"mitm_bits", row.mitm_bits},
                      {"ch", to_json(row.ch)},
                      {"ge_samples", row.ge_samples}};
  j["ch_samples"] = row.ch_samples == std::numeric_limits<std::uint64_t>::max()
                        ? nlohmann::json(nullptr)
                        : nlohmann::json(row.ch_samples);
  auto& combined = j["combined"] = nlohmann::json::array();
  for (const auto& [gamma, value] : row.combined) combined.push_back({{"gamma", gamma}, {"security", value}});
  return j;
}

}  // namespace behaviocog
