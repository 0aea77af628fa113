#include "behaviocog/cognitive/scheme.hpp"

#include <algorithm>
#include <numeric>

#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

// First `count` entries of a partial Fisher-Yates shuffle of [0, n).
std::vector<ObjectId> random_arrangement(int n, int count, Rng& rng) {
  std::vector<ObjectId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

}  // namespace

Secret::Secret(std::vector<ObjectId> objects, const SchemeParams& params)
    : objects_(std::move(objects)), member_(static_cast<std::size_t>(params.n), false) {
  if (static_cast<int>(objects_.size()) != params.k)
    throw ConfigError("secret must contain exactly k objects");
  for (ObjectId id : objects_) {
    if (id < 0 || id >= params.n) throw ConfigError("secret object id out of range");
    if (member_[static_cast<std::size_t>(id)]) throw ConfigError("secret objects must be distinct");
    member_[static_cast<std::size_t>(id)] = true;
  }
  std::sort(objects_.begin(), objects_.end());
}

std::vector<std::uint8_t> Secret::indicator() const {
  return {member_.begin(), member_.end()};
}

const char* to_string(VerifyOutcome outcome) {
  switch (outcome) {
    case VerifyOutcome::correct: return "correct";
    case VerifyOutcome::wrong: return "wrong";
    case VerifyOutcome::empty_case_any: return "empty-any";
  }
  return "?";
}

void validate(const Challenge& c, const SchemeParams& params) {
  if (static_cast<int>(c.objects.size()) != params.l || c.weights.size() != c.objects.size())
    throw DataError("challenge must hold exactly l objects and l weights");
  std::vector<bool> seen(static_cast<std::size_t>(params.n), false);
  for (ObjectId id : c.objects) {
    if (id < 0 || id >= params.n) throw DataError("challenge object id out of range");
    if (seen[static_cast<std::size_t>(id)]) throw DataError("challenge objects must be distinct");
    seen[static_cast<std::size_t>(id)] = true;
  }
  for (int w : c.weights)
    if (w < 0 || w >= params.d) throw DataError("challenge weight outside Z_d");
}

Secret sample_secret(const SchemeParams& params, Rng& rng) {
  validate(params);
  return Secret(random_arrangement(params.n, params.k, rng), params);
}

Challenge sample_challenge(const SchemeParams& params, Rng& rng) {
  Challenge c;
  c.objects = random_arrangement(params.n, params.l, rng);
  c.weights.resize(c.objects.size());
  for (auto& w : c.weights) w = static_cast<int>(rng.below(static_cast<std::uint64_t>(params.d)));
  return c;
}

std::optional<int> weighted_sum(const SchemeParams& params, const Secret& secret,
                                const Challenge& challenge) {
  bool hit = false;
  int sum = 0;
  for (std::size_t i = 0; i < challenge.objects.size(); ++i) {
    if (secret.contains(challenge.objects[i])) {
      hit = true;
      sum = (sum + challenge.weights[i]) % params.d;
    }
  }
  if (!hit) return std::nullopt;
  return sum;
}

int compute_response(const SchemeParams& params, const Secret& secret,
                     const Challenge& challenge, Rng& rng) {
  if (auto sum = weighted_sum(params, secret, challenge)) return *sum;
  return static_cast<int>(rng.below(static_cast<std::uint64_t>(params.d)));
}

VerifyOutcome verify_response(const SchemeParams& params, const Secret& secret,
                              const Challenge& challenge, int response) {
  if (response < 0 || response >= params.d) throw DataError("response outside Z_d");
  const auto sum = weighted_sum(params, secret, challenge);
  if (!sum) return VerifyOutcome::empty_case_any;
  return *sum == response ? VerifyOutcome::correct : VerifyOutcome::wrong;
}

}  // namespace behaviocog
