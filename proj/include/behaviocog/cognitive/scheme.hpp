#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "behaviocog/cognitive/params.hpp"
#include "behaviocog/rng.hpp"

namespace behaviocog {

using ObjectId = int;

/// A k-subset of the object pool. Objects are kept sorted.
class Secret {
 public:
  Secret(std::vector<ObjectId> objects, const SchemeParams& params);

  const std::vector<ObjectId>& objects() const { return objects_; }
  int pool_size() const { return static_cast<int>(member_.size()); }
  bool contains(ObjectId id) const {
    return id >= 0 && id < pool_size() && member_[static_cast<std::size_t>(id)];
  }

  /// Binary indicator vector of length n.
  std::vector<std::uint8_t> indicator() const;

  friend bool operator==(const Secret& a, const Secret& b) { return a.objects_ == b.objects_; }

 private:
  std::vector<ObjectId> objects_;
  std::vector<bool> member_;
};

/// One round's challenge: l distinct objects, each paired with a weight in Z_d.
struct Challenge {
  std::vector<ObjectId> objects;
  std::vector<int> weights;

  friend bool operator==(const Challenge&, const Challenge&) = default;
};

enum class VerifyOutcome { correct, wrong, empty_case_any };

const char* to_string(VerifyOutcome outcome);

/// Throws DataError unless the challenge is well-formed under `params`.
void validate(const Challenge& challenge, const SchemeParams& params);

Secret sample_secret(const SchemeParams& params, Rng& rng);

Challenge sample_challenge(const SchemeParams& params, Rng& rng);

/// Sum of pass-object weights mod d, or nullopt in the empty case.
std::optional<int> weighted_sum(const SchemeParams& params, const Secret& secret,
                                const Challenge& challenge);

/// The cognitive function: weighted sum when some pass-object is shown,
/// otherwise a uniform draw from Z_d.
int compute_response(const SchemeParams& params, const Secret& secret,
                     const Challenge& challenge, Rng& rng);

/// Throws DataError when `response` lies outside Z_d.
VerifyOutcome verify_response(const SchemeParams& params, const Secret& secret,
                              const Challenge& challenge, int response);

}  // namespace behaviocog
