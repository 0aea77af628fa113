#pragma once

#include <cstdint>
#include <vector>

#include "behaviocog/cognitive/scheme.hpp"
#include "behaviocog/cognitive/transcript.hpp"

namespace behaviocog {

struct AttackWork {
  std::uint64_t rows = 0;        // transcript rounds consumed
  std::uint64_t candidates = 0;  // secrets or half-secrets enumerated
};

// Every secret consistent with a transcript, in lexicographic order.
struct CandidateSet {
  std::vector<Secret> candidates;
  AttackWork work;
};

struct EnumerationOptions {
  std::uint64_t max_candidates = 20'000'000;
};

/// Exhaustive consistency filter over all C(n, k) secrets.
/// Throws BudgetExceeded when C(n, k) exceeds the budget.
CandidateSet brute_force_recover(const Transcript& transcript, EnumerationOptions options = {});

// Meet-in-the-middle over ceil(k/2)- and floor(k/2)-sized halves.
//
// Half B is bucketed by the set of rounds it touches. Within a bucket, a
// half A pairs with B exactly when A answers every round outside the
// bucket's mask correctly on its own (or does not touch it) and A's partial
// sums on the masked rounds equal the residuals r - s_B. The second
// condition is a hash lookup. Unions of disjoint matches are deduplicated
// and re-checked against the whole transcript.
/// Throws BudgetExceeded when C(n, ceil(k/2)) exceeds the budget.
CandidateSet mitm_recover(const Transcript& transcript, EnumerationOptions options = {});

}  // namespace behaviocog
