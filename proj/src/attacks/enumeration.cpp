#include "behaviocog/attacks/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "behaviocog/attacks/synthetic.hpp"
#include "behaviocog/combinatorics.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

// Round-major lookup: weight of each object in each round, -1 if not shown.
class RoundTable {
 public:
  explicit RoundTable(const Transcript& t)
      : n_(t.params.n), d_(t.params.d), m_(static_cast<int>(t.rounds.size())) {
    weights_.assign(static_cast<std::size_t>(m_) * n_, -1);
    responses_.reserve(t.rounds.size());
    for (int j = 0; j < m_; ++j) {
      const auto& c = t.rounds[j].challenge;
      for (std::size_t i = 0; i < c.objects.size(); ++i)
        weights_[static_cast<std::size_t>(j) * n_ + c.objects[i]] =
            static_cast<std::int16_t>(c.weights[i]);
      responses_.push_back(t.rounds[j].response);
    }
  }

  int rounds() const { return m_; }
  int response(int j) const { return responses_[j]; }
  int weight(int j, int id) const { return weights_[static_cast<std::size_t>(j) * n_ + id]; }

  bool consistent(const std::vector<int>& ids) const {
    for (int j = 0; j < m_; ++j) {
      bool hit = false;
      int sum = 0;
      for (int id : ids) {
        const int w = weight(j, id);
        if (w >= 0) {
          hit = true;
          sum += w;
        }
      }
      if (hit && sum % d_ != responses_[j]) return false;
    }
    return true;
  }

 private:
  int n_;
  int d_;
  int m_;
  std::vector<std::int16_t> weights_;
  std::vector<int> responses_;
};

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  do {
    visit(comb);
  } while (k > 0 && next_combination(comb, n));
}

void check_budget(int n, int k, std::uint64_t budget, const char* what) {
  const auto count = binomial_exact(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (!count || *count > budget)
    throw BudgetExceeded(std::string(what) + ": C(" + std::to_string(n) + ", " +
                             std::to_string(k) + ") exceeds the candidate budget",
                         log2_binomial(n, k));
}

struct Half {
  std::vector<int> ids;
  std::vector<std::uint8_t> sums;  // partial weighted sum per round, mod d
  std::vector<std::uint64_t> mask; // rounds in which the half shows up
};

std::vector<Half> enumerate_halves(const RoundTable& table, int n, int size, int d) {
  const int m = table.rounds();
  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  std::vector<Half> halves;
  for_each_combination(n, size, [&](const std::vector<int>& comb) {
    Half h{comb, std::vector<std::uint8_t>(static_cast<std::size_t>(m), 0),
           std::vector<std::uint64_t>(words, 0)};
    for (int j = 0; j < m; ++j) {
      int sum = 0;
      bool hit = false;
      for (int id : comb) {
        const int w = table.weight(j, id);
        if (w >= 0) {
          hit = true;
          sum += w;
        }
      }
      h.sums[j] = static_cast<std::uint8_t>(sum % d);
      if (hit) h.mask[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    halves.push_back(std::move(h));
  });
  return halves;
}

bool in_mask(const std::vector<std::uint64_t>& mask, int j) {
  return (mask[j / 64] >> (j % 64)) & 1u;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace

CandidateSet brute_force_recover(const Transcript& transcript, EnumerationOptions options) {
  const auto& p = transcript.params;
  check_budget(p.n, p.k, options.max_candidates, "brute force");
  const RoundTable table(transcript);

  CandidateSet out;
  out.work.rows = transcript.rounds.size();
  for_each_combination(p.n, p.k, [&](const std::vector<int>& comb) {
    ++out.work.candidates;
    if (table.consistent(comb)) out.candidates.emplace_back(comb, p);
  });
  return out;
}

CandidateSet mitm_recover(const Transcript& transcript, EnumerationOptions options) {
  const auto& p = transcript.params;
  const int big = (p.k + 1) / 2;
  const int small = p.k / 2;
  check_budget(p.n, big, options.max_candidates, "meet-in-the-middle");

  const RoundTable table(transcript);
  const int m = table.rounds();
  const auto left = enumerate_halves(table, p.n, big, p.d);
  const auto right = small == big ? left : enumerate_halves(table, p.n, small, p.d);

  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < right.size(); ++i) buckets[right[i].mask].push_back(i);

  std::set<std::vector<int>> unions;
  for (const auto& [mask, members] : buckets) {
    std::vector<int> inside, outside;
    for (int j = 0; j < m; ++j) (in_mask(mask, j) ? inside : outside).push_back(j);

    std::unordered_map<std::string, std::vector<std::size_t>> index;
    for (std::size_t a = 0; a < left.size(); ++a) {
      const auto& h = left[a];
      const bool alone_ok = std::all_of(outside.begin(), outside.end(), [&](int j) {
        return !in_mask(h.mask, j) || h.sums[j] == table.response(j);
      });
      if (!alone_ok) continue;
      std::string key(inside.size(), '\0');
      for (std::size_t q = 0; q < inside.size(); ++q) key[q] = static_cast<char>(h.sums[inside[q]]);
      index[key].push_back(a);
    }

    for (std::size_t b : members) {
      const auto& h = right[b];
      std::string key(inside.size(), '\0');
      for (std::size_t q = 0; q < inside.size(); ++q) {
        const int j = inside[q];
        key[q] = static_cast<char>((table.response(j) - h.sums[j] + p.d) % p.d);
      }
      const auto hit = index.find(key);
      if (hit == index.end()) continue;
      for (std::size_t a : hit->second) {
        if (!disjoint(left[a].ids, h.ids)) continue;
        std::vector<int> merged;
        merged.reserve(static_cast<std::size_t>(p.k));
        std::merge(left[a].ids.begin(), left[a].ids.end(), h.ids.begin(), h.ids.end(),
                   std::back_inserter(merged));
        unions.insert(std::move(merged));
      }
    }
  }

  CandidateSet out;
  out.work.rows = transcript.rounds.size();
  out.work.candidates = left.size() + (small == big ? 0 : right.size());
  for (const auto& ids : unions) {
    Secret candidate(ids, p);
    if (consistent_with(transcript, candidate)) out.candidates.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace behaviocog
