#include "behaviocog/attacks/linearization.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <thread>

#include "behaviocog/attacks/synthetic.hpp"
#include "behaviocog/attacks/zmod.hpp"
#include "behaviocog/combinatorics.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

// Binary solutions of a reduced system whose secret columns are
// [x_begin, x_begin + n) and must carry exactly k ones.
struct BinaryScan {
  std::vector<std::vector<std::uint8_t>> solutions;
  std::uint64_t scanned = 0;
  bool complete = true;
};

class BinaryScanner {
 public:
  BinaryScanner(const Echelon& e, const PrimeField& f, int x_begin, int n, int k)
      : e_(e), f_(f), x_begin_(x_begin), x_end_(x_begin + n), k_(k) {}

  double log2_assignments() const {
    int free_x = 0;
    for (int c : e_.free_cols)
      if (c >= x_begin_ && c < x_end_) ++free_x;
    const int free_other = static_cast<int>(e_.free_cols.size()) - free_x;
    long double total = 0.0L;
    for (int j = 0; j <= std::min(k_, free_x); ++j) total += binomial_real(free_x, j);
    return static_cast<double>(std::log2(total)) + free_other;
  }

  BinaryScan run(std::uint64_t budget) {
    BinaryScan out;
    if (log2_assignments() > std::log2(static_cast<double>(budget))) {
      out.complete = false;
      return out;
    }
    acc_.assign(static_cast<std::size_t>(e_.rank), 0);
    for (int i = 0; i < e_.rank; ++i)
      acc_[i] = e_.rhs.empty() ? 0 : e_.rhs[static_cast<std::size_t>(i)];
    values_.assign(static_cast<std::size_t>(e_.reduced.cols()), 0);
    recurse(0, 0, out);
    return out;
  }

 private:
  bool is_x(int col) const { return col >= x_begin_ && col < x_end_; }

  void recurse(std::size_t depth, int free_weight, BinaryScan& out) {
    if (depth == e_.free_cols.size()) {
      ++out.scanned;
      int weight = free_weight;
      for (int i = 0; i < e_.rank; ++i) {
        if (acc_[i] > 1) return;
        if (is_x(e_.pivot_cols[i])) weight += acc_[i];
      }
      if (weight != k_) return;
      for (int i = 0; i < e_.rank; ++i) values_[e_.pivot_cols[i]] = acc_[i];
      out.solutions.push_back(values_);
      return;
    }
    const int col = e_.free_cols[depth];
    values_[col] = 0;
    recurse(depth + 1, free_weight, out);
    if (is_x(col) && free_weight == k_) return;
    values_[col] = 1;
    for (int i = 0; i < e_.rank; ++i) acc_[i] = f_.sub(acc_[i], e_.reduced.at(i, col));
    recurse(depth + 1, free_weight + (is_x(col) ? 1 : 0), out);
    for (int i = 0; i < e_.rank; ++i) acc_[i] = f_.add(acc_[i], e_.reduced.at(i, col));
    values_[col] = 0;
  }

  const Echelon& e_;
  const PrimeField& f_;
  int x_begin_;
  int x_end_;
  int k_;
  std::vector<std::uint8_t> acc_;
  std::vector<std::uint8_t> values_;
};

std::vector<int> support(const std::vector<std::uint8_t>& values, int begin, int n) {
  std::vector<int> ids;
  for (int i = 0; i < n; ++i)
    if (values[static_cast<std::size_t>(begin + i)]) ids.push_back(i);
  return ids;
}

void dense_row(ZmodMatrix& m, int r, int offset, const Challenge& c) {
  for (std::size_t i = 0; i < c.objects.size(); ++i)
    m.at(r, offset + c.objects[i]) = static_cast<std::uint8_t>(c.weights[i]);
}

// Shared tail: keep transcript-consistent weight-k solutions and decide.
RecoveryResult conclude(const Transcript& t, const Echelon& e, BinaryScan scan, int x_begin,
                        std::uint64_t rows, const char* more_rounds_hint) {
  const auto& p = t.params;
  RecoveryResult out;
  out.work.rows = rows;
  out.work.candidates = scan.scanned;
  out.stats["rank"] = e.rank;
  out.stats["nullspace_dim"] = e.free_cols.size();
  out.stats["scanned"] = scan.scanned;

  if (!scan.complete) {
    out.failure = std::string("underdetermined: nullspace dimension ") +
                  std::to_string(e.free_cols.size()) + " is beyond the scan budget; " +
                  more_rounds_hint;
    return out;
  }

  std::vector<std::pair<Secret, std::vector<std::uint8_t>>> consistent;
  for (auto& values : scan.solutions) {
    Secret candidate(support(values, x_begin, p.n), p);
    if (consistent_with(t, candidate)) consistent.emplace_back(std::move(candidate), std::move(values));
  }
  out.stats["solutions"] = consistent.size();
  if (consistent.empty())
    throw DataError("no binary weight-k solution is consistent with the transcript");
  if (consistent.size() > 1) {
    out.failure = "ambiguous: " + std::to_string(consistent.size()) +
                  " weight-k solutions remain; " + more_rounds_hint;
    return out;
  }
  const auto& values = consistent.front().second;
  for (int c = 0; c < x_begin; ++c) out.slack.push_back(values[static_cast<std::size_t>(c)]);
  out.secret = std::move(consistent.front().first);
  return out;
}

}  // namespace

RecoveryResult ge_recover(const Transcript& t, LinearizationOptions options) {
  const auto& p = t.params;
  const PrimeField field(p.d);

  std::vector<const Round*> zero_rows;
  for (const auto& r : t.rounds)
    if (r.response == 0) zero_rows.push_back(&r);

  ZmodMatrix w(static_cast<int>(zero_rows.size()), p.n);
  for (std::size_t i = 0; i < zero_rows.size(); ++i)
    dense_row(w, static_cast<int>(i), 0, zero_rows[i]->challenge);
  const Echelon e = reduce(std::move(w), {}, field);

  BinaryScanner scanner(e, field, 0, p.n, p.k);
  auto result = conclude(t, e, scanner.run(options.max_candidates), 0, zero_rows.size(),
                         "observe more zero-response rounds");
  result.stats["zero_rows"] = zero_rows.size();
  return result;
}

RecoveryResult ge_slack_recover(const Transcript& t, LinearizationOptions options) {
  const auto& p = t.params;
  if (p.d != 2) throw ConfigError("the slack-variable system is defined for d = 2");
  const PrimeField field(2);

  const int m = static_cast<int>(t.rounds.size());
  int slack_count = 0;
  for (const auto& r : t.rounds) slack_count += r.response;

  // Columns: one slack per response-1 round, then the n secret coordinates.
  ZmodMatrix w(m, slack_count + p.n);
  std::vector<std::uint8_t> rhs(static_cast<std::size_t>(m));
  int slack = 0;
  for (int i = 0; i < m; ++i) {
    const auto& r = t.rounds[static_cast<std::size_t>(i)];
    dense_row(w, i, slack_count, r.challenge);
    if (r.response == 1) w.at(i, slack++) = 1;
    rhs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r.response);
  }
  const Echelon e = reduce(std::move(w), std::move(rhs), field);
  if (!e.consistent) throw DataError("slack-variable system is inconsistent");

  BinaryScanner scanner(e, field, slack_count, p.n, p.k);
  auto result = conclude(t, e, scanner.run(options.max_candidates), slack_count,
                         static_cast<std::uint64_t>(m), "observe more rounds");
  result.stats["slack_variables"] = slack_count;
  return result;
}

double monte_carlo_full_rank(int d, int l, int n, int reps, std::uint64_t seed, unsigned threads) {
  if (n < 1 || l < 1 || l > n) throw ConfigError("need 1 <= l <= n");
  if (reps < 1) throw ConfigError("need at least one repetition");
  const PrimeField field(d);

  auto run_range = [&](int begin, int end) {
    int full = 0;
    std::vector<int> positions(static_cast<std::size_t>(n));
    ZmodMatrix m(n, n);
    for (int rep = begin; rep < end; ++rep) {
      Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(rep));
      m = ZmodMatrix(n, n);
      for (int r = 0; r < n; ++r) {
        std::iota(positions.begin(), positions.end(), 0);
        for (int i = 0; i < l; ++i) {
          const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
          std::swap(positions[i], positions[j]);
          m.at(r, positions[i]) = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(d)));
        }
      }
      if (rank_in_place(m, field) == n) ++full;
    }
    return full;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(reps));
  std::vector<std::future<int>> parts;
  for (unsigned i = 0; i < threads; ++i) {
    const int begin = static_cast<int>(static_cast<long long>(reps) * i / threads);
    const int end = static_cast<int>(static_cast<long long>(reps) * (i + 1) / threads);
    parts.push_back(std::async(std::launch::async, run_range, begin, end));
  }
  int full = 0;
  for (auto& part : parts) full += part.get();
  return static_cast<double>(full) / reps;
}

}  // namespace behaviocog
