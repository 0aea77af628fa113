#include "behaviocog/attacks/zmod.hpp"

#include <utility>

#include "behaviocog/errors.hpp"

namespace behaviocog {

bool is_prime(int value) {
  if (value < 2) return false;
  for (int f = 2; f * f <= value; ++f)
    if (value % f == 0) return false;
  return true;
}

PrimeField::PrimeField(int d) : d_(d) {
  if (d >= 256) throw ConfigError("modulus must be below 256");
  if (!is_prime(d)) throw UnsupportedModulus("Z_" + std::to_string(d) + " is not a field");
  const auto size = static_cast<std::size_t>(d) * d;
  add_.resize(size);
  sub_.resize(size);
  mul_.resize(size);
  inv_.assign(static_cast<std::size_t>(d), 0);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      add_[a * d + b] = static_cast<std::uint8_t>((a + b) % d);
      sub_[a * d + b] = static_cast<std::uint8_t>((a - b + d) % d);
      mul_[a * d + b] = static_cast<std::uint8_t>((a * b) % d);
      if ((a * b) % d == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

Echelon reduce(ZmodMatrix a, std::vector<std::uint8_t> rhs, const PrimeField& f) {
  const bool augmented = !rhs.empty();
  if (augmented && static_cast<int>(rhs.size()) != a.rows())
    throw ConfigError("right-hand side length must equal row count");

  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int found = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.at(i, c) != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != r) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(found, j));
      if (augmented) std::swap(rhs[r], rhs[found]);
    }
    const auto scale = f.inv(a.at(r, c));
    for (int j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), scale);
    if (augmented) rhs[r] = f.mul(rhs[r], scale);

    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const auto factor = a.at(i, c);
      if (factor == 0) continue;
      for (int j = c; j < a.cols(); ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
      if (augmented) rhs[i] = f.sub(rhs[i], f.mul(factor, rhs[r]));
    }
    pivots.push_back(c);
    ++r;
  }

  Echelon e{std::move(a), std::move(rhs), std::move(pivots), {}, r, true};
  std::vector<bool> is_pivot(static_cast<std::size_t>(e.reduced.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int c = 0; c < e.reduced.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) e.free_cols.push_back(c);
  if (augmented)
    for (int i = e.rank; i < e.reduced.rows(); ++i)
      if (e.rhs[i] != 0) e.consistent = false;
  return e;
}

int rank_in_place(ZmodMatrix& a, const PrimeField& f) {
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int found = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.at(i, c) != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != r)
      for (int j = c; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(found, j));
    const auto scale = f.inv(a.at(r, c));
    auto pivot_row = a.row(r);
    for (int j = c; j < a.cols(); ++j) pivot_row[j] = f.mul(pivot_row[j], scale);
    for (int i = r + 1; i < a.rows(); ++i) {
      const auto factor = a.at(i, c);
      if (factor == 0) continue;
      auto target = a.row(i);
      for (int j = c; j < a.cols(); ++j) target[j] = f.sub(target[j], f.mul(factor, pivot_row[j]));
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<std::uint8_t>> nullspace_basis(const Echelon& e, const PrimeField& f) {
  std::vector<std::vector<std::uint8_t>> basis;
  for (int free : e.free_cols) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(e.reduced.cols()), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < e.rank; ++i)
      v[static_cast<std::size_t>(e.pivot_cols[i])] = f.sub(0, e.reduced.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace behaviocog
