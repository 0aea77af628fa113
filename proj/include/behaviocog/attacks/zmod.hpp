#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace behaviocog {

bool is_prime(int value);

// Arithmetic tables for the prime field Z_d, d < 256.
class PrimeField {
 public:
  /// Throws UnsupportedModulus for composite d, ConfigError for d >= 256.
  explicit PrimeField(int d);

  int modulus() const { return d_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * d_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return sub_[a * d_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * d_ + b]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

 private:
  int d_;
  std::vector<std::uint8_t> add_, sub_, mul_, inv_;
};

// Dense row-major matrix over a prime field.
class ZmodMatrix {
 public:
  ZmodMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint8_t& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  std::uint8_t at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  std::span<std::uint8_t> row(int r) { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }
  std::span<const std::uint8_t> row(int r) const {
    return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)};
  }

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> data_;
};

// Reduced row echelon form of [A | b].
struct Echelon {
  ZmodMatrix reduced;             // first `rank` rows are the pivot rows
  std::vector<std::uint8_t> rhs;  // transformed right-hand side
  std::vector<int> pivot_cols;    // pivot column of each of the first `rank` rows
  std::vector<int> free_cols;
  int rank = 0;
  bool consistent = true;         // false if some zero row has a non-zero rhs
};

/// Gauss-Jordan elimination. `rhs` may be empty (homogeneous system).
Echelon reduce(ZmodMatrix a, std::vector<std::uint8_t> rhs, const PrimeField& field);

/// Rank only (forward elimination, no back substitution); destroys `a`.
int rank_in_place(ZmodMatrix& a, const PrimeField& field);

/// One basis vector per free column: that column set to 1, pivots solved.
std::vector<std::vector<std::uint8_t>> nullspace_basis(const Echelon& e, const PrimeField& field);

}  // namespace behaviocog
