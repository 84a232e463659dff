#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace grouplab {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

/// Arithmetic in Z/p for a word-sized prime p.
class PrimeField {
 public:
  explicit PrimeField(Residue p);

  Residue modulus() const noexcept { return p_; }
  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    if (tiny_) return reduce_tiny(static_cast<std::uint32_t>(prod));
    if (small_) return fastmod(static_cast<std::uint32_t>(prod));
    return static_cast<Residue>(prod % p_);
  }
  Residue inv(Residue a) const { return small_ && a != 0 ? inv_table_[a] : inv_slow(a); }
  Residue pow(Residue a, std::uint64_t e) const;
  /// p < 2^13: x mod p for any x < p (p + 1), by a single multiply-shift.
  bool tiny() const noexcept { return tiny_; }
  Residue reduce_tiny(std::uint32_t x) const noexcept {
    const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * barrett_) >> 42);
    return x - q * p_;
  }
  /// Maps any integer to its residue.
  Residue reduce(long long v) const noexcept {
    const long long m = v % static_cast<long long>(p_);
    return static_cast<Residue>(m < 0 ? m + p_ : m);
  }

 private:
  // Lemire's division-free remainder for 32-bit numerators.
  Residue fastmod(std::uint32_t a) const noexcept {
    const std::uint64_t low = magic_ * a;
    return static_cast<Residue>((static_cast<__uint128_t>(low) * p_) >> 64);
  }
  Residue inv_slow(Residue a) const;

  Residue p_;
  bool small_;  // p < 2^16, so products fit in 32 bits
  bool tiny_;
  std::uint64_t magic_;
  std::uint64_t barrett_;  // floor(2^42 / p) + 1, exact for x p < 2^42
  std::vector<Residue> inv_table_;
};

/// Dense row-major matrix over Z/p.
struct Matrix {
  int rows = 0;
  int cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  Residue& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Residue at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// In-place reduced row echelon form; returns the rank.
int row_reduce(Matrix& m, const PrimeField& f);
int rank(Matrix m, const PrimeField& f);
/// Reduced echelon basis of the span of the given vectors (all of equal length).
std::vector<Vec> span_basis(std::span<const Vec> vectors, const PrimeField& f);
/// Basis of {x : m x = 0}.
std::vector<Vec> kernel_basis(Matrix m, const PrimeField& f);
/// Solves m x = b for square invertible m; nullopt when m is singular.
std::optional<Vec> solve_square(Matrix m, Vec b, const PrimeField& f);
bool is_invertible(Matrix m, const PrimeField& f);

}  // namespace grouplab
