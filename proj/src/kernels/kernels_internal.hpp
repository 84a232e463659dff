#pragma once

#include <span>

#include "grouplab/kernels.hpp"

namespace grouplab::kernels {

/// Base-`base` digits of t, most significant first.
void decode_tuple(long long t, long long base, std::span<int> out);

struct PairScratch {
  explicit PairScratch(int n);
  Vec a, b, c, t;
};

/// Least n <= n_max with (u_i, u_j)^(p^n) = 1, or -1.
int pair_exponent(const AlgebraContext& ctx, const UnitsAndInverses& set, std::size_t i, std::size_t j, int n_max,
                  PairScratch& scratch);

inline long long tuple_count(std::size_t units, int arity) {
  long long total = 1;
  for (int i = 0; i < arity; ++i) total *= static_cast<long long>(units);
  return total;
}

}  // namespace grouplab::kernels
