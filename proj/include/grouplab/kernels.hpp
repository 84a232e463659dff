#pragma once

// Exhaustive enumeration kernels. Each kernel has a serial reference
// implementation and an OpenMP implementation that must return identical
// results; tests compare the two and bench/ times them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grouplab/algebra.hpp"

namespace grouplab::kernels {

/// All F_p-combinations of a basis, point idx given by its base-p digits
/// (digit 0 least significant).
struct SearchSpace {
  std::vector<Vec> basis;
  Residue p = 3;
  int dimension = 0;  // length of each vector
  long long size = 1;

  void point(long long idx, std::span<Residue> out) const;
};

/// Throws Error{BoundExceeded} if p^|basis| > bound.
SearchSpace make_space(const AlgebraContext& ctx, std::vector<Vec> basis, long long bound);

/// Flat row-major storage of equal-length coefficient vectors.
struct Flat {
  int width = 0;
  Vec data;

  std::size_t count() const { return width == 0 ? 0 : data.size() / width; }
  std::span<const Residue> operator[](std::size_t i) const { return {data.data() + i * width, static_cast<std::size_t>(width)}; }
};

struct UnitsAndInverses {
  Flat units;
  Flat inverses;
};

namespace serial {
UnitsAndInverses enumerate_units(const AlgebraContext& ctx, const SearchSpace& space);
}
namespace parallel {
UnitsAndInverses enumerate_units(const AlgebraContext& ctx, const SearchSpace& space);
}

/// A word as (argument slot, exponent) letters.
struct RawWord {
  std::vector<std::pair<int, int>> letters;
  int arity = 0;
};

/// Evaluates words on tuples of enumerated units with caller-owned scratch.
class WordEvaluator {
 public:
  WordEvaluator(const AlgebraContext& ctx, const UnitsAndInverses& set, const RawWord& word);
  /// True when the word evaluates to 1 on the tuple of unit indices.
  bool is_identity_at(std::span<const int> tuple);
  /// Evaluates into out.
  void evaluate(std::span<const int> tuple, std::span<Residue> out);

 private:
  const AlgebraContext& ctx_;
  const UnitsAndInverses& set_;
  const RawWord& word_;
  Vec acc_, tmp_;
};

/// Lexicographically least tuple (first slot most significant) on which the
/// word is not 1, or nullopt. Tuple count must fit the caller's bound.
namespace serial {
std::optional<std::vector<int>> first_failing_tuple(const AlgebraContext& ctx, const UnitsAndInverses& set,
                                                    const RawWord& word);
}
namespace parallel {
std::optional<std::vector<int>> first_failing_tuple(const AlgebraContext& ctx, const UnitsAndInverses& set,
                                                    const RawWord& word);
}

/// Least n <= n_max with (u,v)^(p^n) = 1 for every ordered pair, or nullopt.
namespace serial {
std::optional<int> commutator_exponent(const AlgebraContext& ctx, const UnitsAndInverses& set, int n_max);
}
namespace parallel {
std::optional<int> commutator_exponent(const AlgebraContext& ctx, const UnitsAndInverses& set, int n_max);
}

int max_threads();

}  // namespace grouplab::kernels
