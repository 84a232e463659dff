#include <algorithm>
#include <limits>

#include "kernels_internal.hpp"

namespace grouplab::kernels::parallel {

UnitsAndInverses enumerate_units(const AlgebraContext& ctx, const SearchSpace& space) {
  const int n = ctx.dimension();
  std::vector<unsigned char> hit(static_cast<std::size_t>(space.size), 0);

#pragma omp parallel
  {
    UnitTester tester(ctx);
    Vec a(n);
#pragma omp for schedule(dynamic, 1024)
    for (long long idx = 0; idx < space.size; ++idx) {
      space.point(idx, a);
      hit[static_cast<std::size_t>(idx)] = tester.is_unit(a) ? 1 : 0;
    }
  }

  std::vector<long long> found;
  for (long long idx = 0; idx < space.size; ++idx)
    if (hit[static_cast<std::size_t>(idx)]) found.push_back(idx);

  UnitsAndInverses out{{n, Vec(found.size() * n)}, {n, Vec(found.size() * n)}};
  const long long count = static_cast<long long>(found.size());
#pragma omp parallel
  {
    UnitTester tester(ctx);
    Vec a(n);
#pragma omp for schedule(dynamic, 256)
    for (long long k = 0; k < count; ++k) {
      space.point(found[k], a);
      std::copy(a.begin(), a.end(), out.units.data.begin() + k * n);
      tester.inverse(a, std::span<Residue>(out.inverses.data.data() + k * n, n));
    }
  }
  return out;
}

std::optional<std::vector<int>> first_failing_tuple(const AlgebraContext& ctx, const UnitsAndInverses& set,
                                                    const RawWord& word) {
  const long long m = static_cast<long long>(set.units.count());
  const long long total = tuple_count(set.units.count(), word.arity);
  constexpr long long kBlock = 1 << 14;
  // Blocks are scanned in order; the least failing index inside the first
  // failing block is the lexicographic minimum overall.
  for (long long start = 0; start < total; start += kBlock) {
    const long long stop = std::min(total, start + kBlock);
    long long best = std::numeric_limits<long long>::max();
#pragma omp parallel
    {
      WordEvaluator eval(ctx, set, word);
      std::vector<int> tuple(word.arity);
#pragma omp for reduction(min : best) schedule(static)
      for (long long t = start; t < stop; ++t) {
        if (t >= best) continue;
        decode_tuple(t, m, tuple);
        if (!eval.is_identity_at(tuple)) best = std::min(best, t);
      }
    }
    if (best != std::numeric_limits<long long>::max()) {
      std::vector<int> tuple(word.arity);
      decode_tuple(best, m, tuple);
      return tuple;
    }
  }
  return std::nullopt;
}

std::optional<int> commutator_exponent(const AlgebraContext& ctx, const UnitsAndInverses& set, int n_max) {
  const long long m = static_cast<long long>(set.units.count());
  int worst = 0;
  bool failed = false;
#pragma omp parallel
  {
    PairScratch scratch(ctx.dimension());
#pragma omp for reduction(max : worst) reduction(|| : failed) schedule(dynamic, 16)
    for (long long i = 0; i < m; ++i) {
      if (failed) continue;
      for (long long j = 0; j < m; ++j) {
        const int e = pair_exponent(ctx, set, static_cast<std::size_t>(i), static_cast<std::size_t>(j), n_max, scratch);
        if (e < 0) {
          failed = true;
          break;
        }
        worst = std::max(worst, e);
      }
    }
  }
  if (failed) return std::nullopt;
  return worst;
}

}  // namespace grouplab::kernels::parallel
