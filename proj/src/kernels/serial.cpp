#include "kernels_internal.hpp"

namespace grouplab::kernels::serial {

UnitsAndInverses enumerate_units(const AlgebraContext& ctx, const SearchSpace& space) {
  const int n = ctx.dimension();
  UnitsAndInverses out{{n, {}}, {n, {}}};
  UnitTester tester(ctx);
  Vec a(n), inv(n);
  for (long long idx = 0; idx < space.size; ++idx) {
    space.point(idx, a);
    if (!tester.inverse(a, inv)) continue;
    out.units.data.insert(out.units.data.end(), a.begin(), a.end());
    out.inverses.data.insert(out.inverses.data.end(), inv.begin(), inv.end());
  }
  return out;
}

std::optional<std::vector<int>> first_failing_tuple(const AlgebraContext& ctx, const UnitsAndInverses& set,
                                                    const RawWord& word) {
  const long long m = static_cast<long long>(set.units.count());
  const long long total = tuple_count(set.units.count(), word.arity);
  WordEvaluator eval(ctx, set, word);
  std::vector<int> tuple(word.arity);
  for (long long t = 0; t < total; ++t) {
    decode_tuple(t, m, tuple);
    if (!eval.is_identity_at(tuple)) return tuple;
  }
  return std::nullopt;
}

std::optional<int> commutator_exponent(const AlgebraContext& ctx, const UnitsAndInverses& set, int n_max) {
  const std::size_t m = set.units.count();
  PairScratch scratch(ctx.dimension());
  int worst = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int e = pair_exponent(ctx, set, i, j, n_max, scratch);
      if (e < 0) return std::nullopt;
      worst = std::max(worst, e);
    }
  return worst;
}

}  // namespace grouplab::kernels::serial
