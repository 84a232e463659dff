#include "kernels_internal.hpp"

#include <algorithm>
#include <string>

#include "grouplab/error.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace grouplab::kernels {

void SearchSpace::point(long long idx, std::span<Residue> out) const {
  std::fill(out.begin(), out.end(), 0);
  for (const auto& b : basis) {
    const Residue d = static_cast<Residue>(idx % p);
    idx /= p;
    if (d == 0) continue;
    for (int g = 0; g < dimension; ++g)
      if (b[g] != 0) out[g] = static_cast<Residue>((out[g] + static_cast<std::uint64_t>(d) * b[g]) % p);
  }
}

SearchSpace make_space(const AlgebraContext& ctx, std::vector<Vec> basis, long long bound) {
  SearchSpace s;
  s.p = ctx.p();
  s.dimension = ctx.dimension();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    s.size *= s.p;
    if (s.size > bound)
      throw Error(ErrorKind::BoundExceeded, "search space p^" + std::to_string(basis.size()) + " exceeds bound " +
                                                std::to_string(bound));
  }
  s.basis = std::move(basis);
  return s;
}

WordEvaluator::WordEvaluator(const AlgebraContext& ctx, const UnitsAndInverses& set, const RawWord& word)
    : ctx_(ctx), set_(set), word_(word), acc_(ctx.dimension()), tmp_(ctx.dimension()) {}

void WordEvaluator::evaluate(std::span<const int> tuple, std::span<Residue> out) {
  const auto& g = *ctx_.group();
  std::fill(acc_.begin(), acc_.end(), 0);
  acc_[g.identity()] = 1;
  for (const auto& [slot, exp] : word_.letters) {
    const auto factor = exp > 0 ? set_.units[tuple[slot]] : set_.inverses[tuple[slot]];
    for (int r = 0; r < (exp > 0 ? exp : -exp); ++r) {
      convolve(g, ctx_.field(), acc_, factor, tmp_);
      acc_.swap(tmp_);
    }
  }
  std::copy(acc_.begin(), acc_.end(), out.begin());
}

bool WordEvaluator::is_identity_at(std::span<const int> tuple) {
  evaluate(tuple, tmp_);
  const Element e = ctx_.group()->identity();
  for (int x = 0; x < ctx_.dimension(); ++x)
    if (tmp_[x] != (x == e ? 1u : 0u)) return false;
  return true;
}

void decode_tuple(long long t, long long base, std::span<int> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<int>(t % base);
    t /= base;
  }
}

PairScratch::PairScratch(int n) : a(n), b(n), c(n), t(n) {}

int pair_exponent(const AlgebraContext& ctx, const UnitsAndInverses& set, std::size_t i, std::size_t j, int n_max,
                  PairScratch& s) {
  const auto& g = *ctx.group();
  const auto& f = ctx.field();
  // (u,v) = u^-1 v^-1 u v
  convolve(g, f, set.inverses[i], set.inverses[j], s.a);
  convolve(g, f, set.units[i], set.units[j], s.b);
  convolve(g, f, s.a, s.b, s.c);
  const Element e = g.identity();
  auto is_one = [&](const Vec& v) {
    for (int x = 0; x < ctx.dimension(); ++x)
      if (v[x] != (x == e ? 1u : 0u)) return false;
    return true;
  };
  for (int n = 0; n <= n_max; ++n) {
    if (is_one(s.c)) return n;
    if (n == n_max) break;
    // c <- c^p by square-and-multiply
    std::fill(s.a.begin(), s.a.end(), 0);
    s.a[e] = 1;
    for (std::uint64_t k = ctx.p(); k > 0; k >>= 1) {
      if (k & 1) {
        convolve(g, f, s.a, s.c, s.t);
        s.a.swap(s.t);
      }
      if (k > 1) {
        convolve(g, f, s.c, s.c, s.t);
        s.c.swap(s.t);
      }
    }
    s.c.swap(s.a);
  }
  return -1;
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace grouplab::kernels
