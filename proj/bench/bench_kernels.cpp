#include <benchmark/benchmark.h>

#include "grouplab/group_spec.hpp"
#include "grouplab/identity.hpp"
#include "grouplab/kernels.hpp"

using namespace grouplab;

namespace {

ContextPtr context(const std::string& spec, Residue p) {
  const auto g = build_group(spec);
  return AlgebraContext::make(p, make_pair(classical_involution(g), Orientation::trivial(g)));
}

// D6 with t g^-1 t for a reflection t and the sign orientation.
ContextPtr twisted_d6() {
  const auto g = build_group("D6");
  std::vector<Element> image(6);
  for (int x = 0; x < 6; ++x) image[x] = g->mul(g->mul(3, g->inv(x)), 3);
  return AlgebraContext::make(
      3, make_pair(AntiAutomorphism(g, image), Orientation::from_kernel(subgroup_generated(g, std::vector<Element>{1}))));
}

kernels::SearchSpace space_of(const ContextPtr& ctx) {
  std::vector<Vec> basis;
  for (const auto& b : symmetric_basis(ctx)) basis.push_back(b.coeffs());
  return kernels::make_space(*ctx, basis, 10'000'000);
}

template <bool Parallel>
void BM_EnumerateUnits(benchmark::State& state) {
  const auto ctx = context("Q8xC2", 3);
  const auto space = space_of(ctx);
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::enumerate_units(*ctx, space) : kernels::serial::enumerate_units(*ctx, space);
    benchmark::DoNotOptimize(r.units.data.data());
  }
  state.counters["points"] = static_cast<double>(space.size);
}

template <bool Parallel>
void BM_FirstFailingTuple(benchmark::State& state) {
  const auto ctx = context("Q8", 5);
  const auto set = kernels::serial::enumerate_units(*ctx, space_of(ctx));
  const auto word = WordIdentity::commutator().raw();
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::first_failing_tuple(*ctx, set, word)
                      : kernels::serial::first_failing_tuple(*ctx, set, word);
    benchmark::DoNotOptimize(r);
  }
  state.counters["pairs"] = static_cast<double>(set.units.count() * set.units.count());
}

template <bool Parallel>
void BM_CommutatorExponent(benchmark::State& state) {
  const auto ctx = twisted_d6();
  const auto set = kernels::serial::enumerate_units(*ctx, space_of(ctx));
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::commutator_exponent(*ctx, set, 4)
                      : kernels::serial::commutator_exponent(*ctx, set, 4);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_EnumerateUnits<false>)->Name("enumerate_units/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateUnits<true>)->Name("enumerate_units/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstFailingTuple<false>)->Name("first_failing_tuple/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstFailingTuple<true>)->Name("first_failing_tuple/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutatorExponent<false>)->Name("commutator_exponent/serial")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CommutatorExponent<true>)->Name("commutator_exponent/parallel")->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
