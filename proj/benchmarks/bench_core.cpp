#include <benchmark/benchmark.h>

#include "frobkit/cartier.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/groebner.hpp"
#include "frobkit/koszul.hpp"
#include "frobkit/parse.hpp"
#include "frobkit/verify/random.hpp"

using namespace frobkit;

namespace {

std::vector<Polynomial> cyclic(const RingPtr& r, std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t d = 1; d < n; ++d) {
    Polynomial sum(r);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial prod = Polynomial::constant(r, 1);
      for (std::size_t j = 0; j < d; ++j) prod *= Polynomial::variable(r, (i + j) % n);
      sum += prod;
    }
    out.push_back(sum);
  }
  Polynomial all = Polynomial::constant(r, 1);
  for (std::size_t i = 0; i < n; ++i) all *= Polynomial::variable(r, i);
  out.push_back(all - Polynomial::constant(r, 1));
  return out;
}

RingPtr vars(std::uint32_t p, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return Ring::create(Field::prime(p), names);
}

}  // namespace

static void BM_BuchbergerCyclic(benchmark::State& state) {
  const auto ring = vars(97, static_cast<std::size_t>(state.range(0)));
  const auto gens = cyclic(ring, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ring, gens).size());
}
BENCHMARK(BM_BuchbergerCyclic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CartierVolume(benchmark::State& state) {
  verify::Rng rng(1);
  const auto r = vars(static_cast<std::uint32_t>(state.range(0)), 3);
  const Polynomial f = verify::random_polynomial(rng, r, 30, 200);
  for (auto _ : state) benchmark::DoNotOptimize(cartier_volume(f).size());
}
BENCHMARK(BM_CartierVolume)->Arg(2)->Arg(3)->Arg(5);

static void BM_KappaApply(benchmark::State& state) {
  verify::Rng rng(2);
  const auto r = vars(3, 2);
  const auto m = verify::random_free_cartier(rng, r, static_cast<std::size_t>(state.range(0)), 4);
  const FreeVector v = verify::random_vector(rng, r, m.rank(), 12, 20);
  for (auto _ : state) benchmark::DoNotOptimize(kappa_apply(m, v).rank());
}
BENCHMARK(BM_KappaApply)->Arg(1)->Arg(2)->Arg(3);

static void BM_StableImagePullback(benchmark::State& state) {
  verify::Rng rng(3);
  const auto r = vars(2, 2);
  const auto im = ClosedImmersion::create(QuotientContext::ambient(r),
                                          {parse_polynomial(r, "x0^3 + x1^2"), parse_polynomial(r, "x1^3")});
  const auto m = cartier_pullback(verify::random_free_cartier(rng, r, static_cast<std::size_t>(state.range(0)), 3), im);
  for (auto _ : state) benchmark::DoNotOptimize(stable_image(m).index);
}
BENCHMARK(BM_StableImagePullback)->Arg(1)->Arg(2);

static void BM_SemilinearNilpotent(benchmark::State& state) {
  verify::Rng rng(4);
  const auto k = Field::extension(2, 4);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const SemilinearEndo t{k, verify::random_matrix(rng, *k, d, d), Direction::Inverse};
  for (auto _ : state) benchmark::DoNotOptimize(semilinear_nilpotent(t).index);
}
BENCHMARK(BM_SemilinearNilpotent)->Arg(8)->Arg(32);
BENCHMARK_MAIN();
