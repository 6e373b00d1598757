// Microbenchmarks for the hot paths: coloring matrices, Kronecker products,
// gluing, hom-set enumeration, theory evaluation, and exact inversion.

#include <benchmark/benchmark.h>

#include <random>

#include "onecob/brauer.hpp"
#include "onecob/cobordism.hpp"
#include "onecob/exact_matrix.hpp"
#include "onecob/tqft.hpp"

namespace {

using namespace onecob;

Endpoint in(std::size_t i) { return Endpoint{Side::In, i}; }
Endpoint out(std::size_t i) { return Endpoint{Side::Out, i}; }

Cobordism example_k() {
  return Cobordism(SignedObject("+--+"), SignedObject("+-"),
                   {{in(0), in(1)}, {in(2), out(1)}, {in(3), out(0)}}, 0);
}

void BM_ColoringMatrix(benchmark::State& state) {
  const Cobordism k = example_k();
  const unsigned p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coloring_matrix(k, p));
  }
}
BENCHMARK(BM_ColoringMatrix)->Arg(2)->Arg(3)->Arg(5);

void BM_Kron(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_rational_matrix(rng, n, n);
  const ExactMatrix b = random_rational_matrix(rng, 4, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(8)->Arg(16);

void BM_Compose(benchmark::State& state) {
  const Cobordism k = example_k();
  const Cobordism l(SignedObject("+-"), SignedObject("+-"),
                    {{in(0), in(1)}, {out(0), out(1)}}, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(k, l));
  }
}
BENCHMARK(BM_Compose);

void BM_EnumerateHomset(benchmark::State& state) {
  const SignedObject a("+-+-");
  const SignedObject b("+-+-");
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_homset(a, b, 1));
  }
}
BENCHMARK(BM_EnumerateHomset);

void BM_TqftEval(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const StrictTqft theory(random_invertible_matrix(rng, 2));
  const Cobordism k = example_k();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tqft_eval(theory, k));
  }
}
BENCHMARK(BM_TqftEval);

void BM_Inverse(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const ExactMatrix x = random_invertible_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(x));
  }
}
BENCHMARK(BM_Inverse)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
