#include <benchmark/benchmark.h>

#include <random>

#include "atomspec/filtration.hpp"
#include "atomspec/finspace.hpp"
#include "atomspec/oracles.hpp"
#include "atomspec/pid_modules.hpp"
#include "atomspec/snf.hpp"
#include "atomspec/spectrum.hpp"

namespace {

using namespace atomspec;

void bm_snf_integer(benchmark::State& state) {
  const pid::integer_ring ring;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> ent(-20, 20);
  pid::matrix<pid::integer_ring> m(4, 4, ring.zero());
  for (auto& e : m.a) e = ent(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pid::smith_normal_form(ring, m));
  }
}
BENCHMARK(bm_snf_integer);

void bm_snf_poly(benchmark::State& state) {
  const pid::fp_poly_ring ring(5);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(0, 4);
  pid::matrix<pid::fp_poly_ring> m(4, 4, ring.zero());
  for (auto& e : m.a) e = ring.from_coeffs({coef(rng), coef(rng), 1 + coef(rng) % 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pid::smith_normal_form(ring, m));
  }
}
BENCHMARK(bm_snf_poly);

void bm_generate_topology(benchmark::State& state) {
  const std::vector<std::string> pts{"a", "b", "c", "d"};
  const std::vector<finspace::subset> subbasis{0b0011, 0b0101, 0b1001, 0b1110};
  for (auto _ : state) {
    benchmark::DoNotOptimize(finspace::fin_space::generate(pts, subbasis));
  }
}
BENCHMARK(bm_generate_topology);

void bm_enumerate_topologies(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracles::all_topologies(3));
  }
}
BENCHMARK(bm_enumerate_topologies);

void bm_filtration_builtin(benchmark::State& state) {
  const auto a = spectrum::atom_space::builtin("grmod_kx");
  for (auto _ : state) {
    benchmark::DoNotOptimize(filtration::gabriel_filtration(a));
  }
}
BENCHMARK(bm_filtration_builtin);

void bm_theorem_suite(benchmark::State& state) {
  const auto a = spectrum::atom_space::builtin("goodearl");
  for (auto _ : state) {
    benchmark::DoNotOptimize(filtration::verify_theorems(a));
  }
}
BENCHMARK(bm_theorem_suite);

void bm_adjunction(benchmark::State& state) {
  const auto p = order::preorder::from_generators({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto y = finspace::fin_space::generate({"x", "y"}, {0b01u});
  for (auto _ : state) {
    benchmark::DoNotOptimize(finspace::adjunction_check(p, y));
  }
}
BENCHMARK(bm_adjunction);

void bm_module_analysis(benchmark::State& state) {
  const pid::integer_ring ring;
  const auto m = pid::presented_module<pid::integer_ring>::make(ring, 3,
                                                                {{4, 0, 0}, {0, 6, 0}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pid::analyze(m));
  }
}
BENCHMARK(bm_module_analysis);

}  // namespace

BENCHMARK_MAIN();
