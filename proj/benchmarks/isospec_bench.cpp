#include <benchmark/benchmark.h>

#include "isospec/eigensolver.hpp"
#include "isospec/finite_group.hpp"
#include "isospec/operators.hpp"
#include "isospec/rep_theory.hpp"
#include "isospec/schreier.hpp"
#include "isospec/transplant.hpp"

using namespace isospec;

namespace {

SurfaceMesh surface(bool second, int k) {
  const FiniteGroup g = build_gerst_group();
  const auto gens = gerst_generators(g, GeneratorSet::SigmaTU);
  const auto h = second ? gerst_gamma2(g) : gerst_gamma1(g);
  return assemble_surface(build_schreier(coset_action(g, h, gens.elements, gens.labels, gerst_coset_reps())),
                          mesh_tile(builtin_tile("ytile"), k), second ? "M2" : "M1");
}

}  // namespace

static void BM_GerstGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_gerst_group());
}
BENCHMARK(BM_GerstGroup);

static void BM_CharacterTable(benchmark::State& state) {
  const FiniteGroup g = build_gerst_group();
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
}
BENCHMARK(BM_CharacterTable)->Unit(benchmark::kMillisecond);

static void BM_IntertwinerSpace(benchmark::State& state) {
  const FiniteGroup g = build_gerst_group();
  const auto gens = gerst_generators(g, GeneratorSet::SigmaTU);
  const auto p1 = perm_rep(coset_action(g, gerst_gamma1(g), gens.elements, gens.labels, gerst_coset_reps()));
  const auto p2 = perm_rep(coset_action(g, gerst_gamma2(g), gens.elements, gens.labels, gerst_coset_reps()));
  for (auto _ : state) benchmark::DoNotOptimize(intertwiner_space(p1, p2));
}
BENCHMARK(BM_IntertwinerSpace)->Unit(benchmark::kMillisecond);

static void BM_FemAssembly(benchmark::State& state) {
  const auto m = surface(false, static_cast<int>(state.range(0)));
  const auto bc = BCAssignment::uniform(m, BoundaryCondition::Neumann);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(m, bc, DiscretizationMode::Fem));
  state.counters["nodes"] = m.node_count;
}
BENCHMARK(BM_FemAssembly)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_LowestEigenpairs(benchmark::State& state) {
  const auto m = surface(true, static_cast<int>(state.range(0)));
  const auto op = assemble(m, BCAssignment::uniform(m, BoundaryCondition::Neumann), DiscretizationMode::Fem);
  EigenOptions o;
  o.count = 10;
  for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenpairs(op, o));
}
BENCHMARK(BM_LowestEigenpairs)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ExactTransplantCheck(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const auto m1 = surface(false, k), m2 = surface(true, k);
  const auto a = transplantation_matrix(6, -2, 2, 2).entries;
  for (auto _ : state) benchmark::DoNotOptimize(exact_transplant_check(m1, m2, a));
}
BENCHMARK(BM_ExactTransplantCheck)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
