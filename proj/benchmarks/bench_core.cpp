// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "slfem/picard.hpp"

using namespace slfem;

namespace {

MaterialModel bench_material(double beta = 1.0) {
  return MaterialModel({1.0, 1.0, 0.5, FiberAxis::X, 1.0, beta});
}

}  // namespace

static void BM_StressFromStrain(benchmark::State& state) {
  const MaterialModel m = bench_material();
  const SymTensor2 eps{0.05, -0.03, 0.02};
  for (auto _ : state) benchmark::DoNotOptimize(stress_from_strain(m, eps));
}
BENCHMARK(BM_StressFromStrain);

static void BM_StrainFromStress(benchmark::State& state) {
  const MaterialModel m = bench_material();
  const SymTensor2 t{0.4, 0.2, -0.1};
  for (auto _ : state) benchmark::DoNotOptimize(strain_from_stress(m, t));
}
BENCHMARK(BM_StrainFromStress);

static void BM_ElementStiffness(benchmark::State& state) {
  const QuadMesh mesh = build_plate_mesh(2, 1, 1, 8, 4, 2.0);
  const MaterialModel m = bench_material();
  Eigen::VectorXd u = Eigen::VectorXd::Constant(mesh.num_dofs(), 0.01);
  for (auto _ : state)
    benchmark::DoNotOptimize(element_stiffness(mesh, 0, m, &u));
}
BENCHMARK(BM_ElementStiffness);

static void BM_AssembleSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadMesh mesh = build_plate_mesh(2, 1, 1, n, n / 2, 4.0);
  const MaterialModel m = bench_material();
  const LoadCase load = LoadCase::benchmark(mesh, {LoadType::Slope, 0.1});
  Eigen::VectorXd u = Eigen::VectorXd::Constant(mesh.num_dofs(), 0.005);
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_system(mesh, m, load, &u));
  state.SetComplexityN(n);
}
BENCHMARK(BM_AssembleSystem)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_SolveCg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadMesh mesh = build_plate_mesh(2, 1, 1, n, n / 2, 4.0);
  const MaterialModel m = bench_material(0.0);
  const LoadCase load = LoadCase::benchmark(mesh, {LoadType::Slope, 0.1});
  const SparseSystem sys = assemble_system(mesh, m, load, nullptr);
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys, SolverConfig{}));
}
BENCHMARK(BM_SolveCg)->Arg(16)->Arg(32);

static void BM_PicardBenchmarkCase(benchmark::State& state) {
  const QuadMesh mesh = build_plate_mesh(2, 1, 1, 16, 8, 4.0);
  const MaterialModel m = bench_material();
  const LoadCase load = LoadCase::benchmark(mesh, {LoadType::Slope, 0.1});
  PicardConfig pc;
  pc.tol = 1e-10;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_picard(mesh, m, load, SolverConfig{}, pc));
}
BENCHMARK(BM_PicardBenchmarkCase);

BENCHMARK_MAIN();
