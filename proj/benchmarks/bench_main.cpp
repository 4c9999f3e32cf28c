#include <benchmark/benchmark.h>

#include <random>

#include "loopmod/loopmod.hpp"

using namespace loopmod;

namespace {

const AffineType kA1 = parse_affine_type("A_1^(1)");

void BM_HeisenbergJacobi(benchmark::State& state) {
  const auto kind = HeisenbergKind::L(kA1);
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_affine_jacobi(LoopAlgebra(kA1), bound).passed);
  state.SetLabel(kind.str());
}
BENCHMARK(BM_HeisenbergJacobi)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PhiVermaBuild(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto m = build_phi_verma(HeisenbergKind::H_infinity(), PhiFunction::constant(Sign::Plus), Scalar(1),
                                   make_truncation(d, d, 0, d));
    benchmark::DoNotOptimize(m.basis().size());
  }
}
BENCHMARK(BM_PhiVermaBuild)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ReduceToHighest(benchmark::State& state) {
  const auto m = build_phi_verma(HeisenbergKind::H_infinity(), PhiFunction::periodic({Sign::Plus, Sign::Minus}),
                                 Scalar(3) / Scalar(2), make_truncation(4, 4, 0, 6));
  Vec w;
  for (std::size_t i = 0; i < m.basis().size(); i += 7) w.add(m.basis()[i], Scalar(static_cast<long>(i % 5) + 1));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_highest(m, w).coefficient);
}
BENCHMARK(BM_ReduceToHighest)->Unit(benchmark::kMicrosecond);

void BM_LoopModuleBuild(benchmark::State& state) {
  const auto g = std::make_shared<const LoopAlgebra>(kA1);
  const CartanWeight lambda{{Scalar(1)}, Scalar(2), Scalar(0)};
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto m = build_M_phi_lambda(g, PhiFunction::periodic({Sign::Plus, Sign::Minus}), lambda,
                                      make_truncation(2, 2, h, h), make_truncation(2, 2, 0, 2));
    benchmark::DoNotOptimize(m->basis().size());
  }
}
BENCHMARK(BM_LoopModuleBuild)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Straightening cost with a cold memo table: every iteration builds a fresh module.
void BM_LoopAction(benchmark::State& state) {
  const auto g = std::make_shared<const LoopAlgebra>(kA1);
  const CartanWeight lambda{{Scalar(1)}, Scalar(2), Scalar(0)};
  for (auto _ : state) {
    const auto m = build_M_phi_lambda_via_loop(g, PhiFunction::periodic({Sign::Plus, Sign::Minus}), lambda,
                                               make_truncation(2, 2, 2, 2), make_truncation(2, 2, 0, 2));
    std::size_t terms = 0;
    for (const auto& b : m->basis()) terms += m->act(GBasis::real(1, 2, 1), b).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_LoopAction)->Unit(benchmark::kMillisecond);

void BM_Probe(benchmark::State& state) {
  const auto g = std::make_shared<const LoopAlgebra>(kA1);
  const CartanWeight lambda{{Scalar(1)}, Scalar(2), Scalar(0)};
  const auto m = build_M_phi_lambda(g, PhiFunction::periodic({Sign::Plus, Sign::Minus}), lambda,
                                    make_truncation(2, 2, 2, 2), make_truncation(2, 2, 0, 2));
  std::mt19937_64 rng(1);
  std::vector<LoopVec> samples;
  for (int i = 0; i < 16; ++i) samples.push_back(random_homogeneous_vector(*m, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(irreducibility_probe(*m, samples[i++ % samples.size()], 20).result.size());
}
BENCHMARK(BM_Probe)->Unit(benchmark::kMicrosecond);

void BM_WeylClassify(benchmark::State& state) {
  const auto p = WeightPoint::finite(Scalar(1), {Scalar(0), Scalar(1), Scalar(1) / Scalar(2)});
  for (auto _ : state) benchmark::DoNotOptimize(classify(analyze_orbit(p, CoordWindow{3, 3})).size());
}
BENCHMARK(BM_WeylClassify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
