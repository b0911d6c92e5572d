#include <benchmark/benchmark.h>

#include <random>

#include "isomon/catalog.hpp"
#include "isomon/lu_gauge.hpp"
#include "isomon/monodromy.hpp"
#include "isomon/schlesinger.hpp"
#include "isomon/spectral_calculus.hpp"

using namespace isomon;

namespace {

std::mt19937_64 gen(2024);

cplx crand() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(gen), u(gen)};
}

GarnierState bench_state() {
  GarnierState s;
  s.q1 = 0.3 + 0.2 * crand();
  s.p1 = 0.5 + 0.2 * crand();
  s.q2 = -0.4 + 0.2 * crand();
  s.p2 = 0.6 + 0.2 * crand();
  for (auto& w : s.w) w = 1.5 + 0.3 * crand();
  s.u = 1.5 + 0.3 * crand();
  s.theta0 = 0.3 * crand();
  s.theta1 = 0.3 * crand();
  s.theta_t1 = 0.3 * crand();
  s.theta_t2 = 0.3 * crand();
  s.theta_inf2 = 0.3 * crand();
  s.t1 = cplx(0.3, 0.4);
  s.t2 = cplx(-0.5, 0.6);
  s.eps = cplx(0.7, 0.1);
  return s;
}

void BM_SchlesingerStep(benchmark::State& st) {
  const auto s = bench_state();
  const Direction dir = st.range(0) == 1 ? Direction::S1 : Direction::S2;
  for (auto _ : st) benchmark::DoNotOptimize(schlesinger_step(s, dir));
}
BENCHMARK(BM_SchlesingerStep)->Arg(1)->Arg(2);

void BM_LuGauge(benchmark::State& st) {
  const auto k = static_cast<Eigen::Index>(st.range(0));
  LuGaugeInput in;
  in.lambda = 3.0 + crand();
  in.mu = -3.0 + crand();
  in.b = CVector::Random(k);
  in.c = CVector::Random(k);
  in.B = CMatrix(CMatrix::Random(k, k).triangularView<Eigen::Upper>());
  in.C = CMatrix(CMatrix::Random(k, k).triangularView<Eigen::Lower>());
  for (auto _ : st) benchmark::DoNotOptimize(lu_gauge(in));
}
BENCHMARK(BM_LuGauge)->Arg(3)->Arg(8)->Arg(16);

void BM_TransferMatrixLoop(benchmark::State& st) {
  const auto s = bench_state();
  const auto sys = pair_system(build_fuchsian_211(s), s.eps);
  const Path loop = Path::line(cplx(0, -1), cplx(0, -0.3))
                        .then(Path::circle(0.0, 0.3, -std::numbers::pi / 2))
                        .then(Path::line(cplx(0, -0.3), cplx(0, -1)));
  for (auto _ : st) benchmark::DoNotOptimize(transfer_matrix(sys, loop));
}
BENCHMARK(BM_TransferMatrixLoop)->Unit(benchmark::kMillisecond);

void BM_MonodromyRep(benchmark::State& st) {
  const auto s = bench_state();
  const auto sys = pair_system(build_fuchsian_211(s), s.eps);
  for (auto _ : st) benchmark::DoNotOptimize(monodromy_rep(sys));
}
BENCHMARK(BM_MonodromyRep)->Unit(benchmark::kMillisecond);

void BM_DegenerationGraph(benchmark::State& st) {
  std::vector<SpectralType> seeds;
  for (const auto& t : catalog::four_parameter_three_point_types()) seeds.push_back(SpectralType::parse(t));
  for (auto _ : st) benchmark::DoNotOptimize(degeneration_graph(seeds));
}
BENCHMARK(BM_DegenerationGraph)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
