#include <krv/fermionic.hpp>
#include <krv/genfun.hpp>
#include <krv/liealg.hpp>
#include <krv/mpoly.hpp>
#include <krv/qsystem.hpp>

#include <benchmark/benchmark.h>

namespace {

krv::FermionicInput make_input(const char* label, const char* lambda, const char* n) {
  const auto c = krv::CartanData::parse(label);
  return {c, krv::Weight::parse(lambda, c.rank()), krv::KrMultiplicities::parse(n, c.rank()), krv::Grading::paper,
          krv::VacancyScope::all_indices, std::nullopt};
}

void BM_MSumA1(benchmark::State& state) {
  const auto in = make_input("A1", "0", ("1:1=" + std::to_string(state.range(0))).c_str());
  for (auto _ : state) benchmark::DoNotOptimize(krv::m_sum(in));
}
BENCHMARK(BM_MSumA1)->DenseRange(4, 12, 4);

void BM_MSumG2(benchmark::State& state) {
  const auto in = make_input("G2", "0,0", "1:1=2;2:1=3");
  for (auto _ : state) benchmark::DoNotOptimize(krv::m_sum(in));
}
BENCHMARK(BM_MSumG2);

void BM_QSystemExtend(benchmark::State& state, const char* label) {
  const auto c = krv::CartanData::parse(label);
  const auto init = krv::QSystemState::initial(c, krv::Boundary::kr);
  for (auto _ : state) benchmark::DoNotOptimize(init.extended_to(static_cast<int>(state.range(0))));
}
BENCHMARK_CAPTURE(BM_QSystemExtend, A3, "A3")->Arg(6)->Arg(10);
BENCHMARK_CAPTURE(BM_QSystemExtend, G2, "G2")->Arg(4)->Arg(6);

void BM_ExactDivide(benchmark::State& state) {
  const krv::VarSet vars({"x", "y", "z"});
  const auto x = krv::MultivariatePoly::variable(vars, 0);
  const auto y = krv::MultivariatePoly::variable(vars, 1);
  const auto z = krv::MultivariatePoly::variable(vars, 2);
  const auto one = krv::MultivariatePoly::constant(vars, 1);
  const auto b = (x + y + z + one).pow(static_cast<unsigned>(state.range(0)));
  const auto a = b * (x * y - z + one).pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(krv::exact_divide(a, b));
}
BENCHMARK(BM_ExactDivide)->DenseRange(2, 6, 2);

void BM_RecursionA2(benchmark::State& state) {
  const auto c = krv::CartanData::parse("A2");
  const krv::ZSpec spec{c, krv::Weight::parse("0,0", 2), krv::KrMultiplicities::parse("1:1=1", 2), 2};
  for (auto _ : state) benchmark::DoNotOptimize(krv::verify_recursion(spec));
}
BENCHMARK(BM_RecursionA2);

}  // namespace

BENCHMARK_MAIN();
