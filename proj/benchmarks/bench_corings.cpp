#include <benchmark/benchmark.h>

#include <random>

#include <corings/corings.hpp>

using namespace corings;

namespace {

Field field_for(int64_t arg) { return arg == 0 ? Field::rationals() : Field::prime(5); }

Mat random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.reduce(Scalar(dist(rng))));
  return m;
}

void BM_Rref(benchmark::State& state) {
  Field f = field_for(state.range(1));
  Mat m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{8, 16, 32, 64}, {0, 1}});

void BM_TensorOverDualNumbers(benchmark::State& state) {
  Field f = field_for(state.range(0));
  Coring s = sweedler_coring(unit_morphism(dual_numbers(f)));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_over_alg(s.carrier(), s.carrier()));
}
BENCHMARK(BM_TensorOverDualNumbers)->Arg(0)->Arg(1);

void BM_CheckMatrixCoalgebra(benchmark::State& state) {
  Field f = Field::prime(5);
  for (auto _ : state) {
    Coring c = matrix_coalgebra(static_cast<std::size_t>(state.range(0)), f);
    benchmark::DoNotOptimize(check_coring(c));
  }
}
BENCHMARK(BM_CheckMatrixCoalgebra)->Arg(2)->Arg(3);

void BM_TensorCoringCheck(benchmark::State& state) {
  Field f = field_for(state.range(0));
  for (auto _ : state) {
    // Fresh factors so the tensor is rebuilt every iteration.
    Coring c = matrix_coalgebra(2, f);
    Coring t = tensor_coring(c, c);
    benchmark::DoNotOptimize(check_coring(t));
  }
}
BENCHMARK(BM_TensorCoringCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExtCompose(benchmark::State& state) {
  Field f = Field::prime(5);
  Coring c = matrix_coalgebra(2, f);
  ExtMorphism g = ext_to_unit(c);
  ExtMorphism id = ext_identity(c);
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(ext_compose(g, id));
    } else {
      benchmark::DoNotOptimize(ext_compose_via_cotensor(g, id));
    }
  }
}
BENCHMARK(BM_ExtCompose)->Arg(0)->Arg(1);

void BM_VerifyExtMonoidal(benchmark::State& state) {
  Field f = Field::prime(5);
  Coring m = matrix_coalgebra(2, f);
  Coring g = grouplike_coalgebra(2, f);
  Coring k = unit_coring(f);
  ExtFamily fam;
  fam.objects = {m, g, k};
  fam.morphisms = {ext_identity(m), ext_to_unit(m), ext_identity(g), ext_to_unit(g)};
  fam.composable = composable_pairs(fam.morphisms);
  fam.triples = {{0, 1, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_ext_monoidal(fam));
}
BENCHMARK(BM_VerifyExtMonoidal)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
