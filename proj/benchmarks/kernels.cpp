#include <benchmark/benchmark.h>

#include "grmod/cartier.hpp"
#include "grmod/hilbert.hpp"
#include "grmod/linalg.hpp"
#include "grmod/parse.hpp"

using namespace grmod;

namespace {

std::vector<Polynomial> cyclic_like(const GradedRing& R, std::size_t n) {
  // homogenized relations of the cyclic n-roots system, one degree at a time
  std::vector<Polynomial> out;
  for (std::size_t d = 1; d < n; ++d) {
    Polynomial f(R);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial t = Polynomial::constant(R, R.field.one());
      for (std::size_t j = 0; j < d; ++j) t = t * Polynomial::variable(R, (i + j) % n);
      f += t;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

static void BM_Buchberger(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const GradedRing R(Field::prime(32003), n);
  const auto J = cyclic_like(R, n);
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(R, J);
    benchmark::DoNotOptimize(gb.size());
  }
}
BENCHMARK(BM_Buchberger)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_BuchbergerRationals(benchmark::State& state) {
  const GradedRing R(Field(), 4);
  const auto J = cyclic_like(R, 4);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(R, J).size());
}
BENCHMARK(BM_BuchbergerRationals)->Unit(benchmark::kMillisecond);

static void BM_HilbertNumerator(benchmark::State& state) {
  const std::size_t n = 4;
  const int top = static_cast<int>(state.range(0));
  std::vector<Monomial> gens;
  // staircase: X0^a X1^b X2^c X3^(top-a-b-c) for a sparse set of exponents
  for (int a = 0; a <= top; a += 2)
    for (int b = 0; a + b <= top; b += 3)
      for (int c = 0; a + b + c <= top; c += 2)
        gens.push_back(Monomial(Monomial::Exponents{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                                    static_cast<std::uint32_t>(c),
                                                    static_cast<std::uint32_t>(top - a - b - c)}));
  for (auto _ : state) benchmark::DoNotOptimize(monomial_ideal_numerator(n, gens));
  state.counters["generators"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_HilbertNumerator)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_RowReduce(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Field F = Field::prime(7);
  Rng rng(1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(F.element_at(rng() % 7));
    rows.push_back(std::move(v));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(F, n, rows));
}
BENCHMARK(BM_RowReduce)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_RowReduceRationals(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Field Q;
  Rng rng(1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(Q.from_int(static_cast<std::int64_t>(rng() % 9) - 4));
    rows.push_back(std::move(v));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(Q, n, rows));
}
BENCHMARK(BM_RowReduceRationals)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_RunTheorem(benchmark::State& state) {
  const GradedRing R(Field::prime(5), 3);
  const std::vector<Polynomial> J{parse_polynomial(R, "X0*X2 - X1^2"), parse_polynomial(R, "X1*X2 - X0^2")};
  for (auto _ : state) {
    const GradedModule M = GradedModule::cyclic(R, J);
    benchmark::DoNotOptimize(run_theorem(M).quotient_dim());
  }
}
BENCHMARK(BM_RunTheorem)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
