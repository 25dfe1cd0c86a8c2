#include <benchmark/benchmark.h>

#include "nalg/variety.hpp"

using namespace nalg;

namespace {

const Field Q = Field::rationals();

void BM_FreeLie(benchmark::State& state) {
  const IdentitySet lie = preset_variety("lie", Q);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_free(lie, {"x", "y"}, d).carrier.dim());
}
BENCHMARK(BM_FreeLie)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_FreeAssoc(benchmark::State& state) {
  const IdentitySet assoc = preset_variety("assoc", Q);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_free(assoc, {"x", "y"}, d).carrier.dim());
}
BENCHMARK(BM_FreeAssoc)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Coproduct(benchmark::State& state) {
  const IdentitySet alg = preset_variety("alg", Q);
  const Algebra b = Algebra::abelian(Q, {"b"}), x = Algebra::abelian(Q, {"x"}), y = Algebra::abelian(Q, {"y"});
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_coproduct({b, x, y}, alg, d).algebra().dim());
}
BENCHMARK(BM_Coproduct)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// Symbolic Jacobi check on the commutator algebra of n x n matrices.
void BM_JacobiSymbolic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
  const std::size_t dim = n * n;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Vec v = zero_vector(Q, dim);
      const std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
      if (j == k) v[i * n + l] += Scalar::one(Q);
      if (l == i) v[k * n + j] -= Scalar::one(Q);
      table.push_back(v);
    }
  const Algebra gl(Q, names, table);
  const Poly jacobi = parse_poly(Q, "(xy)z + (yz)x + (zx)y");
  for (auto _ : state) benchmark::DoNotOptimize(identity_holds(gl, jacobi, CheckMode::Symbolic).holds());
}
BENCHMARK(BM_JacobiSymbolic)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
