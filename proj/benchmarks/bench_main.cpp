#include <benchmark/benchmark.h>

#include "ringcode/maps.hpp"
#include "ringcode/quantum.hpp"

using namespace ringcode;

namespace {

void BM_FieldMul(benchmark::State& state) {
  auto f = gf::GaloisField::builtin(2, static_cast<unsigned>(state.range(0)));
  Elt acc = 1;
  Elt x = f->primitive();
  for (auto _ : state) {
    acc = f->mul(acc, x);
    x = f->add(x, acc) ? f->add(x, acc) : 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(4);

void BM_BuildCosets(benchmark::State& state) {
  auto f = gf::GaloisField::builtin(3, 1);
  const Elt alpha = f->parse("w^4");
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::build_cosets(f, alpha, static_cast<unsigned>(state.range(0)), 0));
}
BENCHMARK(BM_BuildCosets)->Arg(20)->Arg(61)->Arg(82);

codes::LinearCodeF tor_10() {
  auto f = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(f, f->parse("w^4"), 10, 0);
  std::vector<unsigned> e(cs->cosets.size(), 0);
  e[*cs->index_of_poly(cyclo::parse_polynomial(*f, "x+w^2"))] = 2;
  e[*cs->index_of_poly(cyclo::parse_polynomial(*f, "x^2+w^5x+2"))] = 2;
  return codes::torsion(codes::ConstacyclicCode(cs, e));
}

void BM_ExhaustiveDistance(benchmark::State& state) {
  const auto tor = tor_10();
  for (auto _ : state)
    benchmark::DoNotOptimize(distance::min_distance_exhaustive(tor, 1ull << 23, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ExhaustiveDistance)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ColumnRankDistance(benchmark::State& state) {
  const auto tor = tor_10();
  for (auto _ : state) benchmark::DoNotOptimize(distance::min_distance_column_rank(tor, 7));
}
BENCHMARK(BM_ColumnRankDistance)->Unit(benchmark::kMicrosecond);

void BM_TableRow4(benchmark::State& state) {
  auto f = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(f, f->parse("w^4"), 40, 0);
  std::vector<unsigned> e(cs->cosets.size(), 0);
  for (const char* g : {"x^2+w^5", "x^2+w^3x+w^7", "x^2+w^5x+w^3", "x^2+w^7x+w"})
    e[*cs->index_of_poly(cyclo::parse_polynomial(*f, g))] = 2;
  const auto tor = codes::torsion(codes::ConstacyclicCode(cs, e));
  for (auto _ : state)
    benchmark::DoNotOptimize(distance::min_distance_column_rank(tor, 7, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_TableRow4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GrayMap(benchmark::State& state) {
  auto f = gf::GaloisField::builtin(2, 2);
  const auto M = maps::GrayMatrix::compatible(*f, f->parse("w^3"), 1, f->primitive());
  ring::RingVector v(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {static_cast<Elt>(i % 16), static_cast<Elt>((7 * i) % 16)};
  for (auto _ : state) benchmark::DoNotOptimize(maps::gray_map(*f, M, v));
}
BENCHMARK(BM_GrayMap)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
