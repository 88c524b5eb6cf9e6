#include <benchmark/benchmark.h>

#include <random>

#include "sheafradon/distance.hpp"
#include "sheafradon/reference_scenes.hpp"
#include "sheafradon/scene.hpp"

using namespace sheafradon;

namespace {

void profile_notched(benchmark::State& state) {
  const Backend be = state.range(0) ? Backend::convex : Backend::grid;
  ConvolvedSheaf f{compile(notched_square_scene(be)), std::nullopt};
  const auto dirs = default_directions(16);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(profile(f, dirs[k++ % dirs.size()])));
  }
  state.SetLabel(be == Backend::grid ? "grid" : "convex");
}
BENCHMARK(profile_notched)->Arg(0)->Arg(1);

void radon_summary_discs(benchmark::State& state) {
  ConvolvedSheaf f{compile(disc_scene(1)), std::nullopt};
  const auto dirs = default_directions(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radon_summary(f, dirs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(radon_summary_discs)->Arg(16)->Arg(64);

DecoratedBarcode random_barcode(std::mt19937& rng, int bars) {
  std::uniform_int_distribution<int> lv(-40, 40), deg(0, 1), kind(0, 3);
  std::vector<Bar> out;
  for (int i = 0; i < bars; ++i) {
    int b = lv(rng), e = lv(rng);
    if (b > e) std::swap(b, e);
    Bar bar;
    bar.degree = deg(rng);
    bar.birth = {BirthKind::at_point, Surd(make_rational(b, 4))};
    if (kind(rng)) bar.death = {DeathKind::at_point, Surd(make_rational(e + 1, 4))};
    out.push_back(bar);
  }
  return DecoratedBarcode(std::move(out));
}

void bottleneck_random(benchmark::State& state) {
  std::mt19937 rng(3);
  const int n = static_cast<int>(state.range(0));
  DecoratedBarcode a = random_barcode(rng, n);
  DecoratedBarcode b = random_barcode(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck(a, b));
}
BENCHMARK(bottleneck_random)->Arg(8)->Arg(32);

void convolve_grid_notched(benchmark::State& state) {
  SheafObject f = compile(notched_square_scene(Backend::grid));
  const Rational a = make_rational(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_grid(f, a));
  state.SetLabel("a=" + to_string(a));
}
BENCHMARK(convolve_grid_notched)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void convolve_stalk_convex(benchmark::State& state) {
  SheafObject f = compile(notched_square_scene(Backend::convex));
  const BallSpec ball{Norm::l2, make_rational(3, 2)};
  int k = 0;
  for (auto _ : state) {
    Point x(make_rational(k % 13 - 6, 2), make_rational(k % 7 - 3, 2));
    benchmark::DoNotOptimize(convolve_stalk(f, ball, x));
    ++k;
  }
}
BENCHMARK(convolve_stalk_convex);

}  // namespace

BENCHMARK_MAIN();
