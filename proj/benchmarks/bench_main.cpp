#include <benchmark/benchmark.h>

#include "dtop/curve_space.hpp"
#include "dtop/homotopy.hpp"

namespace {

using namespace dtop;

PlanePtr khal(int w, int h, int px, int py) {
    PlaneSpec spec;
    spec.width = w;
    spec.height = h;
    spec.x_closed_parity = px;
    spec.y_closed_parity = py;
    return make_plane(spec);
}

void BM_enumerate_4x4(benchmark::State& state) {
    PlanePtr plane = khal(4, 4, 0, 0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(plane));
}
BENCHMARK(BM_enumerate_4x4);

void BM_enumerate_5x5(benchmark::State& state) {
    PlanePtr plane = khal(5, 5, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(plane));
}
BENCHMARK(BM_enumerate_5x5);

void BM_build_poset_5x5(benchmark::State& state) {
    PlanePtr plane = khal(5, 5, 1, 1);
    auto curves = enumerate_curves(plane);
    for (auto _ : state) benchmark::DoNotOptimize(build_poset(plane, curves));
}
BENCHMARK(BM_build_poset_5x5);

void BM_curve_leq(benchmark::State& state) {
    PlanePtr plane = khal(5, 5, 1, 1);
    auto curves = enumerate_curves(plane);
    const JordanCurve& a = curves.front();
    const JordanCurve& b = curves.back();
    for (auto _ : state) benchmark::DoNotOptimize(curve_leq(a, b));
}
BENCHMARK(BM_curve_leq);

void BM_minimalize_border(benchmark::State& state) {
    PlanePtr plane = khal(5, 5, 1, 1);
    std::vector<Coord> border;
    for (Point p : plane->adjusted_border()) border.push_back(plane->coord(p));
    JordanCurve curve(plane, border);
    for (auto _ : state) benchmark::DoNotOptimize(minimalize(curve));
}
BENCHMARK(BM_minimalize_border);

void BM_morph(benchmark::State& state) {
    PlanePtr plane = khal(5, 5, 1, 1);
    auto curves = enumerate_curves(plane);
    const JordanCurve& a = curves.front();
    const JordanCurve& b = curves.back();
    for (auto _ : state) benchmark::DoNotOptimize(morph(a, b));
}
BENCHMARK(BM_morph);

void BM_distance_9x9(benchmark::State& state) {
    PlanePtr plane = khal(9, 9, 0, 0);
    const FiniteSpace& sp = plane->space();
    for (auto _ : state)
        benchmark::DoNotOptimize(distance(sp, plane->id(0, 0), plane->id(8, 7)));
}
BENCHMARK(BM_distance_9x9);

void BM_grid_cycles_3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_grid_cycles(3));
}
BENCHMARK(BM_grid_cycles_3);

}  // namespace

BENCHMARK_MAIN();
