#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include <zsuper/morphism.hpp>
#include <zsuper/sampling.hpp>
#include <zsuper/splitting.hpp>
#include <zsuper/text_format.hpp>

using namespace zsuper;

namespace
{

std::string fixture(const char *name)
{
    std::ifstream in(std::string(ZSUPER_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

table_ptr cube_table()
{
    std::vector<formal_variable> formal;
    for (const auto &d : enumerate_nonzero_degrees(3)) {
        formal.push_back({"z" + std::to_string(d.bits()), d});
    }
    return make_table(3, {"x", "y"}, std::move(formal));
}

graded_series dense(const table_ptr &t, unsigned order, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    graded_series out(t);
    for (const auto &d : enumerate_nonzero_degrees(3)) {
        out += random_homogeneous(t, rng, d, sample_shape{order, 6, 2, 5});
    }
    return out;
}

} // namespace

static void BM_SeriesProduct(benchmark::State &state)
{
    const auto t = cube_table();
    const auto order = static_cast<unsigned>(state.range(0));
    const auto a = dense(t, order, 1).with_cap(2 * order);
    const auto b = dense(t, order, 2).with_cap(2 * order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
    state.counters["terms"] = static_cast<double>(a.size() + b.size());
}
BENCHMARK(BM_SeriesProduct)->DenseRange(1, 4);

static void BM_Pullback(benchmark::State &state)
{
    const auto t = cube_table();
    const auto k = static_cast<unsigned>(state.range(0));
    std::vector<graded_series> images{graded_series::base_variable(t, 0), graded_series::base_variable(t, 1)};
    std::mt19937_64 rng(3);
    for (std::size_t a = 0; a < t->formal_count(); ++a) {
        auto hi = random_homogeneous(t, rng, t->formal_degree(a), sample_shape{3, 3, 1, 3});
        images.push_back(graded_series::generator(t, a) + hi - hi.truncate(1));
    }
    const morphism m(t, t, std::move(images));
    const auto f = dense(t, 3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.pullback(f, k));
    }
}
BENCHMARK(BM_Pullback)->DenseRange(2, 6, 2);

static void BM_InvertModOrder(benchmark::State &state)
{
    const auto a = text::parse_atlas(fixture("three_chart.atl"));
    const auto &t = a.declared().at({"U", "W"});
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_mod_order(t, k));
    }
}
BENCHMARK(BM_InvertModOrder)->DenseRange(2, 8, 2);

static void BM_BuildSplitting(benchmark::State &state)
{
    const auto a = text::parse_atlas(fixture("three_chart.atl"));
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_splitting_iso(a, k, {}));
    }
}
BENCHMARK(BM_BuildSplitting)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
