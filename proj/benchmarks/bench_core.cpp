#include <benchmark/benchmark.h>

#include <permfp/brauer.hpp>
#include <permfp/class_function.hpp>
#include <permfp/complex.hpp>
#include <permfp/group.hpp>
#include <permfp/perm_module.hpp>
#include <permfp/picard.hpp>

using namespace permfp;

// Walking the subgroup lattice and folding it into conjugacy classes is the
// entry cost of almost every other operation, so it gets its own timing.
static void bm_subgroup_classes(benchmark::State& state, const char* name) {
    GroupPtr g = catalog_group(name);
    for (auto _ : state) {
        auto classes = subgroup_classes(*g);
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK_CAPTURE(bm_subgroup_classes, D8, "D8");
BENCHMARK_CAPTURE(bm_subgroup_classes, Q8, "Q8");
BENCHMARK_CAPTURE(bm_subgroup_classes, C3xC3, "C3xC3");

static void bm_cfb_basis(benchmark::State& state, const char* name, int p) {
    PSubgroupClasses ctx = p_classes(catalog_group(name), p);
    for (auto _ : state) {
        LatticeBasis basis = cfb_basis(ctx);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK_CAPTURE(bm_cfb_basis, D8, "D8", 2);
BENCHMARK_CAPTURE(bm_cfb_basis, Q8, "Q8", 2);
BENCHMARK_CAPTURE(bm_cfb_basis, C3xC3, "C3xC3", 3);

// marks() runs one Brauer quotient plus homology per subgroup class; the
// generator at the trivial class has the largest modules the group offers.
static void bm_marks_generator(benchmark::State& state, const char* name) {
    GroupPtr g = catalog_group(name);
    Complex gen = generator_complex(g, 2, trivial_subgroup());
    for (auto _ : state) {
        MarksReport report = marks(gen);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK_CAPTURE(bm_marks_generator, D8, "D8");
BENCHMARK_CAPTURE(bm_marks_generator, Q8, "Q8");

static void bm_marks_random(benchmark::State& state) {
    GroupPtr g = catalog_group("D8");
    Complex x = random_complex(g, 2, state.range(0));
    for (auto _ : state) {
        MarksReport report = marks(x);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bm_marks_random)->Arg(1)->Arg(2)->Arg(3);

// The two routes to the Brauer quotient of a map: the production projection
// rule against the fixed-point/relative-trace computation it is checked by.
static void bm_brauer_map(benchmark::State& state) {
    GroupPtr g = catalog_group("D8");
    Subgroup s = generated_subgroup(*g, {4});          // a reflection
    EquivMap aug = hom_basis(orbit_module(g, s, 2), trivial_module(g, 2)).front();
    for (auto _ : state) {
        EquivMap q = brauer_map(aug, s);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(bm_brauer_map);

static void bm_brauer_map_oracle(benchmark::State& state) {
    GroupPtr g = catalog_group("D8");
    Subgroup s = generated_subgroup(*g, {4});
    EquivMap aug = hom_basis(orbit_module(g, s, 2), trivial_module(g, 2)).front();
    for (auto _ : state) {
        EquivMap q = brauer_map_oracle(aug, s);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(bm_brauer_map_oracle);

static void bm_homology(benchmark::State& state) {
    GroupPtr g = catalog_group("Q8");
    Complex x = random_complex(g, 2, state.range(0));
    for (auto _ : state) {
        auto dims = homology_dims(x);
        benchmark::DoNotOptimize(dims);
    }
}
BENCHMARK(bm_homology)->Arg(1)->Arg(2)->Arg(3);

// Tensor squares are the hot path of invertibility searches: dimensions
// multiply, so this is where matrix sizes actually grow.
static void bm_tensor_marks(benchmark::State& state) {
    GroupPtr g = catalog_group("C4");
    auto catalog = sphere_catalog(g, 2);
    Complex x = tensor(catalog[0].complex, catalog[1].complex);
    for (auto _ : state) {
        MarksReport report = marks(x);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bm_tensor_marks);

BENCHMARK_MAIN();
