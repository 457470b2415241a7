#include <benchmark/benchmark.h>

#include <bornolab/systems.hpp>

using namespace bornolab;

namespace {

LatticePtr diamond() {
  LatticeSpec spec;
  spec.name = "B2";
  spec.elements = {"0", "a", "b", "1"};
  spec.covers = {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  return Lattice::finite(spec);
}

void BM_BuildLattice(benchmark::State& state) {
  LatticeSpec spec;
  spec.name = "G";
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) spec.elements.push_back("e" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    spec.covers.emplace_back("e" + std::to_string(i), "e" + std::to_string(i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(Lattice::finite(spec));
}
BENCHMARK(BM_BuildLattice)->Arg(8)->Arg(16)->Arg(32);

void BM_ForwardImageSweep(benchmark::State& state) {
  LatticePtr L = diamond();
  GroundPtr X = GroundSet::make("X", {"x1", "x2", "x3"});
  GroundPtr Y = GroundSet::make("Y", {"y1", "y2"});
  GroundMap f = GroundMap::make("f", X, Y, {0, 0, 1});
  ImageMap op(f, BasisMap::identity(L));
  FnLatticePtr TX = op.src();
  for (auto _ : state) {
    for (std::size_t i = 0; i < TX->card(); ++i)
      benchmark::DoNotOptimize(op.eval(TX->fn_at(i)));
  }
  state.SetItemsProcessed(state.iterations() * TX->card());
}
BENCHMARK(BM_ForwardImageSweep);

void BM_GenerateIdeal(benchmark::State& state) {
  LatticePtr L = diamond();
  GroundPtr X = GroundSet::make("X2", {"x", "y"});
  FnLatticePtr TX = FnLattice::make(L, X);
  GeneratorSet g{TX, {TX->fn_at(3), TX->fn_at(7)}};
  for (auto _ : state) benchmark::DoNotOptimize(generate_ideal(g, GenMode::LatBot));
}
BENCHMARK(BM_GenerateIdeal);

void BM_SpatializeRamp(benchmark::State& state) {
  LatticePtr W = Lattice::omega("W");
  GroundPtr X = GroundSet::make("XR", {"x", "y"});
  FnLatticePtr TX = FnLattice::make(W, X);
  std::vector<OmegaRamp> coords = {OmegaRamp(W, {}, RampTail::shifted(0), kOmega),
                                   OmegaRamp(W, {}, RampTail::shifted(2), kOmega)};
  BornSystem sys = validate_system("bench", X, W, BObject::lat(W),
                                   StructureMap::chain(TX, coords));
  for (auto _ : state) benchmark::DoNotOptimize(spatialize(sys));
}
BENCHMARK(BM_SpatializeRamp);

} // namespace

BENCHMARK_MAIN();
