#include <benchmark/benchmark.h>

#include <sstream>

#include "cck/corpus.hpp"
#include "cck/expansion.hpp"
#include "cck/fixtures.hpp"
#include "cck/io.hpp"
#include "cck/oracle.hpp"

using namespace cck;

namespace {

SurfaceFile load(const ReferenceFixture& f) {
  std::istringstream in(f.surface_text);
  return read_surface(in);
}

// Zigzag triangulation of the m-gon: (1,3), (3,m), (m,4), (4,m-1), ...
Triangulation zigzag(int m) {
  std::vector<std::pair<int, int>> diagonals{{1, 3}};
  int lo = 3, hi = m;
  bool from_lo = true;
  while (static_cast<int>(diagonals.size()) < m - 3) {
    diagonals.emplace_back(lo, hi);
    if (from_lo) {
      ++lo;
    } else {
      --hi;
    }
    from_lo = !from_lo;
  }
  return build_polygon(m, diagonals);
}

// The chord crossing the most arcs.
Arc longest_chord(const Triangulation& t, int m) {
  Arc best = Arc::make_chord(1, 3);
  std::size_t d = 0;
  for (const auto& arc : polygon_chords(m)) {
    const std::size_t k = crossing_band(t, arc).d();
    if (k > d) {
      d = k;
      best = arc;
    }
  }
  return best;
}

void BM_ExpandOctagon(benchmark::State& state) {
  const SurfaceFile f = load(octagon_fixture());
  for (auto _ : state) benchmark::DoNotOptimize(expand_principal(f.triangulation, f.arcs[0]));
}
BENCHMARK(BM_ExpandOctagon);

void BM_ExpandAnnulus(benchmark::State& state) {
  const SurfaceFile f = load(annulus_fixture());
  for (auto _ : state) benchmark::DoNotOptimize(expand_principal(f.triangulation, f.arcs[0]));
}
BENCHMARK(BM_ExpandAnnulus);

void BM_OracleAnnulus(benchmark::State& state) {
  const SurfaceFile f = load(annulus_fixture());
  for (auto _ : state) benchmark::DoNotOptimize(oracle_expand(f.triangulation, f.arcs[0]));
}
BENCHMARK(BM_OracleAnnulus);

void BM_ExpandLongChord(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto t = zigzag(m);
  const auto arc = longest_chord(t, m);
  std::size_t paths = 0;
  for (auto _ : state) {
    const auto e = expand(t, arc);
    paths = e.paths.size();
    benchmark::DoNotOptimize(e);
  }
  state.counters["paths"] = static_cast<double>(paths);
}
BENCHMARK(BM_ExpandLongChord)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_OracleLongChord(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto t = zigzag(m);
  const auto arc = longest_chord(t, m);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_expand(t, arc));
}
BENCHMARK(BM_OracleLongChord)->Arg(8)->Arg(12)->Arg(16);

void BM_AnnulusWinding(benchmark::State& state) {
  const auto t = build_standard_annulus(2, 2);
  const auto arc = Arc::make_annulus({false, 1}, {true, 1}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_principal(t, arc));
}
BENCHMARK(BM_AnnulusWinding)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

void BM_AcceptanceCorpusCompare(benchmark::State& state) {
  const auto corpus = acceptance_corpus();
  for (auto _ : state) {
    std::size_t equal = 0;
    for (const auto& s : corpus)
      for (const auto& arc : s.arcs)
        equal += expand_principal(s.triangulation, arc) == oracle_expand(s.triangulation, arc).value;
    benchmark::DoNotOptimize(equal);
  }
}
BENCHMARK(BM_AcceptanceCorpusCompare)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
