#include <benchmark/benchmark.h>

#include <sstream>

#include "graphzip/compressor.hpp"
#include "graphzip/generator.hpp"
#include "graphzip/isomorphism.hpp"
#include "graphzip/stream_io.hpp"

using namespace graphzip;

namespace {

LabeledGraph host_with_triangles(std::size_t vertices, std::size_t extra_edges) {
  SplitMix64 rng(7);
  LabeledGraph g;
  for (std::size_t v = 0; v < vertices; ++v)
    g.add_vertex(v, "L" + std::to_string(v % 4));
  for (std::size_t i = 0; i + 2 < vertices; i += 3) {
    g.add_edge(i, i + 1, "t");
    g.add_edge(i + 1, i + 2, "t");
    g.add_edge(i, i + 2, "t");
  }
  std::size_t added = 0;
  while (added < extra_edges) {
    VertexId u = rng.below(vertices);
    VertexId v = rng.below(vertices);
    if (u == v) continue;
    if (g.add_edge(u, v, "b")) ++added;
  }
  return g;
}

std::vector<StreamBatch> batches_from(const GenResult& gen, std::size_t alpha) {
  std::istringstream in(gen.stream_text);
  auto records = parse_stream(in, "bench");
  return batch_stream(records, alpha, false);
}

void BM_EnumerateTriangles(benchmark::State& state) {
  LabeledGraph host = host_with_triangles(static_cast<std::size_t>(state.range(0)),
                                          static_cast<std::size_t>(state.range(0)));
  PatternSpec spec;
  spec.name = "3-CLIQ";
  spec.vertex_label = "L0";
  spec.edge_label = "t";
  LabeledGraph pattern = make_pattern(spec);
  EmbeddingFinder finder(host);
  for (auto _ : state) {
    auto found = finder.find(pattern);
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_EnumerateTriangles)->Arg(60)->Arg(300);

void BM_ProcessBatch(benchmark::State& state) {
  GenConfig config;
  config.vertices = 300;
  config.edges = 1500;
  config.coverage = 0.3;
  PatternSpec spec;
  spec.name = "3-CLIQ";
  GenResult gen = generate(config, spec);
  auto batches = batches_from(gen, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    PatternDictionary dict(50, static_cast<std::size_t>(state.range(0)), false);
    for (const StreamBatch& batch : batches)
      process_batch(dict, batch.graph, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(dict);
  }
}
BENCHMARK(BM_ProcessBatch)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  GenConfig config;
  config.vertices = static_cast<std::size_t>(state.range(0));
  config.edges = config.vertices * 5;
  config.coverage = 0.2;
  PatternSpec spec;
  spec.name = "4-PATH";
  for (auto _ : state) {
    GenResult gen = generate(config, spec);
    benchmark::DoNotOptimize(gen.stream_text);
  }
}
BENCHMARK(BM_Generate)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
