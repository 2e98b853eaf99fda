#include "graphzip/generator.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace graphzip {

namespace {

LabeledGraph build_named(const std::string& name, const Label& vl, const Label& el,
                         bool directed) {
  std::size_t vertices = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (name == "3-CLIQ") {
    vertices = 3;
    edges = {{0, 1}, {0, 2}, {1, 2}};
  } else if (name == "4-CLIQ") {
    vertices = 4;
    edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  } else if (name == "4-STAR") {
    vertices = 5;  // hub plus four leaves
    edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  } else if (name == "4-PATH") {
    vertices = 4;
    edges = {{0, 1}, {1, 2}, {2, 3}};
  } else if (name == "5-PATH") {
    vertices = 5;
    edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  } else if (name == "8-TREE") {
    vertices = 8;  // complete binary tree in heap layout
    for (VertexId child = 1; child < 8; ++child)
      edges.push_back({(child - 1) / 2, child});
  } else {
    throw PatternSpecError("unknown pattern name '" + name + "'");
  }
  LabeledGraph g(directed);
  for (VertexId v = 0; v < vertices; ++v) g.add_vertex(v, vl);
  for (auto [s, d] : edges) g.add_edge(s, d, el);
  return g;
}

void append_vertex_line(std::string& out, VertexId id, const Label& label) {
  out += "v ";
  out += std::to_string(id);
  out += ' ';
  out += label;
  out += '\n';
}

void append_edge_line(std::string& out, const Edge& e) {
  out += "e ";
  out += std::to_string(e.src);
  out += ' ';
  out += std::to_string(e.dst);
  out += ' ';
  out += e.label;
  out += '\n';
}

}  // namespace

LabeledGraph make_pattern(const PatternSpec& spec, bool directed) {
  if (spec.custom) {
    const LabeledGraph& g = *spec.custom;
    if (g.edge_count() == 0)
      throw PatternSpecError("custom pattern must have at least one edge");
    if (!g.connected())
      throw PatternSpecError("custom pattern must be connected");
    if (g.directed() != directed)
      throw PatternSpecError("custom pattern directedness disagrees with the request");
    return g;
  }
  validate_label(spec.vertex_label);
  validate_label(spec.edge_label);
  return build_named(spec.name, spec.vertex_label, spec.edge_label, directed);
}

GenResult generate(const GenConfig& config, const PatternSpec& spec) {
  if (config.coverage <= 0.0 || config.coverage > 1.0)
    throw std::invalid_argument("coverage must be in (0, 1]");
  if (config.vertex_alphabet == 0 || config.edge_alphabet == 0)
    throw std::invalid_argument("label alphabets must be non-empty");

  const LabeledGraph pattern = make_pattern(spec, config.directed);
  const std::size_t pv = pattern.vertex_count();
  const std::size_t pe = pattern.edge_count();

  const auto plant_count =
      static_cast<std::size_t>(config.coverage * static_cast<double>(config.vertices) /
                               static_cast<double>(pv));
  if (plant_count == 0)
    throw FeasibilityError("coverage " + std::to_string(config.coverage) + " of " +
                           std::to_string(config.vertices) +
                           " vertices cannot fit one instance of " +
                           std::to_string(pv) + " vertices");
  if (plant_count * pe > config.edges)
    throw FeasibilityError("planted instances need " + std::to_string(plant_count * pe) +
                           " edges but the budget is " + std::to_string(config.edges));

  const std::size_t planted_vertices = plant_count * pv;
  const std::size_t free_vertices = config.vertices - planted_vertices;
  const std::size_t background_edges = config.edges - plant_count * pe;
  if (background_edges > 0) {
    const std::size_t capacity =
        config.directed ? free_vertices * (free_vertices > 0 ? free_vertices - 1 : 0)
                        : free_vertices * (free_vertices > 0 ? free_vertices - 1 : 0) / 2;
    if (capacity < background_edges)
      throw FeasibilityError(std::to_string(background_edges) +
                             " background edges exceed the " + std::to_string(capacity) +
                             " simple pairs available among " +
                             std::to_string(free_vertices) + " unplanted vertices");
  }

  SplitMix64 rng(config.seed);

  // Label pools for the background part of the graph.
  std::vector<Label> vertex_pool, edge_pool;
  if (config.overlap_labels) {
    std::unordered_set<Label> seen;
    for (VertexId v : pattern.vertex_ids_sorted())
      if (seen.insert(pattern.vertex_label(v)).second)
        vertex_pool.push_back(pattern.vertex_label(v));
    seen.clear();
    for (const Edge& e : pattern.edges())
      if (seen.insert(e.label).second) edge_pool.push_back(e.label);
  }
  for (std::size_t i = 0; i < config.vertex_alphabet; ++i)
    vertex_pool.push_back("b" + std::to_string(i));
  for (std::size_t i = 0; i < config.edge_alphabet; ++i)
    edge_pool.push_back("y" + std::to_string(i));

  // Vertex labels: instance blocks first, then randomly labeled background.
  const std::vector<VertexId> pattern_ids = pattern.vertex_ids_sorted();
  std::unordered_map<VertexId, std::size_t> pattern_rank;
  for (std::size_t i = 0; i < pattern_ids.size(); ++i) pattern_rank[pattern_ids[i]] = i;

  std::vector<Label> labels(config.vertices);
  for (std::size_t inst = 0; inst < plant_count; ++inst)
    for (std::size_t k = 0; k < pv; ++k)
      labels[inst * pv + k] = pattern.vertex_label(pattern_ids[k]);
  for (std::size_t v = planted_vertices; v < config.vertices; ++v)
    labels[v] = vertex_pool[rng.below(vertex_pool.size())];

  // Instance edge blocks, each internally shuffled.
  std::vector<std::vector<Edge>> units;
  units.reserve(plant_count + background_edges);
  for (std::size_t inst = 0; inst < plant_count; ++inst) {
    const VertexId base = inst * pv;
    std::vector<Edge> block;
    block.reserve(pe);
    for (const Edge& e : pattern.edges()) {
      VertexId s = base + pattern_rank[e.src];
      VertexId d = base + pattern_rank[e.dst];
      if (!config.directed && s > d) std::swap(s, d);
      block.push_back(Edge{s, d, e.label});
    }
    rng.shuffle(block);
    units.push_back(std::move(block));
  }

  // Background edges among the unplanted vertices only, one per unit.
  std::unordered_set<std::uint64_t> taken_pairs;
  for (std::size_t drawn = 0; drawn < background_edges;) {
    VertexId u = planted_vertices + rng.below(free_vertices);
    VertexId v = planted_vertices + rng.below(free_vertices);
    if (u == v) continue;
    if (!config.directed && u > v) std::swap(u, v);
    std::uint64_t key = u * config.vertices + v;
    if (!taken_pairs.insert(key).second) continue;
    Label l = edge_pool[rng.below(edge_pool.size())];
    units.push_back({Edge{u, v, l}});
    ++drawn;
  }

  rng.shuffle(units);

  GenResult result;
  result.plant_count = plant_count;

  std::string& stream = result.stream_text;
  stream.reserve(config.vertices * 8 + config.edges * 12 + 64);
  stream += config.directed ? "graph directed\n" : "graph undirected\n";
  for (std::size_t v = 0; v < config.vertices; ++v)
    append_vertex_line(stream, v, labels[v]);
  for (const auto& unit : units)
    for (const Edge& e : unit) append_edge_line(stream, e);

  std::string& truth = result.truth_text;
  truth += "# truth pattern=" + spec.name + " count=" + std::to_string(plant_count) + "\n";
  truth += config.directed ? "graph directed\n" : "graph undirected\n";
  for (std::size_t k = 0; k < pv; ++k)
    append_vertex_line(truth, k, pattern.vertex_label(pattern_ids[k]));
  std::vector<Edge> truth_edges;
  truth_edges.reserve(pe);
  for (const Edge& e : pattern.edges()) {
    VertexId s = pattern_rank[e.src];
    VertexId d = pattern_rank[e.dst];
    if (!config.directed && s > d) std::swap(s, d);
    truth_edges.push_back(Edge{s, d, e.label});
  }
  std::sort(truth_edges.begin(), truth_edges.end());
  for (const Edge& e : truth_edges) append_edge_line(truth, e);

  return result;
}

}  // namespace graphzip
