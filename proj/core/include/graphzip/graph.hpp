#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "graphzip/errors.hpp"

namespace graphzip {

using VertexId = std::uint64_t;
using Label = std::string;

// Labels are single whitespace-free tokens so they survive the text formats.
// '#' is excluded because it starts a comment in every file format here.
void validate_label(const Label& label);

struct Edge {
  VertexId src{};
  VertexId dst{};
  Label label;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.src == b.src && a.dst == b.dst && a.label == b.label;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
  }
};

// Cheap necessary condition for isomorphism: counts plus sorted label multisets.
struct GraphSignature {
  std::size_t vertex_count{};
  std::size_t edge_count{};
  std::vector<Label> vertex_labels;  // sorted
  std::vector<Label> edge_labels;    // sorted

  // Stable string form, usable as a hash-map key.
  std::string key() const;

  friend bool operator==(const GraphSignature& a, const GraphSignature& b) {
    return a.vertex_count == b.vertex_count && a.edge_count == b.edge_count &&
           a.vertex_labels == b.vertex_labels && a.edge_labels == b.edge_labels;
  }
};

// Simple labeled graph over integer vertex ids. Undirected edges are stored
// with src < dst; duplicate (endpoints, label) insertions are no-ops. Parallel
// edges with distinct labels are allowed, self-loops are not.
class LabeledGraph {
public:
  explicit LabeledGraph(bool directed = false) : directed_(directed) {}

  bool directed() const noexcept { return directed_; }

  // Idempotent for a repeated (id, label) pair; conflicting relabel throws.
  void add_vertex(VertexId id, const Label& label);

  // Both endpoints must already exist. Returns true if the edge was new.
  bool add_edge(VertexId src, VertexId dst, const Label& label);
  bool add_edge(const Edge& e) { return add_edge(e.src, e.dst, e.label); }

  bool has_vertex(VertexId id) const { return vertices_.count(id) != 0; }
  const Label& vertex_label(VertexId id) const;
  bool has_edge(VertexId src, VertexId dst, const Label& label) const;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Insertion order; orientation already normalized for undirected graphs.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<VertexId> vertex_ids_sorted() const;

  // Indices into edges() touching the vertex, ascending.
  const std::vector<std::uint32_t>& incident(VertexId id) const;

  // Every edge with at least one endpoint in vs, sorted, deduplicated.
  std::vector<Edge> incident_edges(const std::vector<VertexId>& vs) const;

  // Labels of edges between the two endpoints, sorted. Orientation is
  // respected for directed graphs and ignored for undirected ones.
  std::vector<Label> labels_between(VertexId src, VertexId dst) const;

  std::size_t degree(VertexId id) const { return incident(id).size(); }
  std::size_t out_degree(VertexId id) const;
  std::size_t in_degree(VertexId id) const;

  GraphSignature signature() const;

  // Weak connectivity; graphs with fewer than two vertices count as connected.
  bool connected() const;

private:
  struct PairKey {
    VertexId a, b;
    friend bool operator==(const PairKey& x, const PairKey& y) {
      return x.a == y.a && x.b == y.b;
    }
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
      std::size_t h = std::hash<VertexId>{}(k.a);
      h ^= std::hash<VertexId>{}(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  PairKey pair_key(VertexId src, VertexId dst) const {
    if (!directed_ && src > dst) return PairKey{dst, src};
    return PairKey{src, dst};
  }

  bool directed_;
  std::unordered_map<VertexId, Label> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, std::vector<std::uint32_t>> incident_;
  std::unordered_map<PairKey, std::vector<std::uint32_t>, PairKeyHash> by_pair_;

  static const std::vector<std::uint32_t> kNoEdges;
};

}  // namespace graphzip
