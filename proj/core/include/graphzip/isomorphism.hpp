#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "graphzip/graph.hpp"

namespace graphzip {

// One occurrence of a pattern inside a host graph. Identity is the matched
// edge set: automorphic re-mappings that select the same host edges are the
// same embedding, and only one representative (the lexicographically smallest
// vertex map) is kept.
struct Embedding {
  std::map<VertexId, VertexId> vertex_map;  // pattern vertex -> host vertex
  std::vector<Edge> matched_edges;          // host edges, sorted

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.vertex_map == b.vertex_map && a.matched_edges == b.matched_edges;
  }
};

// Exact isomorphism with a signature fast-reject up front. Graphs of
// differing directedness never match.
bool is_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2);

// Reusable host-side index for repeated pattern searches against one graph.
// find() is const and safe to call from several threads at once.
class EmbeddingFinder {
public:
  explicit EmbeddingFinder(const LabeledGraph& host);

  // All embeddings of a connected, non-empty pattern, deduplicated by matched
  // edge set and returned in a canonical order (sorted by edge set).
  std::vector<Embedding> find(const LabeledGraph& pattern) const;

private:
  const LabeledGraph* host_;
  std::unordered_map<Label, std::vector<VertexId>> vertices_by_label_;  // sorted ids
};

std::vector<Embedding> enumerate_embeddings(const LabeledGraph& pattern,
                                            const LabeledGraph& host);

// Test oracle: enumerates every injective vertex map by exhaustive
// permutation and filters. Hosts are capped at 10 vertices.
std::vector<Embedding> brute_force_embeddings(const LabeledGraph& pattern,
                                              const LabeledGraph& host);

}  // namespace graphzip
