#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graphzip/dictionary.hpp"
#include "graphzip/isomorphism.hpp"
#include "graphzip/stream_io.hpp"

namespace graphzip {

// extend_embedding output: the instance grown by every qualifying batch edge,
// plus the batch edges the result accounts for.
struct ExtensionResult {
  LabeledGraph extended;       // built on the batch's vertex ids
  std::vector<Edge> consumed;  // matched edges plus extension edges, sorted
  bool grew{};                 // false when no edge qualified (g' == g)
};

// Per-batch instrumentation.
struct BatchResult {
  // Snapshot trim-order rank -> embedding count, non-zero counts only.
  std::map<std::size_t, std::uint64_t> embeddings_found;
  std::uint64_t edges_used{};
  std::uint64_t singletons_added{};  // leftover edge occurrences inserted
  double seconds{};
  std::size_t dict_size_after{};
  std::uint64_t cum_score_after{};
};

struct MineOptions {
  std::size_t alpha = 5;
  std::size_t theta = 50;
  unsigned threads = 1;
};

struct MineOutcome {
  PatternDictionary dictionary;
  std::vector<BatchResult> batches;
};

// Grows one embedding by every batch edge incident to its host vertices that
// is not already matched. Edges to vertices outside the embedding bring the
// vertex along; edges between embedded vertices are added as internal edges.
// The embedding must replay exactly against the batch.
ExtensionResult extend_embedding(const LabeledGraph& pattern, const Embedding& emb,
                                 const LabeledGraph& batch);

// One round of the compress loop. Searches run over a frozen snapshot of the
// dictionary (concurrently when threads > 1); all mutations are buffered and
// applied serially in ascending pattern seq order, so results are identical
// for every thread count. Leftover edges become single-edge patterns.
BatchResult process_batch(PatternDictionary& dict, const LabeledGraph& batch,
                          std::size_t alpha, unsigned threads = 1);

// Drains the source batch by batch. A final partial batch is processed as-is;
// a stream shorter than alpha is a single batch.
MineOutcome mine_stream(StreamBatchSource& source, const MineOptions& options);

}  // namespace graphzip
