#include "graphzip/compressor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace graphzip {

namespace {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ExtensionResult extend_embedding(const LabeledGraph& pattern, const Embedding& emb,
                                 const LabeledGraph& batch) {
  // Replay the embedding against the batch before trusting it.
  if (emb.vertex_map.size() != pattern.vertex_count())
    throw EmbeddingMismatchError("embedding maps a different number of vertices");
  std::vector<VertexId> hosts;
  hosts.reserve(emb.vertex_map.size());
  for (const auto& [pv, hv] : emb.vertex_map) {
    if (!pattern.has_vertex(pv))
      throw EmbeddingMismatchError("embedding names a vertex the pattern lacks");
    if (!batch.has_vertex(hv))
      throw EmbeddingMismatchError("embedding maps onto a vertex the batch lacks");
    if (pattern.vertex_label(pv) != batch.vertex_label(hv))
      throw EmbeddingMismatchError("embedded vertex labels disagree with the batch");
    hosts.push_back(hv);
  }
  std::sort(hosts.begin(), hosts.end());
  if (std::adjacent_find(hosts.begin(), hosts.end()) != hosts.end())
    throw EmbeddingMismatchError("embedding is not injective");

  std::vector<Edge> expected;
  expected.reserve(pattern.edge_count());
  for (const Edge& e : pattern.edges()) {
    VertexId s = emb.vertex_map.at(e.src);
    VertexId d = emb.vertex_map.at(e.dst);
    if (!batch.has_edge(s, d, e.label))
      throw EmbeddingMismatchError("matched edge is absent from the batch");
    if (!batch.directed() && s > d) std::swap(s, d);
    expected.push_back(Edge{s, d, e.label});
  }
  std::sort(expected.begin(), expected.end());
  std::vector<Edge> claimed = emb.matched_edges;
  std::sort(claimed.begin(), claimed.end());
  if (claimed != expected)
    throw EmbeddingMismatchError("matched edge set disagrees with the vertex map");

  ExtensionResult result;
  result.extended = LabeledGraph(batch.directed());
  for (VertexId hv : hosts)
    result.extended.add_vertex(hv, batch.vertex_label(hv));
  for (const Edge& e : expected)
    result.extended.add_edge(e);
  result.consumed = expected;

  // One extension round: every incident batch edge joins at once. Vertices
  // added by the extension do not cascade into further lookups.
  for (VertexId hv : hosts) {
    for (std::uint32_t idx : batch.incident(hv)) {
      const Edge& e = batch.edges()[idx];
      if (result.extended.has_edge(e.src, e.dst, e.label)) continue;
      if (!result.extended.has_vertex(e.src))
        result.extended.add_vertex(e.src, batch.vertex_label(e.src));
      if (!result.extended.has_vertex(e.dst))
        result.extended.add_vertex(e.dst, batch.vertex_label(e.dst));
      result.extended.add_edge(e);
      result.consumed.push_back(e);
      result.grew = true;
    }
  }
  std::sort(result.consumed.begin(), result.consumed.end());
  return result;
}

namespace {

struct PatternWork {
  std::uint64_t seq{};
  std::size_t rank{};  // trim-order rank at snapshot time
  std::vector<Embedding> embeddings;
  std::vector<ExtensionResult> extensions;
};

}  // namespace

BatchResult process_batch(PatternDictionary& dict, const LabeledGraph& batch,
                          std::size_t alpha, unsigned threads) {
  if (batch.edge_count() > alpha)
    throw OversizeBatchError("batch has " + std::to_string(batch.edge_count()) +
                             " edges, limit is " + std::to_string(alpha));

  const auto started = std::chrono::steady_clock::now();
  BatchResult result;

  // Freeze the dictionary as it stood when the batch arrived.
  struct SnapshotEntry {
    std::uint64_t seq;
    std::uint64_t score;
    std::size_t edge_count;
    LabeledGraph pattern;
  };
  std::vector<SnapshotEntry> snapshot;
  snapshot.reserve(dict.size());
  for (const PatternEntry& e : dict.entries())
    snapshot.push_back({e.seq, e.score, e.pattern.edge_count(), e.pattern});
  std::sort(snapshot.begin(), snapshot.end(),
            [](const SnapshotEntry& a, const SnapshotEntry& b) { return a.seq < b.seq; });

  std::vector<std::size_t> by_rank(snapshot.size());
  for (std::size_t i = 0; i < by_rank.size(); ++i) by_rank[i] = i;
  std::sort(by_rank.begin(), by_rank.end(), [&](std::size_t a, std::size_t b) {
    if (snapshot[a].score != snapshot[b].score) return snapshot[a].score > snapshot[b].score;
    if (snapshot[a].edge_count != snapshot[b].edge_count)
      return snapshot[a].edge_count > snapshot[b].edge_count;
    return snapshot[a].seq < snapshot[b].seq;
  });

  // Search phase: read-only against the frozen snapshot and the batch.
  const EmbeddingFinder finder(batch);
  std::vector<PatternWork> work(snapshot.size());
  parallel_for(snapshot.size(), threads, [&](std::size_t i) {
    work[i].seq = snapshot[i].seq;
    work[i].embeddings = finder.find(snapshot[i].pattern);
    work[i].extensions.reserve(work[i].embeddings.size());
    for (const Embedding& emb : work[i].embeddings)
      work[i].extensions.push_back(extend_embedding(snapshot[i].pattern, emb, batch));
  });
  for (std::size_t r = 0; r < by_rank.size(); ++r) work[by_rank[r]].rank = r;

  // Apply phase: serial, ascending seq. A snapshot pattern trimmed away by an
  // earlier insertion in this same batch stays forgotten; only its extensions
  // and edge marks still land.
  std::map<Edge, std::size_t> edge_index;
  for (std::size_t i = 0; i < batch.edges().size(); ++i)
    edge_index.emplace(batch.edges()[i], i);
  std::vector<bool> used(batch.edge_count(), false);

  for (const PatternWork& w : work) {
    if (w.embeddings.empty()) continue;
    result.embeddings_found[w.rank] = w.embeddings.size();
    dict.increment_by_seq(w.seq, w.embeddings.size());
    for (const ExtensionResult& ext : w.extensions) {
      for (const Edge& e : ext.consumed) used[edge_index.at(e)] = true;
      if (ext.grew) dict.insert_or_increment(ext.extended, 1);
    }
  }

  for (std::size_t i = 0; i < batch.edges().size(); ++i) {
    if (used[i]) continue;
    const Edge& e = batch.edges()[i];
    LabeledGraph single(batch.directed());
    single.add_vertex(e.src, batch.vertex_label(e.src));
    single.add_vertex(e.dst, batch.vertex_label(e.dst));
    single.add_edge(e);
    dict.insert_or_increment(single, 1);
    ++result.singletons_added;
  }

  result.edges_used = static_cast<std::uint64_t>(
      std::count(used.begin(), used.end(), true));
  result.dict_size_after = dict.size();
  result.cum_score_after = dict.total_score();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

MineOutcome mine_stream(StreamBatchSource& source, const MineOptions& options) {
  if (options.alpha == 0) throw std::invalid_argument("alpha must be positive");
  if (options.theta == 0) throw std::invalid_argument("theta must be positive");

  std::optional<PatternDictionary> dict;
  std::vector<BatchResult> results;
  while (auto batch = source.next()) {
    if (!dict)
      dict.emplace(options.theta, options.alpha, batch->graph.directed());
    results.push_back(
        process_batch(*dict, batch->graph, options.alpha, options.threads));
  }
  if (!dict) dict.emplace(options.theta, options.alpha, false);
  return MineOutcome{std::move(*dict), std::move(results)};
}

}  // namespace graphzip
