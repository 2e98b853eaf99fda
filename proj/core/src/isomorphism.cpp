#include "graphzip/isomorphism.hpp"

#include <algorithm>
#include <unordered_set>

namespace graphzip {

namespace {

// Shared by both matchers: collapse automorphic duplicates (same host edge
// set) keeping the smallest vertex map, then emit in sorted edge-set order.
class EmbeddingCollector {
public:
  void record(const std::map<VertexId, VertexId>& vertex_map,
              std::vector<Edge> matched_edges) {
    std::sort(matched_edges.begin(), matched_edges.end());
    auto [it, inserted] = dedup_.emplace(std::move(matched_edges), vertex_map);
    if (!inserted && vertex_map < it->second) it->second = vertex_map;
  }

  std::vector<Embedding> take() {
    std::vector<Embedding> out;
    out.reserve(dedup_.size());
    for (auto& [edges, vmap] : dedup_)
      out.push_back(Embedding{vmap, edges});
    return out;
  }

private:
  std::map<std::vector<Edge>, std::map<VertexId, VertexId>> dedup_;
};

std::vector<Edge> map_pattern_edges(const LabeledGraph& pattern,
                                    const LabeledGraph& host,
                                    const std::map<VertexId, VertexId>& vmap) {
  std::vector<Edge> out;
  out.reserve(pattern.edge_count());
  for (const Edge& e : pattern.edges()) {
    VertexId s = vmap.at(e.src);
    VertexId d = vmap.at(e.dst);
    if (!host.directed() && s > d) std::swap(s, d);
    out.push_back(Edge{s, d, e.label});
  }
  return out;
}

// Pattern vertices ordered so every vertex after the first touches an
// already-placed one; ties broken toward rare host labels and high degree.
std::vector<VertexId> matching_order(
    const LabeledGraph& pattern,
    const std::unordered_map<Label, std::vector<VertexId>>& host_by_label) {
  auto host_count = [&](const Label& l) -> std::size_t {
    auto it = host_by_label.find(l);
    return it == host_by_label.end() ? 0 : it->second.size();
  };

  std::vector<VertexId> ids = pattern.vertex_ids_sorted();
  std::vector<VertexId> order;
  std::unordered_set<VertexId> placed;

  auto better_start = [&](VertexId a, VertexId b) {
    auto ca = host_count(pattern.vertex_label(a));
    auto cb = host_count(pattern.vertex_label(b));
    if (ca != cb) return ca < cb;
    if (pattern.degree(a) != pattern.degree(b))
      return pattern.degree(a) > pattern.degree(b);
    return a < b;
  };

  VertexId start = ids[0];
  for (VertexId v : ids)
    if (better_start(v, start)) start = v;
  order.push_back(start);
  placed.insert(start);

  while (order.size() < ids.size()) {
    VertexId best = 0;
    bool found = false;
    std::size_t best_attached = 0;
    for (VertexId v : ids) {
      if (placed.count(v)) continue;
      std::size_t attached = 0;
      for (std::uint32_t idx : pattern.incident(v)) {
        const Edge& e = pattern.edges()[idx];
        VertexId other = (e.src == v) ? e.dst : e.src;
        if (placed.count(other)) ++attached;
      }
      if (attached == 0) continue;  // pattern is connected, skip for now
      if (!found || attached > best_attached ||
          (attached == best_attached && better_start(v, best))) {
        best = v;
        best_attached = attached;
        found = true;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

}  // namespace

EmbeddingFinder::EmbeddingFinder(const LabeledGraph& host) : host_(&host) {
  for (VertexId v : host.vertex_ids_sorted())
    vertices_by_label_[host.vertex_label(v)].push_back(v);
}

std::vector<Embedding> EmbeddingFinder::find(const LabeledGraph& pattern) const {
  if (pattern.edge_count() == 0)
    throw EmptyPatternError("pattern has no edges");
  if (!pattern.connected())
    throw InvalidPatternError("pattern is disconnected");
  const LabeledGraph& host = *host_;
  if (pattern.directed() != host.directed()) return {};
  if (pattern.vertex_count() > host.vertex_count() ||
      pattern.edge_count() > host.edge_count())
    return {};

  const std::vector<VertexId> order = matching_order(pattern, vertices_by_label_);
  const std::size_t n = order.size();

  // anchor[i]: position < i of a placed pattern neighbor of order[i]
  std::vector<std::size_t> anchor(n, 0);
  std::unordered_map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::uint32_t idx : pattern.incident(order[i])) {
      const Edge& e = pattern.edges()[idx];
      VertexId other = (e.src == order[i]) ? e.dst : e.src;
      if (pos[other] < i) {
        anchor[i] = pos[other];
        break;
      }
    }
  }

  std::map<VertexId, VertexId> vmap;
  std::unordered_set<VertexId> used;
  EmbeddingCollector collector;

  auto consistent = [&](VertexId pv, VertexId hv) {
    if (pattern.vertex_label(pv) != host.vertex_label(hv)) return false;
    for (std::uint32_t idx : pattern.incident(pv)) {
      const Edge& e = pattern.edges()[idx];
      VertexId other = (e.src == pv) ? e.dst : e.src;
      auto it = vmap.find(other);
      if (it == vmap.end()) continue;
      VertexId hs = (e.src == pv) ? hv : it->second;
      VertexId hd = (e.src == pv) ? it->second : hv;
      if (!host.has_edge(hs, hd, e.label)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      collector.record(vmap, map_pattern_edges(pattern, host, vmap));
      return;
    }
    VertexId pv = order[depth];
    if (depth == 0) {
      auto it = vertices_by_label_.find(pattern.vertex_label(pv));
      if (it == vertices_by_label_.end()) return;
      for (VertexId hv : it->second) {
        if (host.degree(hv) < pattern.degree(pv)) continue;
        vmap[pv] = hv;
        used.insert(hv);
        self(self, depth + 1);
        used.erase(hv);
        vmap.erase(pv);
      }
      return;
    }
    VertexId ha = vmap[order[anchor[depth]]];
    std::unordered_set<VertexId> tried;
    for (std::uint32_t idx : host.incident(ha)) {
      const Edge& e = host.edges()[idx];
      VertexId hv = (e.src == ha) ? e.dst : e.src;
      if (used.count(hv) || tried.count(hv)) continue;
      tried.insert(hv);
      if (host.degree(hv) < pattern.degree(pv)) continue;
      if (!consistent(pv, hv)) continue;
      vmap[pv] = hv;
      used.insert(hv);
      self(self, depth + 1);
      used.erase(hv);
      vmap.erase(pv);
    }
  };
  search(search, 0);

  return collector.take();
}

std::vector<Embedding> enumerate_embeddings(const LabeledGraph& pattern,
                                            const LabeledGraph& host) {
  return EmbeddingFinder(host).find(pattern);
}

std::vector<Embedding> brute_force_embeddings(const LabeledGraph& pattern,
                                              const LabeledGraph& host) {
  if (host.vertex_count() > 10)
    throw OracleSizeError("reference matcher accepts hosts of at most 10 vertices");
  if (pattern.edge_count() == 0)
    throw EmptyPatternError("pattern has no edges");
  if (pattern.directed() != host.directed()) return {};

  const std::vector<VertexId> pids = pattern.vertex_ids_sorted();
  const std::vector<VertexId> hids = host.vertex_ids_sorted();
  if (pids.size() > hids.size()) return {};

  EmbeddingCollector collector;
  std::vector<VertexId> choice(pids.size());
  std::vector<bool> taken(hids.size(), false);

  auto valid = [&]() {
    std::map<VertexId, VertexId> vmap;
    for (std::size_t i = 0; i < pids.size(); ++i) vmap[pids[i]] = choice[i];
    for (VertexId pv : pids)
      if (pattern.vertex_label(pv) != host.vertex_label(vmap[pv])) return;
    for (const Edge& e : pattern.edges())
      if (!host.has_edge(vmap[e.src], vmap[e.dst], e.label)) return;
    collector.record(vmap, map_pattern_edges(pattern, host, vmap));
  };

  auto permute = [&](auto&& self, std::size_t depth) -> void {
    if (depth == pids.size()) {
      valid();
      return;
    }
    for (std::size_t j = 0; j < hids.size(); ++j) {
      if (taken[j]) continue;
      taken[j] = true;
      choice[depth] = hids[j];
      self(self, depth + 1);
      taken[j] = false;
    }
  };
  permute(permute, 0);

  return collector.take();
}

bool is_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.directed() != g2.directed()) return false;
  if (!(g1.signature() == g2.signature())) return false;
  if (g1.vertex_count() == 0) return true;

  std::unordered_map<Label, std::vector<VertexId>> g2_by_label;
  for (VertexId v : g2.vertex_ids_sorted())
    g2_by_label[g2.vertex_label(v)].push_back(v);

  // Order g1 vertices: prefer attaching to already-placed neighbors, then
  // rare labels. Handles disconnected graphs by falling back to any vertex.
  std::vector<VertexId> ids = g1.vertex_ids_sorted();
  std::vector<VertexId> order;
  std::unordered_set<VertexId> placed;
  while (order.size() < ids.size()) {
    VertexId best = 0;
    bool found = false;
    std::size_t best_attached = 0;
    for (VertexId v : ids) {
      if (placed.count(v)) continue;
      std::size_t attached = 0;
      for (std::uint32_t idx : g1.incident(v)) {
        const Edge& e = g1.edges()[idx];
        VertexId other = (e.src == v) ? e.dst : e.src;
        if (placed.count(other)) ++attached;
      }
      if (!found || attached > best_attached ||
          (attached == best_attached &&
           g2_by_label[g1.vertex_label(v)].size() <
               g2_by_label[g1.vertex_label(best)].size())) {
        best = v;
        best_attached = attached;
        found = true;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }

  std::unordered_map<VertexId, VertexId> vmap;
  std::unordered_set<VertexId> used;

  // A completed injective map that carries every g1 edge into g2 is a full
  // isomorphism because the signature check pinned equal edge counts.
  auto compatible = [&](VertexId a, VertexId b) {
    if (g1.vertex_label(a) != g2.vertex_label(b)) return false;
    if (g1.degree(a) != g2.degree(b)) return false;
    if (g1.directed() &&
        (g1.out_degree(a) != g2.out_degree(b) || g1.in_degree(a) != g2.in_degree(b)))
      return false;
    for (std::uint32_t idx : g1.incident(a)) {
      const Edge& e = g1.edges()[idx];
      VertexId other = (e.src == a) ? e.dst : e.src;
      auto it = vmap.find(other);
      if (it == vmap.end()) continue;
      VertexId s1 = e.src, d1 = e.dst;
      VertexId s2 = (s1 == a) ? b : it->second;
      VertexId d2 = (d1 == a) ? b : it->second;
      if (g1.labels_between(s1, d1) != g2.labels_between(s2, d2)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    VertexId a = order[depth];
    for (VertexId b : g2_by_label[g1.vertex_label(a)]) {
      if (used.count(b)) continue;
      if (!compatible(a, b)) continue;
      vmap[a] = b;
      used.insert(b);
      if (self(self, depth + 1)) return true;
      used.erase(b);
      vmap.erase(a);
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace graphzip
