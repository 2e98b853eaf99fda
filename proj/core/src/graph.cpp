#include "graphzip/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace graphzip {

const std::vector<std::uint32_t> LabeledGraph::kNoEdges{};

void validate_label(const Label& label) {
  if (label.empty()) throw std::invalid_argument("label must be non-empty");
  for (unsigned char c : label) {
    if (std::isspace(c) || c == '#')
      throw std::invalid_argument("label contains whitespace or '#': " + label);
  }
}

void LabeledGraph::add_vertex(VertexId id, const Label& label) {
  validate_label(label);
  auto [it, inserted] = vertices_.emplace(id, label);
  if (!inserted && it->second != label)
    throw LabelConflictError("vertex " + std::to_string(id) + " already labeled '" +
                             it->second + "', cannot relabel to '" + label + "'");
}

bool LabeledGraph::add_edge(VertexId src, VertexId dst, const Label& label) {
  validate_label(label);
  if (src == dst)
    throw SelfLoopError("self-loop on vertex " + std::to_string(src));
  if (!has_vertex(src))
    throw DanglingEdgeError("edge endpoint " + std::to_string(src) + " is undeclared");
  if (!has_vertex(dst))
    throw DanglingEdgeError("edge endpoint " + std::to_string(dst) + " is undeclared");

  VertexId s = src, d = dst;
  if (!directed_ && s > d) std::swap(s, d);

  auto& slot = by_pair_[PairKey{s, d}];
  for (std::uint32_t idx : slot)
    if (edges_[idx].label == label) return false;  // duplicate, no-op

  auto idx = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back(Edge{s, d, label});
  slot.push_back(idx);
  incident_[s].push_back(idx);
  incident_[d].push_back(idx);
  return true;
}

const Label& LabeledGraph::vertex_label(VertexId id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end())
    throw UnknownVertexError("unknown vertex " + std::to_string(id));
  return it->second;
}

bool LabeledGraph::has_edge(VertexId src, VertexId dst, const Label& label) const {
  auto it = by_pair_.find(pair_key(src, dst));
  if (it == by_pair_.end()) return false;
  for (std::uint32_t idx : it->second)
    if (edges_[idx].label == label) return true;
  return false;
}

std::vector<VertexId> LabeledGraph::vertex_ids_sorted() const {
  std::vector<VertexId> ids;
  ids.reserve(vertices_.size());
  for (const auto& [id, label] : vertices_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

const std::vector<std::uint32_t>& LabeledGraph::incident(VertexId id) const {
  if (!has_vertex(id))
    throw UnknownVertexError("unknown vertex " + std::to_string(id));
  auto it = incident_.find(id);
  return it == incident_.end() ? kNoEdges : it->second;
}

std::vector<Edge> LabeledGraph::incident_edges(const std::vector<VertexId>& vs) const {
  std::vector<std::uint32_t> idxs;
  for (VertexId v : vs) {
    const auto& inc = incident(v);  // throws on unknown vertex
    idxs.insert(idxs.end(), inc.begin(), inc.end());
  }
  std::sort(idxs.begin(), idxs.end());
  idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());

  std::vector<Edge> out;
  out.reserve(idxs.size());
  for (std::uint32_t idx : idxs) out.push_back(edges_[idx]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> LabeledGraph::labels_between(VertexId src, VertexId dst) const {
  std::vector<Label> out;
  auto it = by_pair_.find(pair_key(src, dst));
  if (it != by_pair_.end()) {
    for (std::uint32_t idx : it->second) {
      const Edge& e = edges_[idx];
      if (directed_ && (e.src != src || e.dst != dst)) continue;
      out.push_back(e.label);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t LabeledGraph::out_degree(VertexId id) const {
  const auto& inc = incident(id);
  if (!directed_) return inc.size();
  std::size_t n = 0;
  for (std::uint32_t idx : inc)
    if (edges_[idx].src == id) ++n;
  return n;
}

std::size_t LabeledGraph::in_degree(VertexId id) const {
  const auto& inc = incident(id);
  if (!directed_) return inc.size();
  std::size_t n = 0;
  for (std::uint32_t idx : inc)
    if (edges_[idx].dst == id) ++n;
  return n;
}

GraphSignature LabeledGraph::signature() const {
  GraphSignature sig;
  sig.vertex_count = vertices_.size();
  sig.edge_count = edges_.size();
  sig.vertex_labels.reserve(vertices_.size());
  for (const auto& [id, label] : vertices_) sig.vertex_labels.push_back(label);
  sig.edge_labels.reserve(edges_.size());
  for (const Edge& e : edges_) sig.edge_labels.push_back(e.label);
  std::sort(sig.vertex_labels.begin(), sig.vertex_labels.end());
  std::sort(sig.edge_labels.begin(), sig.edge_labels.end());
  return sig;
}

std::string GraphSignature::key() const {
  std::string k = std::to_string(vertex_count) + "|" + std::to_string(edge_count) + "|";
  for (const Label& l : vertex_labels) {
    k += l;
    k += ',';
  }
  k += '|';
  for (const Label& l : edge_labels) {
    k += l;
    k += ',';
  }
  return k;
}

bool LabeledGraph::connected() const {
  if (vertices_.size() < 2) return true;
  std::vector<VertexId> ids = vertex_ids_sorted();
  std::unordered_map<VertexId, bool> seen;
  std::queue<VertexId> q;
  q.push(ids[0]);
  seen[ids[0]] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    auto it = incident_.find(v);
    if (it == incident_.end()) continue;
    for (std::uint32_t idx : it->second) {
      const Edge& e = edges_[idx];
      VertexId other = (e.src == v) ? e.dst : e.src;
      if (!seen[other]) {
        seen[other] = true;
        ++reached;
        q.push(other);
      }
    }
  }
  return reached == vertices_.size();
}

}  // namespace graphzip
