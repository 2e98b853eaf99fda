#include "graphzip/dictionary.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "graphzip/isomorphism.hpp"

namespace graphzip {

std::uint64_t compression_score(std::size_t edge_count, std::uint64_t frequency) {
  if (edge_count == 0)
    throw InvalidPatternError("pattern with zero edges has no score");
  if (frequency == 0) return 0;
  return static_cast<std::uint64_t>(edge_count - 1) * (frequency - 1);
}

PatternDictionary::PatternDictionary(std::size_t theta, std::size_t alpha, bool directed)
    : theta_(theta), alpha_(alpha), directed_(directed) {
  if (theta == 0) throw std::invalid_argument("theta must be positive");
  if (alpha == 0) throw std::invalid_argument("alpha must be positive");
}

std::size_t PatternDictionary::find_isomorphic(const LabeledGraph& pattern) const {
  auto it = by_signature_.find(pattern.signature().key());
  if (it == by_signature_.end()) return npos;
  for (std::size_t idx : it->second)
    if (is_isomorphic(entries_[idx].pattern, pattern)) return idx;
  return npos;
}

void PatternDictionary::index_entry(std::size_t idx) {
  by_signature_[entries_[idx].pattern.signature().key()].push_back(idx);
}

void PatternDictionary::rebuild_index() {
  by_signature_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) index_entry(i);
}

std::uint64_t PatternDictionary::insert_or_increment(const LabeledGraph& pattern,
                                                     std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  if (pattern.edge_count() == 0)
    throw InvalidPatternError("cannot insert a pattern with no edges");
  if (!pattern.connected())
    throw InvalidPatternError("cannot insert a disconnected pattern");
  if (pattern.edge_count() > alpha_)
    throw InvalidPatternError("pattern has more edges than the batch size allows");
  if (pattern.directed() != directed_)
    throw InvalidPatternError("pattern directedness differs from the dictionary's");

  std::size_t idx = find_isomorphic(pattern);
  if (idx != npos) {
    PatternEntry& e = entries_[idx];
    e.frequency += count;
    e.score = compression_score(e.pattern.edge_count(), e.frequency);
    return e.seq;
  }

  PatternEntry entry;
  entry.pattern = pattern;
  entry.frequency = count;
  entry.score = compression_score(pattern.edge_count(), count);
  entry.seq = next_seq_++;
  entries_.push_back(std::move(entry));
  index_entry(entries_.size() - 1);

  std::uint64_t seq = entries_.back().seq;
  if (entries_.size() > 2 * theta_) trim();
  return seq;
}

bool PatternDictionary::increment_by_seq(std::uint64_t seq, std::uint64_t count) {
  for (PatternEntry& e : entries_) {
    if (e.seq == seq) {
      e.frequency += count;
      e.score = compression_score(e.pattern.edge_count(), e.frequency);
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> PatternDictionary::trim_order_indices() const {
  std::vector<std::size_t> order(entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const PatternEntry& ea = entries_[a];
    const PatternEntry& eb = entries_[b];
    if (ea.score != eb.score) return ea.score > eb.score;
    if (ea.pattern.edge_count() != eb.pattern.edge_count())
      return ea.pattern.edge_count() > eb.pattern.edge_count();
    return ea.seq < eb.seq;
  });
  return order;
}

void PatternDictionary::trim() {
  std::vector<std::size_t> order = trim_order_indices();
  if (order.size() > theta_) order.resize(theta_);
  std::vector<PatternEntry> kept;
  kept.reserve(order.size());
  for (std::size_t idx : order) kept.push_back(std::move(entries_[idx]));
  entries_ = std::move(kept);
  rebuild_index();
}

std::vector<PatternEntry> PatternDictionary::top_k(std::size_t k) const {
  std::vector<std::size_t> order = trim_order_indices();
  if (order.size() > k) order.resize(k);
  std::vector<PatternEntry> out;
  out.reserve(order.size());
  for (std::size_t idx : order) out.push_back(entries_[idx]);
  return out;
}

const PatternEntry* PatternDictionary::find_by_seq(std::uint64_t seq) const {
  for (const PatternEntry& e : entries_)
    if (e.seq == seq) return &e;
  return nullptr;
}

bool PatternDictionary::contains_isomorphic(const LabeledGraph& pattern) const {
  return find_isomorphic(pattern) != npos;
}

std::uint64_t PatternDictionary::total_score() const {
  std::uint64_t sum = 0;
  for (const PatternEntry& e : entries_) sum += e.score;
  return sum;
}

// ===== text form =====
//
//   # graphzip-dict v1 directed=<0|1> alpha=<int> theta=<int>
//   p <rank> score=<int> freq=<int>
//   v <local_id> <label>
//   e <src_local> <dst_local> <label>
//
// Blocks in trim order, separated by blank lines. Local vertex ids are
// assigned by ascending original id, edges sorted, so equal dictionaries
// serialize to identical bytes.

void PatternDictionary::serialize(std::ostream& out) const {
  out << "# graphzip-dict v1 directed=" << (directed_ ? 1 : 0) << " alpha=" << alpha_
      << " theta=" << theta_ << "\n";
  std::vector<std::size_t> order = trim_order_indices();
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const PatternEntry& e = entries_[order[rank]];
    if (rank > 0) out << "\n";
    out << "p " << rank << " score=" << e.score << " freq=" << e.frequency << "\n";

    std::vector<VertexId> ids = e.pattern.vertex_ids_sorted();
    std::unordered_map<VertexId, std::size_t> local;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      local[ids[i]] = i;
      out << "v " << i << " " << e.pattern.vertex_label(ids[i]) << "\n";
    }
    std::vector<Edge> edges;
    edges.reserve(e.pattern.edge_count());
    for (const Edge& ge : e.pattern.edges())
      edges.push_back(Edge{local[ge.src], local[ge.dst], ge.label});
    std::sort(edges.begin(), edges.end());
    for (const Edge& ge : edges)
      out << "e " << ge.src << " " << ge.dst << " " << ge.label << "\n";
  }
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_u64(const std::string& tok, const std::string& source,
                        std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(source, line, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

std::uint64_t parse_kv_u64(const std::string& tok, const std::string& key,
                           const std::string& source, std::size_t line) {
  std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw ParseError(source, line, "expected " + prefix + "<int>, got '" + tok + "'");
  return parse_u64(tok.substr(prefix.size()), source, line, key.c_str());
}

}  // namespace

PatternDictionary PatternDictionary::parse(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line))
    throw ParseError(source, 1, "empty dictionary file");
  ++lineno;
  {
    auto toks = split_ws(line);
    if (toks.size() != 6 || toks[0] != "#" || toks[1] != "graphzip-dict" || toks[2] != "v1")
      throw ParseError(source, lineno, "bad dictionary header");
    std::uint64_t directed = parse_kv_u64(toks[3], "directed", source, lineno);
    if (directed > 1)
      throw ParseError(source, lineno, "directed flag must be 0 or 1");
    std::uint64_t alpha = parse_kv_u64(toks[4], "alpha", source, lineno);
    std::uint64_t theta = parse_kv_u64(toks[5], "theta", source, lineno);
    if (alpha == 0 || theta == 0)
      throw ParseError(source, lineno, "alpha and theta must be positive");

    PatternDictionary dict(theta, alpha, directed == 1);

    bool in_block = false;
    LabeledGraph pattern(dict.directed_);
    std::uint64_t score = 0, freq = 0, expected_rank = 0;

    auto close_block = [&]() {
      if (!in_block) return;
      if (pattern.edge_count() == 0)
        throw ParseError(source, lineno, "pattern block has no edges");
      if (!pattern.connected())
        throw ParseError(source, lineno, "pattern block is disconnected");
      if (freq == 0)
        throw ParseError(source, lineno, "pattern frequency must be positive");
      if (score != compression_score(pattern.edge_count(), freq))
        throw ParseError(source, lineno, "stored score disagrees with edge count and frequency");
      if (dict.find_isomorphic(pattern) != npos)
        throw ParseError(source, lineno, "duplicate pattern block");
      PatternEntry entry;
      entry.pattern = std::move(pattern);
      entry.frequency = freq;
      entry.score = score;
      entry.seq = dict.next_seq_++;
      dict.entries_.push_back(std::move(entry));
      dict.index_entry(dict.entries_.size() - 1);
      if (dict.entries_.size() > 2 * dict.theta_)
        throw ParseError(source, lineno, "dictionary exceeds its own capacity");
      pattern = LabeledGraph(dict.directed_);
      in_block = false;
    };

    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      auto toks = split_ws(line);
      if (toks.empty()) {
        close_block();
        continue;
      }
      if (toks[0] == "p") {
        close_block();
        if (toks.size() != 4)
          throw ParseError(source, lineno, "expected: p <rank> score=<int> freq=<int>");
        std::uint64_t rank = parse_u64(toks[1], source, lineno, "rank");
        if (rank != expected_rank)
          throw ParseError(source, lineno, "pattern ranks must be consecutive from 0");
        ++expected_rank;
        score = parse_kv_u64(toks[2], "score", source, lineno);
        freq = parse_kv_u64(toks[3], "freq", source, lineno);
        in_block = true;
      } else if (toks[0] == "v") {
        if (!in_block)
          throw ParseError(source, lineno, "vertex line outside a pattern block");
        if (toks.size() != 3)
          throw ParseError(source, lineno, "expected: v <id> <label>");
        VertexId id = parse_u64(toks[1], source, lineno, "vertex id");
        try {
          pattern.add_vertex(id, toks[2]);
        } catch (const Error& e) {
          throw ParseError(source, lineno, e.what());
        }
      } else if (toks[0] == "e") {
        if (!in_block)
          throw ParseError(source, lineno, "edge line outside a pattern block");
        if (toks.size() != 4)
          throw ParseError(source, lineno, "expected: e <src> <dst> <label>");
        VertexId src = parse_u64(toks[1], source, lineno, "vertex id");
        VertexId dst = parse_u64(toks[2], source, lineno, "vertex id");
        try {
          pattern.add_edge(src, dst, toks[3]);
        } catch (const Error& e) {
          throw ParseError(source, lineno, e.what());
        }
      } else {
        throw ParseError(source, lineno, "unrecognized record '" + toks[0] + "'");
      }
    }
    close_block();
    return dict;
  }
}

}  // namespace graphzip
