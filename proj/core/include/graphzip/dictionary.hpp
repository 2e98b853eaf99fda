#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "graphzip/graph.hpp"

namespace graphzip {

// Compression value of a pattern: (edges - 1) * (frequency - 1), clamped to
// zero for unseen patterns. Single-edge and frequency-1 patterns score zero.
std::uint64_t compression_score(std::size_t edge_count, std::uint64_t frequency);

struct PatternEntry {
  LabeledGraph pattern;     // connected, at least one edge
  std::uint64_t frequency{};
  std::uint64_t score{};
  std::uint64_t seq{};      // insertion order, unique per dictionary
};

// Bounded dictionary of mined patterns. Holds at most 2*theta entries; once
// an insertion pushes it past that, it is trimmed back to the best theta.
// Entries are deduplicated by exact isomorphism (signature prefilter first).
// Single writer; concurrent readers are fine between mutations.
class PatternDictionary {
public:
  PatternDictionary(std::size_t theta, std::size_t alpha, bool directed);

  std::size_t theta() const noexcept { return theta_; }
  std::size_t alpha() const noexcept { return alpha_; }
  bool directed() const noexcept { return directed_; }

  // Adds a pattern or bumps an isomorphic entry's frequency by count.
  // New entries start at frequency = count. Returns the entry's seq.
  std::uint64_t insert_or_increment(const LabeledGraph& pattern, std::uint64_t count);

  // Bumps frequency by seq if the entry still exists. Returns false when the
  // entry has been trimmed away in the meantime.
  bool increment_by_seq(std::uint64_t seq, std::uint64_t count);

  // Sorts by (score desc, edge count desc, seq asc) and, when above capacity,
  // keeps only the best theta. Idempotent.
  void trim();

  // First k entries in trim order; k may exceed size.
  std::vector<PatternEntry> top_k(std::size_t k) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<PatternEntry>& entries() const noexcept { return entries_; }
  const PatternEntry* find_by_seq(std::uint64_t seq) const;
  bool contains_isomorphic(const LabeledGraph& pattern) const;
  std::uint64_t total_score() const;

  void serialize(std::ostream& out) const;
  static PatternDictionary parse(std::istream& in, const std::string& source);

private:
  std::size_t find_isomorphic(const LabeledGraph& pattern) const;  // npos if absent
  void index_entry(std::size_t idx);
  void rebuild_index();
  std::vector<std::size_t> trim_order_indices() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t theta_;
  std::size_t alpha_;
  bool directed_;
  std::uint64_t next_seq_ = 0;
  std::vector<PatternEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_signature_;
};

}  // namespace graphzip
