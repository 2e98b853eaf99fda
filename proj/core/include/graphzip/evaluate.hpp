#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphzip/compressor.hpp"
#include "graphzip/dictionary.hpp"
#include "graphzip/graph.hpp"

namespace graphzip {

struct AccuracyReport {
  std::size_t total{};
  std::size_t matched{};
  double accuracy{};
  std::vector<bool> per_pattern;  // aligned with the truth list
};

// Fraction of ground-truth patterns with an exactly isomorphic dictionary
// entry. Containment in a larger entry does not count. The truth list must
// be non-empty and pairwise non-isomorphic.
AccuracyReport accuracy(const std::vector<LabeledGraph>& truth,
                        const PatternDictionary& dict);

// "accuracy=<x.xxx> matched=<m>/<n>" plus one line per truth pattern.
std::string format_accuracy_report(const AccuracyReport& report);

// One CSV row per batch:
//   batch,edges,seconds,edges_per_sec,dict_size,cum_score
// Rates degrade to 0 for empty batches or unmeasurably fast ones.
std::string stats_csv(const std::vector<BatchResult>& results);

// (edge_count, frequency) of every entry, in trim order.
std::vector<std::pair<std::size_t, std::uint64_t>> dict_histogram(
    const PatternDictionary& dict);

// Ground-truth file: "# truth pattern=<name> count=<n>" followed by an
// ordinary stream-format graph.
struct TruthFile {
  std::string pattern_name;
  std::size_t count{};
  LabeledGraph pattern;
};

TruthFile parse_truth_file(std::istream& in, const std::string& source);

}  // namespace graphzip
