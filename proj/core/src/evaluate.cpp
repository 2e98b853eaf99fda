#include "graphzip/evaluate.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>

#include "graphzip/isomorphism.hpp"
#include "graphzip/stream_io.hpp"

namespace graphzip {

AccuracyReport accuracy(const std::vector<LabeledGraph>& truth,
                        const PatternDictionary& dict) {
  if (truth.empty()) throw TruthSetError("ground-truth set is empty");
  for (std::size_t i = 0; i < truth.size(); ++i)
    for (std::size_t j = i + 1; j < truth.size(); ++j)
      if (is_isomorphic(truth[i], truth[j]))
        throw TruthSetError("ground-truth patterns " + std::to_string(i) + " and " +
                            std::to_string(j) + " are isomorphic");

  AccuracyReport report;
  report.total = truth.size();
  report.per_pattern.reserve(truth.size());
  for (const LabeledGraph& pattern : truth) {
    bool hit = dict.contains_isomorphic(pattern);
    report.per_pattern.push_back(hit);
    if (hit) ++report.matched;
  }
  report.accuracy =
      static_cast<double>(report.matched) / static_cast<double>(report.total);
  return report;
}

std::string format_accuracy_report(const AccuracyReport& report) {
  char head[64];
  std::snprintf(head, sizeof(head), "accuracy=%.3f matched=%zu/%zu", report.accuracy,
                report.matched, report.total);
  std::string out = head;
  out += '\n';
  for (std::size_t i = 0; i < report.per_pattern.size(); ++i) {
    out += "pattern " + std::to_string(i) + ": ";
    out += report.per_pattern[i] ? "matched" : "missed";
    out += '\n';
  }
  return out;
}

std::string stats_csv(const std::vector<BatchResult>& results) {
  std::string out = "batch,edges,seconds,edges_per_sec,dict_size,cum_score\n";
  char buf[160];
  for (std::size_t i = 0; i < results.size(); ++i) {
    const BatchResult& r = results[i];
    std::uint64_t edges = r.edges_used + r.singletons_added;
    double rate = (edges == 0 || r.seconds <= 0.0)
                      ? 0.0
                      : static_cast<double>(edges) / r.seconds;
    std::snprintf(buf, sizeof(buf), "%zu,%llu,%.6f,%.3f,%zu,%llu\n", i,
                  static_cast<unsigned long long>(edges), r.seconds, rate,
                  r.dict_size_after,
                  static_cast<unsigned long long>(r.cum_score_after));
    out += buf;
  }
  return out;
}

std::vector<std::pair<std::size_t, std::uint64_t>> dict_histogram(
    const PatternDictionary& dict) {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  out.reserve(dict.size());
  for (const PatternEntry& e : dict.top_k(dict.size()))
    out.emplace_back(e.pattern.edge_count(), e.frequency);
  return out;
}

TruthFile parse_truth_file(std::istream& in, const std::string& source) {
  TruthFile truth;
  truth.pattern_name = "?";

  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};

  // The metadata line is a comment, so the record parser below skips it on
  // its own; pull the fields out of it here if present.
  std::istringstream probe(text);
  std::string first;
  if (std::getline(probe, first)) {
    std::istringstream fields(first);
    std::string t0, t1;
    fields >> t0 >> t1;
    if (t0 == "#" && t1 == "truth") {
      std::string tok;
      while (fields >> tok) {
        if (tok.rfind("pattern=", 0) == 0) {
          truth.pattern_name = tok.substr(8);
        } else if (tok.rfind("count=", 0) == 0) {
          std::string num = tok.substr(6);
          std::size_t value = 0;
          auto [ptr, ec] =
              std::from_chars(num.data(), num.data() + num.size(), value);
          if (ec != std::errc{} || ptr != num.data() + num.size())
            throw ParseError(source, 1, "bad truth count '" + num + "'");
          truth.count = value;
        } else {
          throw ParseError(source, 1, "unrecognized truth field '" + tok + "'");
        }
      }
    }
  }

  std::istringstream body(text);
  RecordReader reader(body, source);
  BatchAssembler assembler(reader.directed());
  while (auto record = reader.next()) {
    try {
      assembler.feed(*record);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(source, reader.line(), e.what());
    }
  }
  truth.pattern = std::move(assembler.flush().graph);
  if (truth.pattern.edge_count() == 0)
    throw ParseError(source, reader.line(), "truth pattern has no edges");
  if (!truth.pattern.connected())
    throw ParseError(source, reader.line(), "truth pattern is disconnected");
  return truth;
}

}  // namespace graphzip
