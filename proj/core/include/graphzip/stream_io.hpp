#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphzip/graph.hpp"

namespace graphzip {

// One line of a stream file: a vertex declaration or an edge arrival.
struct StreamRecord {
  enum class Kind { vertex, edge };
  Kind kind{Kind::vertex};
  VertexId id{};         // vertex records
  VertexId src{}, dst{}; // edge records
  Label label;
  std::optional<std::int64_t> timestamp;  // edge records only

  friend bool operator==(const StreamRecord& a, const StreamRecord& b) {
    return a.kind == b.kind && a.id == b.id && a.src == b.src && a.dst == b.dst &&
           a.label == b.label && a.timestamp == b.timestamp;
  }
};

// A batch of stream edges materialized as a graph. Timestamps never affect
// batching; the observed range is carried along for instrumentation.
struct StreamBatch {
  LabeledGraph graph;
  std::size_t index{};
  std::size_t edge_count{};
  std::optional<std::int64_t> ts_min, ts_max;
};

// Line-by-line reader for the stream text format:
//   graph <undirected|directed>
//   v <id> <label>
//   e <src> <dst> <label> [<timestamp>]
// '#' starts a comment anywhere on a line. The header must be the first
// effective line; repeats are tolerated only if they agree.
class RecordReader {
public:
  RecordReader(std::istream& in, std::string source);

  std::optional<StreamRecord> next();  // throws ParseError on bad input

  bool saw_header() const noexcept { return saw_header_; }
  bool directed() const noexcept { return directed_; }
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return lineno_; }

  // Pins the expected directedness before reading (multi-file runs).
  void require_directed(bool directed);

private:
  std::istream* in_;
  std::string source_;
  std::size_t lineno_ = 0;
  bool saw_header_ = false;
  bool directed_ = false;
  bool pinned_ = false;
  bool expect_directed_ = false;
};

// Eager convenience form of the reader.
std::vector<StreamRecord> parse_stream(std::istream& in, const std::string& source);

// Groups edge records into batch graphs. Vertex labels persist for the whole
// run: a vertex declared in one batch keeps its label in every later batch,
// and endpoints never declared get the placeholder label "_".
class BatchAssembler {
public:
  explicit BatchAssembler(bool directed);

  void feed(const StreamRecord& record);
  // Number of edge records accepted into the current open batch.
  std::size_t open_edges() const noexcept { return open_edges_; }
  // Finishes the open batch and returns it; empty batches are legal.
  StreamBatch flush();

private:
  void ensure_endpoint(VertexId v);

  bool directed_;
  std::size_t next_index_ = 0;
  std::size_t open_edges_ = 0;
  LabeledGraph current_;
  std::optional<std::int64_t> ts_min_, ts_max_;
  std::unordered_map<VertexId, Label> labels_;  // survives across batches
};

// Pull-based batch producer consumed by the miner.
class StreamBatchSource {
public:
  virtual ~StreamBatchSource() = default;
  virtual std::optional<StreamBatch> next() = 0;
};

// Batches of exactly alpha edge records (the final one may be smaller).
class CountBatchSource : public StreamBatchSource {
public:
  CountBatchSource(RecordReader& reader, std::size_t alpha);
  std::optional<StreamBatch> next() override;

private:
  RecordReader* reader_;
  std::size_t alpha_;
  BatchAssembler assembler_;
  bool exhausted_ = false;
};

// One batch per pre-segmented file, in the given order. All files must agree
// on directedness; the vertex label table spans the whole run.
class FileBatchSource : public StreamBatchSource {
public:
  explicit FileBatchSource(std::vector<std::filesystem::path> paths);
  std::optional<StreamBatch> next() override;

  bool directed() const noexcept { return directed_; }

private:
  std::vector<std::filesystem::path> paths_;
  std::size_t pos_ = 0;
  bool directed_ = false;
  std::optional<BatchAssembler> assembler_;
};

// In-memory source for tests and library callers.
class VectorBatchSource : public StreamBatchSource {
public:
  explicit VectorBatchSource(std::vector<StreamBatch> batches)
      : batches_(std::move(batches)) {}
  std::optional<StreamBatch> next() override {
    if (pos_ >= batches_.size()) return std::nullopt;
    return std::move(batches_[pos_++]);
  }

private:
  std::vector<StreamBatch> batches_;
  std::size_t pos_ = 0;
};

// Eager batching of a full record list (testing aid).
std::vector<StreamBatch> batch_stream(const std::vector<StreamRecord>& records,
                                      std::size_t alpha, bool directed);

}  // namespace graphzip
