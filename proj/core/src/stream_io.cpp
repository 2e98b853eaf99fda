#include "graphzip/stream_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace graphzip {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  auto hash = line.find('#');
  if (hash != std::string::npos) line.resize(hash);
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) toks.push_back(tok);
  return toks;
}

std::uint64_t parse_id(const std::string& tok, const std::string& source,
                       std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(source, line,
                     "expected a non-negative integer id, got '" + tok + "'");
  return value;
}

std::int64_t parse_timestamp(const std::string& tok, const std::string& source,
                             std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(source, line, "expected an integer timestamp, got '" + tok + "'");
  return value;
}

void check_label(const Label& label, const std::string& source, std::size_t line) {
  try {
    validate_label(label);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line, e.what());
  }
}

}  // namespace

RecordReader::RecordReader(std::istream& in, std::string source)
    : in_(&in), source_(std::move(source)) {
  // The header must be the first effective line. An empty stream is legal.
  std::string raw;
  while (std::getline(*in_, raw)) {
    ++lineno_;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (toks[0] != "graph")
      throw ParseError(source_, lineno_,
                       "expected 'graph <undirected|directed>' header first");
    if (toks.size() != 2 || (toks[1] != "undirected" && toks[1] != "directed"))
      throw ParseError(source_, lineno_, "bad header, want 'graph <undirected|directed>'");
    saw_header_ = true;
    directed_ = (toks[1] == "directed");
    if (pinned_ && directed_ != expect_directed_)
      throw FormatError(source_, lineno_, "stream directedness differs from the run's");
    break;
  }
}

void RecordReader::require_directed(bool directed) {
  pinned_ = true;
  expect_directed_ = directed;
  if (saw_header_ && directed_ != expect_directed_)
    throw FormatError(source_, lineno_, "stream directedness differs from the run's");
}

std::optional<StreamRecord> RecordReader::next() {
  std::string raw;
  while (std::getline(*in_, raw)) {
    ++lineno_;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (toks[0] == "graph") {
      // Repeated headers are tolerated only when they agree.
      if (toks.size() != 2 || (toks[1] != "undirected" && toks[1] != "directed"))
        throw ParseError(source_, lineno_, "bad header, want 'graph <undirected|directed>'");
      bool directed = (toks[1] == "directed");
      if (directed != directed_)
        throw FormatError(source_, lineno_, "header flips directedness mid-stream");
      continue;
    }
    if (toks[0] == "v") {
      if (toks.size() != 3)
        throw ParseError(source_, lineno_, "expected: v <id> <label>");
      StreamRecord rec;
      rec.kind = StreamRecord::Kind::vertex;
      rec.id = parse_id(toks[1], source_, lineno_);
      check_label(toks[2], source_, lineno_);
      rec.label = toks[2];
      return rec;
    }
    if (toks[0] == "e") {
      if (toks.size() != 4 && toks.size() != 5)
        throw ParseError(source_, lineno_, "expected: e <src> <dst> <label> [<timestamp>]");
      StreamRecord rec;
      rec.kind = StreamRecord::Kind::edge;
      rec.src = parse_id(toks[1], source_, lineno_);
      rec.dst = parse_id(toks[2], source_, lineno_);
      if (rec.src == rec.dst)
        throw ParseError(source_, lineno_,
                         "self-loop on vertex " + std::to_string(rec.src));
      check_label(toks[3], source_, lineno_);
      rec.label = toks[3];
      if (toks.size() == 5) rec.timestamp = parse_timestamp(toks[4], source_, lineno_);
      return rec;
    }
    throw ParseError(source_, lineno_, "unrecognized record '" + toks[0] + "'");
  }
  return std::nullopt;
}

std::vector<StreamRecord> parse_stream(std::istream& in, const std::string& source) {
  RecordReader reader(in, source);
  std::vector<StreamRecord> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

// ===== batching =====

BatchAssembler::BatchAssembler(bool directed)
    : directed_(directed), current_(directed) {}

void BatchAssembler::ensure_endpoint(VertexId v) {
  auto it = labels_.find(v);
  if (it == labels_.end()) it = labels_.emplace(v, "_").first;
  if (!current_.has_vertex(v)) current_.add_vertex(v, it->second);
}

void BatchAssembler::feed(const StreamRecord& record) {
  if (record.kind == StreamRecord::Kind::vertex) {
    auto [it, inserted] = labels_.emplace(record.id, record.label);
    if (!inserted && it->second != record.label)
      throw LabelConflictError("vertex " + std::to_string(record.id) +
                               " already labeled '" + it->second +
                               "', cannot relabel to '" + record.label + "'");
    return;
  }
  ensure_endpoint(record.src);
  ensure_endpoint(record.dst);
  current_.add_edge(record.src, record.dst, record.label);
  ++open_edges_;
  if (record.timestamp) {
    if (!ts_min_ || *record.timestamp < *ts_min_) ts_min_ = record.timestamp;
    if (!ts_max_ || *record.timestamp > *ts_max_) ts_max_ = record.timestamp;
  }
}

StreamBatch BatchAssembler::flush() {
  StreamBatch batch;
  batch.graph = std::move(current_);
  batch.index = next_index_++;
  batch.edge_count = batch.graph.edge_count();
  batch.ts_min = ts_min_;
  batch.ts_max = ts_max_;
  current_ = LabeledGraph(directed_);
  open_edges_ = 0;
  ts_min_.reset();
  ts_max_.reset();
  return batch;
}

CountBatchSource::CountBatchSource(RecordReader& reader, std::size_t alpha)
    : reader_(&reader), alpha_(alpha), assembler_(reader.directed()) {
  if (alpha == 0) throw std::invalid_argument("alpha must be positive");
}

std::optional<StreamBatch> CountBatchSource::next() {
  if (exhausted_) return std::nullopt;
  while (auto rec = reader_->next()) {
    assembler_.feed(*rec);
    if (assembler_.open_edges() == alpha_) return assembler_.flush();
  }
  exhausted_ = true;
  if (assembler_.open_edges() > 0) return assembler_.flush();
  return std::nullopt;
}

FileBatchSource::FileBatchSource(std::vector<std::filesystem::path> paths)
    : paths_(std::move(paths)) {
  // Establish the run's directedness from the first file that has a header.
  for (const auto& path : paths_) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    RecordReader reader(in, path.string());
    if (reader.saw_header()) {
      directed_ = reader.directed();
      break;
    }
  }
  assembler_.emplace(directed_);
}

std::optional<StreamBatch> FileBatchSource::next() {
  if (pos_ >= paths_.size()) return std::nullopt;
  const auto path = paths_[pos_++];
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  RecordReader reader(in, path.string());
  reader.require_directed(directed_);
  while (auto rec = reader.next()) assembler_->feed(*rec);
  return assembler_->flush();
}

std::vector<StreamBatch> batch_stream(const std::vector<StreamRecord>& records,
                                      std::size_t alpha, bool directed) {
  if (alpha == 0) throw std::invalid_argument("alpha must be positive");
  BatchAssembler assembler(directed);
  std::vector<StreamBatch> out;
  for (const StreamRecord& rec : records) {
    assembler.feed(rec);
    if (assembler.open_edges() == alpha) out.push_back(assembler.flush());
  }
  if (assembler.open_edges() > 0) out.push_back(assembler.flush());
  return out;
}

}  // namespace graphzip
