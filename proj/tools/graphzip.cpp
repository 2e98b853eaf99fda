#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "graphzip/compressor.hpp"
#include "graphzip/dictionary.hpp"
#include "graphzip/errors.hpp"
#include "graphzip/evaluate.hpp"
#include "graphzip/generator.hpp"
#include "graphzip/stream_io.hpp"

namespace fs = std::filesystem;
using namespace graphzip;

namespace {

struct GenerateFlags {
  std::string pattern;
  GenConfig config;
  std::string out_path;
  std::string truth_path;
};

struct MineFlags {
  std::size_t alpha = 5;
  std::size_t theta = 50;
  std::string input;
  std::string batch_dir;
  std::string dict_out;
  std::string stats_out;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool alpha_given = false;
};

struct EvalFlags {
  std::string dict_path;
  std::vector<std::string> truth_paths;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

int run_generate(const GenerateFlags& flags, int verbose) {
  try {
    PatternSpec spec;
    spec.name = flags.pattern;
    GenResult result = generate(flags.config, spec);
    write_file(flags.out_path, result.stream_text);
    if (!flags.truth_path.empty()) write_file(flags.truth_path, result.truth_text);
    std::printf("planted=%zu\n", result.plant_count);
    if (verbose)
      std::fprintf(stderr, "wrote %s (%zu vertices, %zu edges)\n",
                   flags.out_path.c_str(), flags.config.vertices,
                   flags.config.edges);
    return 0;
  } catch (const PatternSpecError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

std::vector<fs::path> stream_files(const std::string& dir) {
  std::vector<fs::path> paths;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file()) paths.push_back(entry.path());
  if (ec) throw IoError("cannot list '" + dir + "': " + ec.message());
  if (paths.empty()) throw IoError("no stream files in '" + dir + "'");
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::size_t max_file_edges(const std::vector<fs::path>& paths) {
  std::size_t best = 1;
  for (const fs::path& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    RecordReader reader(in, path.string());
    std::size_t edges = 0;
    while (auto record = reader.next())
      if (record->kind == StreamRecord::Kind::edge) ++edges;
    best = std::max(best, edges);
  }
  return best;
}

int run_mine(const MineFlags& flags, int verbose) {
  try {
    MineOptions options;
    options.alpha = flags.alpha;
    options.theta = flags.theta;
    options.threads = flags.threads;

    MineOutcome outcome = [&]() -> MineOutcome {
      if (!flags.batch_dir.empty()) {
        std::vector<fs::path> paths = stream_files(flags.batch_dir);
        if (!flags.alpha_given) {
          options.alpha = max_file_edges(paths);
          if (verbose)
            std::fprintf(stderr, "alpha=%zu (largest batch file)\n", options.alpha);
        }
        FileBatchSource source(std::move(paths));
        return mine_stream(source, options);
      }
      std::unique_ptr<std::ifstream> owned;
      std::istream* in = &std::cin;
      std::string source_name = "<stdin>";
      if (flags.input != "-") {
        owned = std::make_unique<std::ifstream>(flags.input, std::ios::binary);
        if (!*owned) throw IoError("cannot open '" + flags.input + "'");
        in = owned.get();
        source_name = flags.input;
      }
      RecordReader reader(*in, source_name);
      CountBatchSource source(reader, options.alpha);
      return mine_stream(source, options);
    }();

    if (flags.dict_out.empty()) {
      outcome.dictionary.serialize(std::cout);
    } else {
      std::ofstream out(flags.dict_out, std::ios::binary);
      if (!out) throw IoError("cannot open '" + flags.dict_out + "' for writing");
      outcome.dictionary.serialize(out);
      if (!out) throw IoError("write to '" + flags.dict_out + "' failed");
    }
    if (!flags.stats_out.empty())
      write_file(flags.stats_out, stats_csv(outcome.batches));

    if (verbose) {
      for (std::size_t i = 0; i < outcome.batches.size(); ++i) {
        const BatchResult& b = outcome.batches[i];
        std::fprintf(stderr, "batch %zu: edges=%llu seconds=%.6f dict=%zu\n", i,
                     static_cast<unsigned long long>(b.edges_used + b.singletons_added),
                     b.seconds, b.dict_size_after);
      }
      std::fprintf(stderr, "batches=%zu dict_size=%zu score=%llu\n",
                   outcome.batches.size(), outcome.dictionary.size(),
                   static_cast<unsigned long long>(outcome.dictionary.total_score()));
    }
    return 0;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

int run_eval(const EvalFlags& flags) {
  try {
    std::ifstream dict_in(flags.dict_path, std::ios::binary);
    if (!dict_in) throw IoError("cannot open '" + flags.dict_path + "'");
    PatternDictionary dict = PatternDictionary::parse(dict_in, flags.dict_path);

    std::vector<LabeledGraph> truth;
    for (const std::string& path : flags.truth_paths) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw IoError("cannot open '" + path + "'");
      truth.push_back(parse_truth_file(in, path).pattern);
    }

    AccuracyReport report = accuracy(truth, dict);
    std::fputs(format_accuracy_report(report).c_str(), stdout);
    return report.matched == report.total ? 0 : 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphzip: dictionary-based pattern mining over graph streams"};
  app.require_subcommand(1);
  int verbose = 0;
  app.add_flag("-v,--verbose", verbose, "progress details on stderr");

  GenerateFlags gen;
  CLI::App* cmd_gen =
      app.add_subcommand("generate", "synthesize a stream with planted patterns");
  cmd_gen->add_option("--pattern", gen.pattern,
                      "3-CLIQ, 4-CLIQ, 4-STAR, 4-PATH, 5-PATH or 8-TREE")
      ->required();
  cmd_gen->add_option("--vertices", gen.config.vertices, "vertex count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--edges", gen.config.edges, "edge count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--coverage", gen.config.coverage,
                      "fraction of vertices covered by planted instances")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd_gen->add_option("--seed", gen.config.seed, "generator seed")
      ->capture_default_str();
  cmd_gen->add_option("--out", gen.out_path, "stream file to write")->required();
  cmd_gen->add_option("--truth", gen.truth_path, "ground-truth pattern file");
  cmd_gen->add_flag("--directed", gen.config.directed, "emit a directed stream");
  cmd_gen->add_option("--vertex-labels", gen.config.vertex_alphabet,
                      "background vertex label count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--edge-labels", gen.config.edge_alphabet,
                      "background edge label count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_gen->add_flag("--overlap-labels", gen.config.overlap_labels,
                    "background may reuse the pattern's labels");

  MineFlags mine;
  CLI::App* cmd_mine = app.add_subcommand("mine", "compress a stream into a dictionary");
  CLI::Option* alpha_opt =
      cmd_mine->add_option("--alpha", mine.alpha, "edges per batch")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
  cmd_mine->add_option("--theta", mine.theta, "dictionary capacity")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  CLI::Option* input_opt = cmd_mine->add_option(
      "--input", mine.input, "stream file, or - for standard input");
  CLI::Option* dir_opt = cmd_mine->add_option(
      "--batch-files", mine.batch_dir,
      "directory of pre-batched stream files, one batch per file "
      "(alpha defaults to the largest file)");
  input_opt->excludes(dir_opt);
  dir_opt->excludes(input_opt);
  cmd_mine->add_option("--dict-out", mine.dict_out,
                       "dictionary file (standard output when omitted)");
  cmd_mine->add_option("--stats-out", mine.stats_out, "per-batch CSV");
  cmd_mine->add_option("--threads", mine.threads, "concurrent embedding searches")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  EvalFlags eval;
  CLI::App* cmd_eval =
      app.add_subcommand("eval", "score a dictionary against ground truth");
  cmd_eval->add_option("--dict", eval.dict_path, "serialized dictionary")->required();
  cmd_eval->add_option("--truth", eval.truth_paths, "ground-truth file (repeatable)")
      ->required();

  try {
    app.parse(argc, argv);
    if (cmd_mine->parsed() && input_opt->count() == 0 && dir_opt->count() == 0)
      throw CLI::RequiredError("--input or --batch-files");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  mine.alpha_given = alpha_opt->count() > 0;

  if (cmd_gen->parsed()) return run_generate(gen, verbose);
  if (cmd_mine->parsed()) return run_mine(mine, verbose);
  return run_eval(eval);
}
