#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphzip/graph.hpp"

namespace graphzip {

// Tiny deterministic RNG. The standard distributions are allowed to differ
// between library implementations, and generated streams must be
// reproducible byte-for-byte, so draws are implemented by hand.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

private:
  std::uint64_t state_;
};

// Named pattern family or an explicit custom graph.
struct PatternSpec {
  std::string name;  // 3-CLIQ, 4-CLIQ, 4-STAR, 4-PATH, 5-PATH, 8-TREE, custom
  std::optional<LabeledGraph> custom;
  Label vertex_label = "P";  // labels used by the named builders
  Label edge_label = "p";
};

// Builds the pattern graph on vertex ids 0..k-1. Directed variants orient
// each edge from the lower to the higher id.
LabeledGraph make_pattern(const PatternSpec& spec, bool directed = false);

struct GenConfig {
  std::size_t vertices = 1000;
  std::size_t edges = 5000;
  double coverage = 0.5;            // fraction of vertices covered by plants
  std::size_t vertex_alphabet = 10; // background vertex label count
  std::size_t edge_alphabet = 5;    // background edge label count
  std::uint64_t seed = 1;
  bool directed = false;
  bool overlap_labels = false;      // background may reuse pattern labels
};

struct GenResult {
  std::string stream_text;
  std::string truth_text;
  std::size_t plant_count{};
};

// Plants floor(coverage * vertices / |V_pattern|) vertex-disjoint,
// label-exact instances on fresh vertices, fills the remaining edge budget
// with uniform random background edges among the unplanted vertices, and
// emits the stream with instances kept contiguous (internally shuffled) but
// interleaved at random positions between background edges.
GenResult generate(const GenConfig& config, const PatternSpec& spec);

}  // namespace graphzip
