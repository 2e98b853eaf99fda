#include <algorithm>

#include "doctest.h"
#include "graphzip/dictionary.hpp"
#include "test_helpers.hpp"

using namespace graphzip;

TEST_CASE("score is (edges-1)(frequency-1)") {
  CHECK(compression_score(3, 3) == 4);
  CHECK(compression_score(5, 9) == 32);
  CHECK(compression_score(2, 2) == 1);
  CHECK(compression_score(1, 1000) == 0);  // single edge never scores
  CHECK(compression_score(7, 1) == 0);     // seen once never scores
  CHECK(compression_score(4, 0) == 0);
  CHECK_THROWS_AS(compression_score(0, 5), InvalidPatternError);
}

TEST_CASE("insert deduplicates by isomorphism") {
  PatternDictionary dict(10, 10, false);
  auto seq1 = dict.insert_or_increment(tst::triangle(), 1);
  CHECK(dict.size() == 1);

  LabeledGraph rotated;
  rotated.add_vertex(5, "A");
  rotated.add_vertex(9, "A");
  rotated.add_vertex(2, "A");
  rotated.add_edge(9, 5, "x");
  rotated.add_edge(2, 9, "x");
  rotated.add_edge(5, 2, "x");
  auto seq2 = dict.insert_or_increment(rotated, 2);
  CHECK(seq1 == seq2);
  CHECK(dict.size() == 1);
  const PatternEntry* entry = dict.find_by_seq(seq1);
  REQUIRE(entry != nullptr);
  CHECK(entry->frequency == 3);
  CHECK(entry->score == compression_score(3, 3));
}

TEST_CASE("insert validates its pattern") {
  PatternDictionary dict(10, 3, false);
  LabeledGraph empty;
  CHECK_THROWS_AS(dict.insert_or_increment(empty, 1), InvalidPatternError);

  LabeledGraph split;
  split.add_vertex(0, "A");
  split.add_vertex(1, "A");
  split.add_vertex(2, "A");
  split.add_vertex(3, "A");
  split.add_edge(0, 1, "x");
  split.add_edge(2, 3, "x");
  CHECK_THROWS_AS(dict.insert_or_increment(split, 1), InvalidPatternError);

  // alpha is 3: a four-edge pattern cannot exist in a three-edge batch
  LabeledGraph big = tst::path_graph({"A", "A", "A", "A", "A"});
  CHECK_THROWS_AS(dict.insert_or_increment(big, 1), InvalidPatternError);

  LabeledGraph directed(true);
  directed.add_vertex(0, "A");
  directed.add_vertex(1, "A");
  directed.add_edge(0, 1, "x");
  CHECK_THROWS_AS(dict.insert_or_increment(directed, 1), InvalidPatternError);

  // a zero count is a caller bug, not a malformed pattern
  CHECK_THROWS_AS(dict.insert_or_increment(tst::triangle(), 0), std::invalid_argument);
}

TEST_CASE("increment by sequence id") {
  PatternDictionary dict(10, 10, false);
  auto seq = dict.insert_or_increment(tst::triangle(), 1);
  CHECK(dict.increment_by_seq(seq, 4));
  CHECK(dict.find_by_seq(seq)->frequency == 5);
  CHECK_FALSE(dict.increment_by_seq(seq + 100, 1));  // unknown id is a no-op
}

TEST_CASE("capacity stays within 2*theta and trims to theta") {
  const std::size_t theta = 4;
  PatternDictionary dict(theta, 20, false);
  // distinct patterns: paths of growing length with distinct edge labels
  for (int i = 0; i < 30; ++i) {
    LabeledGraph p;
    p.add_vertex(0, "A");
    p.add_vertex(1, "L" + std::to_string(i));
    p.add_edge(0, 1, "e" + std::to_string(i));
    dict.insert_or_increment(p, 1 + i % 5);
    CHECK(dict.size() <= 2 * theta);
  }
  dict.trim();
  CHECK(dict.size() <= theta);
}

TEST_CASE("trim keeps the best scores, breaking ties by size then age") {
  PatternDictionary dict(2, 20, false);

  LabeledGraph tri = tst::triangle("A", "x");          // score (3-1)(F-1)
  LabeledGraph path3 = tst::path_graph({"B", "B", "B", "B"}, "y");
  LabeledGraph edge1 = tst::single_edge("C", "C", "z");

  auto s_tri = dict.insert_or_increment(tri, 5);    // score 8
  auto s_path = dict.insert_or_increment(path3, 5); // 3 edges, score 8
  dict.insert_or_increment(edge1, 100);             // single edge, score 0
  dict.trim();
  CHECK(dict.size() == 2);

  auto kept = dict.top_k(2);
  // equal scores: the larger pattern would win, both have score 8 and
  // 3 edges, so insertion order decides
  CHECK(kept[0].seq == s_tri);
  CHECK(kept[1].seq == s_path);
  CHECK_FALSE(dict.contains_isomorphic(edge1));
}

TEST_CASE("trim ordering puts bigger patterns first on score ties") {
  PatternDictionary dict(3, 20, false);
  LabeledGraph small = tst::single_edge("A", "A", "x");
  LabeledGraph big = tst::path_graph({"A", "A", "A"}, "x");
  dict.insert_or_increment(small, 9);  // 1 edge, score 0
  dict.insert_or_increment(big, 2);    // 2 edges, score 1
  auto order = dict.top_k(2);
  CHECK(order[0].pattern.edge_count() == 2);
  CHECK(order[1].pattern.edge_count() == 1);
}

TEST_CASE("trim is idempotent") {
  PatternDictionary dict(3, 20, false);
  SplitMix64 rng(5);
  for (int i = 0; i < 20; ++i) {
    LabeledGraph p = tst::random_pattern(rng, 3, 3, 3);
    if (!p.connected() || p.edge_count() == 0) continue;
    dict.insert_or_increment(p, 1 + rng.below(6));
  }
  dict.trim();
  std::string once = tst::dict_text(dict);
  dict.trim();
  CHECK(tst::dict_text(dict) == once);
}

TEST_CASE("total score sums entry scores") {
  PatternDictionary dict(10, 10, false);
  dict.insert_or_increment(tst::triangle(), 3);           // (3-1)(3-1)=4
  dict.insert_or_increment(tst::path_graph({"B", "B", "B"}), 2);  // (2-1)(2-1)=1
  dict.insert_or_increment(tst::single_edge("C", "C"), 50);       // 0
  CHECK(dict.total_score() == 5);
}

TEST_CASE("serialized form is stable and exact") {
  PatternDictionary dict(5, 10, false);
  dict.insert_or_increment(tst::triangle("A", "x"), 3);
  dict.insert_or_increment(tst::single_edge("A", "B", "y"), 5);

  const std::string expected =
      "# graphzip-dict v1 directed=0 alpha=10 theta=5\n"
      "p 0 score=4 freq=3\n"
      "v 0 A\n"
      "v 1 A\n"
      "v 2 A\n"
      "e 0 1 x\n"
      "e 0 2 x\n"
      "e 1 2 x\n"
      "\n"
      "p 1 score=0 freq=5\n"
      "v 0 A\n"
      "v 1 B\n"
      "e 0 1 y\n";
  CHECK(tst::dict_text(dict) == expected);
}

TEST_CASE("serialized local ids follow sorted original ids") {
  PatternDictionary dict(5, 10, false);
  LabeledGraph p;
  p.add_vertex(30, "C");
  p.add_vertex(7, "A");
  p.add_edge(30, 7, "k");
  dict.insert_or_increment(p, 2);
  const std::string expected =
      "# graphzip-dict v1 directed=0 alpha=10 theta=5\n"
      "p 0 score=0 freq=2\n"
      "v 0 A\n"
      "v 1 C\n"
      "e 0 1 k\n";
  CHECK(tst::dict_text(dict) == expected);
}

TEST_CASE("parse round-trips serialize") {
  PatternDictionary dict(4, 12, false);
  SplitMix64 rng(11);
  for (int i = 0; i < 12; ++i) {
    LabeledGraph p = tst::random_pattern(rng, 4, 3, 3);
    if (!p.connected() || p.edge_count() == 0) continue;
    dict.insert_or_increment(p, 1 + rng.below(9));
  }
  std::string text = tst::dict_text(dict);
  PatternDictionary back = tst::dict_from_text(text);
  CHECK(tst::dict_text(back) == text);
  CHECK(back.theta() == dict.theta());
  CHECK(back.alpha() == dict.alpha());
  CHECK(back.size() == dict.size());
}

TEST_CASE("parse round-trips a directed dictionary") {
  PatternDictionary dict(4, 8, true);
  LabeledGraph p(true);
  p.add_vertex(0, "A");
  p.add_vertex(1, "B");
  p.add_edge(1, 0, "x");
  dict.insert_or_increment(p, 7);
  std::string text = tst::dict_text(dict);
  PatternDictionary back = tst::dict_from_text(text);
  CHECK(tst::dict_text(back) == text);
  REQUIRE(back.size() == 1);
  CHECK(back.entries()[0].pattern.directed());
}

TEST_CASE("parse rejects corrupt input with a location") {
  auto expect_throw_at = [](const std::string& text, std::size_t line) {
    try {
      tst::dict_from_text(text, "dict.txt");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.source() == "dict.txt");
      CHECK(e.line() == line);
    }
  };

  expect_throw_at("", 1);                        // missing header
  expect_throw_at("# graphzip-dict v2 directed=0 alpha=5 theta=5\n", 1);
  expect_throw_at("# graphzip-dict v1 directed=0 alpha=5\n", 1);

  const std::string header = "# graphzip-dict v1 directed=0 alpha=10 theta=5\n";
  expect_throw_at(header + "p 1 score=0 freq=1\nv 0 A\nv 1 A\ne 0 1 x\n", 2);  // rank gap
  // score disagreement surfaces where the block ends
  expect_throw_at(header + "p 0 score=9 freq=1\nv 0 A\nv 1 A\ne 0 1 x\n", 5);
  expect_throw_at(header + "p 0 score=0 freq=1\nv 0 A\ne 0 1 x\n", 4);  // unknown vertex
  expect_throw_at(header +
                      "p 0 score=0 freq=1\nv 0 A\nv 1 A\ne 0 1 x\n\n"
                      "p 1 score=0 freq=2\nv 0 A\nv 1 A\ne 0 1 x\n",
                  10);  // duplicate pattern, caught as the second block closes
}

TEST_CASE("parse rejects more blocks than the capacity allows") {
  std::string text = "# graphzip-dict v1 directed=0 alpha=10 theta=1\n";
  for (int i = 0; i < 3; ++i) {
    if (i > 0) text += "\n";
    text += "p " + std::to_string(i) + " score=0 freq=1\n";
    text += "v 0 A\nv 1 L" + std::to_string(i) + "\n";
    text += "e 0 1 x\n";
  }
  CHECK_THROWS_AS(tst::dict_from_text(text), ParseError);
}

TEST_CASE("top_k clamps to the dictionary size") {
  PatternDictionary dict(5, 10, false);
  dict.insert_or_increment(tst::triangle(), 2);
  CHECK(dict.top_k(100).size() == 1);
  CHECK(dict.top_k(0).empty());
}

TEST_CASE("contains_isomorphic looks through vertex ids") {
  PatternDictionary dict(5, 10, false);
  dict.insert_or_increment(tst::triangle("A", "x"), 1);
  LabeledGraph other;
  other.add_vertex(100, "A");
  other.add_vertex(200, "A");
  other.add_vertex(300, "A");
  other.add_edge(100, 200, "x");
  other.add_edge(200, 300, "x");
  other.add_edge(100, 300, "x");
  CHECK(dict.contains_isomorphic(other));
  CHECK_FALSE(dict.contains_isomorphic(tst::triangle("B", "x")));
}
