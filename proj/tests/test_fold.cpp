#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "trisect/dsl.hpp"
#include "trisect/fold.hpp"

using namespace trisect;
using trisect::testing::brute_force_contains;
using trisect::testing::random_reduced_word;

namespace {

const Alphabet kXY({"x", "y"});

Word parse(const Alphabet& alphabet, const std::string& text) {
  return parse_word_text(text, alphabet);
}

}  // namespace

TEST_CASE("folding basics") {
  // <x y, y> is the whole group: the graph folds to the rose.
  const FoldedGraph rose = FoldedGraph::fold(kXY, {parse(kXY, "x y"), parse(kXY, "y")});
  CHECK(rose.vertex_count() == 1);
  CHECK(rose.edge_count() == 2);
  CHECK(rose.is_rose());
  CHECK(rose.rank() == 2);
  CHECK(rose.contains(parse(kXY, "x")));
  CHECK(brute_force_contains({parse(kXY, "x y"), parse(kXY, "y")}, parse(kXY, "x"), 8));

  // <x^2, y>: two vertices, the x-edges form a 2-cycle, x is not a member.
  const FoldedGraph index2 = FoldedGraph::fold(kXY, {parse(kXY, "x^2"), parse(kXY, "y")});
  CHECK(index2.vertex_count() == 2);
  CHECK(index2.rank() == 2);
  int x_edges = 0;
  for (const auto& e : index2.edges())
    if (e[1] == 0) {
      ++x_edges;
      CHECK(e[0] != e[2]);
    }
  CHECK(x_edges == 2);
  CHECK_FALSE(index2.contains(parse(kXY, "x")));
  CHECK_FALSE(brute_force_contains({parse(kXY, "x^2"), parse(kXY, "y")}, parse(kXY, "x"), 8));
  CHECK(index2.contains(parse(kXY, "x^2")));
  CHECK(index2.contains(parse(kXY, "x y x^-1")));

  // empty generating set
  const FoldedGraph trivial = FoldedGraph::fold(kXY, {});
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.edge_count() == 0);
  CHECK(trivial.rank() == 0);
  CHECK(trivial.contains(Word(kXY)));
  CHECK_FALSE(trivial.contains(parse(kXY, "x")));
}

TEST_CASE("surjectivity onto a free group") {
  const Alphabet basis({"d1", "o1"});
  // rewritten images of the b4 example's first map
  CHECK(is_surjective_onto_free(
      {Word(basis), parse(basis, "d1"), parse(basis, "o1"), parse(basis, "o1^-1")}, basis));
  CHECK_FALSE(is_surjective_onto_free({parse(kXY, "x^2"), parse(kXY, "y")}, kXY));
  CHECK(is_surjective_onto_free({parse(kXY, "x"), parse(kXY, "y")}, kXY));
  // rank 0 is vacuously surjective
  CHECK(is_surjective_onto_free({}, Alphabet()));
  CHECK_FALSE(is_surjective_onto_free({Word(kXY)}, kXY));
}

TEST_CASE("full cover diagnostic") {
  CHECK(FoldedGraph::fold(kXY, {parse(kXY, "x"), parse(kXY, "y")}).is_full_cover());
  // index-2 subgroup <x^2, y, x y x^-1>
  const FoldedGraph cover = FoldedGraph::fold(
      kXY, {parse(kXY, "x^2"), parse(kXY, "y"), parse(kXY, "x y x^-1")});
  CHECK(cover.is_full_cover());
  CHECK(cover.vertex_count() == 2);
  CHECK(cover.rank() == 3);  // Nielsen-Schreier: 1 + index * (rank - 1)
  CHECK_FALSE(FoldedGraph::fold(kXY, {parse(kXY, "x^2"), parse(kXY, "y")}).is_full_cover());
}

TEST_CASE("folding is input-order and inversion insensitive") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Word> generators;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) generators.push_back(random_reduced_word(rng, kXY, 5));
    const FoldedGraph reference = FoldedGraph::fold(kXY, generators);

    std::vector<Word> shuffled = generators;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled)
      if (rng() % 2) g = g.inverse();
    const FoldedGraph permuted = FoldedGraph::fold(kXY, shuffled);
    CHECK(reference.vertex_count() == permuted.vertex_count());
    CHECK(reference.edges() == permuted.edges());
  }
}

TEST_CASE("rank bounds") {
  std::mt19937 rng(29);
  const Alphabet basis({"a", "b", "c"});
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Word> generators;
    const int count = static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) generators.push_back(random_reduced_word(rng, basis, 5));
    const FoldedGraph graph = FoldedGraph::fold(basis, generators);
    CHECK(graph.rank() <= static_cast<int>(generators.size()));
    if (is_surjective_onto_free(generators, basis)) CHECK(graph.rank() == basis.size());
  }
}

TEST_CASE("membership agrees with the brute-force oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    const Alphabet basis(names);

    std::vector<Word> generators;
    int letters = 0;
    while (letters < 12) {
      const Word g = random_reduced_word(rng, basis, 4);
      if (g.empty()) break;
      if (letters + g.length() > 12) break;
      letters += g.length();
      generators.push_back(g);
    }
    const FoldedGraph graph = FoldedGraph::fold(basis, generators);

    for (int w = 0; w < 3; ++w) {
      const Word word = random_reduced_word(rng, basis, 6);
      CHECK(graph.contains(word) == brute_force_contains(generators, word, 8));
    }
  }
}

TEST_CASE("dot export") {
  const FoldedGraph rose = FoldedGraph::fold(kXY, {parse(kXY, "x"), parse(kXY, "y")});
  CHECK(rose.to_dot() ==
        "digraph stallings {\n"
        "  rankdir=LR;\n"
        "  node [shape=circle];\n"
        "  v0 [shape=doublecircle];\n"
        "  v0 -> v0 [label=\"x\"];\n"
        "  v0 -> v0 [label=\"y\"];\n"
        "}\n");
}
