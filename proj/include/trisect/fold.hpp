#pragma once

#include <array>
#include <string>
#include <vector>

#include "trisect/word.hpp"

namespace trisect {

/// Stallings subgroup automaton over a free basis: folded (no vertex repeats
/// an outgoing or incoming label), core (no degree-1 vertex except possibly
/// the basepoint), connected. Vertex 0 is the basepoint; the numbering is
/// canonical: breadth-first from the basepoint, labels ascending, outgoing
/// edges before incoming ones. Isomorphic folded graphs therefore compare
/// equal edge-for-edge.
class FoldedGraph {
 public:
  /// Folds the bouquet of loops spelling `generators` (all over `basis`).
  static FoldedGraph fold(const Alphabet& basis, const std::vector<Word>& generators);

  const Alphabet& basis() const { return basis_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted positive-direction edges (from, label, to).
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }

  /// True iff w traces a closed loop at the basepoint, i.e. w lies in the
  /// represented subgroup. The empty word is always contained.
  bool contains(const Word& w) const;

  /// Rank of the represented free subgroup: E - V + 1 of the core graph.
  int rank() const { return edge_count() - vertex_count() + 1; }

  /// Single vertex carrying one loop per basis generator.
  bool is_rose() const;

  /// Diagnostic: every vertex has an outgoing and incoming edge for every
  /// label (the subgroup has finite index).
  bool is_full_cover() const;

  std::string to_dot() const;

 private:
  FoldedGraph(Alphabet basis, int vertices, std::vector<std::array<int, 3>> edges);

  Alphabet basis_;
  int vertex_count_ = 1;
  std::vector<std::array<int, 3>> edges_;
  // Transition tables, -1 when absent: out_[v*rank+l] / in_[v*rank+l].
  std::vector<int> out_;
  std::vector<int> in_;
};

/// True iff the words generate the whole free group on `basis`
/// (their folded graph is the rose).
bool is_surjective_onto_free(const std::vector<Word>& images, const Alphabet& basis);

}  // namespace trisect
