#include "trisect/fold.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace trisect {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Smaller root wins, keeping vertex 0 the basepoint class.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

FoldedGraph::FoldedGraph(Alphabet basis, int vertices, std::vector<std::array<int, 3>> edges)
    : basis_(std::move(basis)), vertex_count_(vertices), edges_(std::move(edges)) {
  const int rank = basis_.size();
  out_.assign(static_cast<size_t>(vertex_count_) * rank, -1);
  in_.assign(static_cast<size_t>(vertex_count_) * rank, -1);
  for (const auto& e : edges_) {
    out_[static_cast<size_t>(e[0]) * rank + e[1]] = e[2];
    in_[static_cast<size_t>(e[2]) * rank + e[1]] = e[0];
  }
}

FoldedGraph FoldedGraph::fold(const Alphabet& basis, const std::vector<Word>& generators) {
  // Bouquet of subdivided loops at vertex 0.
  std::vector<std::array<int, 3>> raw;
  int vertex_count = 1;
  for (const Word& w : generators) {
    if (!w.alphabet().same(basis)) throw Error("word over wrong alphabet in fold");
    const auto& codes = w.codes();
    int prev = 0;
    for (size_t i = 0; i < codes.size(); ++i) {
      const int next = (i + 1 == codes.size()) ? 0 : vertex_count++;
      const int label = std::abs(codes[i]) - 1;
      if (codes[i] > 0)
        raw.push_back({prev, label, next});
      else
        raw.push_back({next, label, prev});
      prev = next;
    }
  }

  // Fold: merge targets of equal-label edges sharing a source (and sources
  // sharing a target) until stable.
  UnionFind uf(vertex_count);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_seen, in_seen;
    for (const auto& e : raw) {
      const int f = uf.find(e[0]);
      const int t = uf.find(e[2]);
      auto [oit, onew] = out_seen.try_emplace({f, e[1]}, t);
      if (!onew && oit->second != t) {
        uf.unite(oit->second, t);
        changed = true;
        break;
      }
      auto [iit, inew] = in_seen.try_emplace({t, e[1]}, f);
      if (!inew && iit->second != f) {
        uf.unite(iit->second, f);
        changed = true;
        break;
      }
    }
  }

  // Compact classes and deduplicate edges.
  std::vector<int> rename(vertex_count, -1);
  int compact_count = 0;
  for (int v = 0; v < vertex_count; ++v) {
    const int r = uf.find(v);
    if (rename[r] < 0) rename[r] = compact_count++;
  }
  std::set<std::array<int, 3>> edge_set;
  for (const auto& e : raw)
    edge_set.insert({rename[uf.find(e[0])], e[1], rename[uf.find(e[2])]});

  // Core pruning: drop non-basepoint vertices of total degree <= 1.
  std::vector<bool> removed(compact_count, false);
  for (;;) {
    std::vector<int> degree(compact_count, 0);
    for (const auto& e : edge_set) {
      ++degree[e[0]];
      ++degree[e[2]];
    }
    int victim = -1;
    for (int v = 1; v < compact_count; ++v)
      if (!removed[v] && degree[v] <= 1) {
        victim = v;
        break;
      }
    if (victim < 0) break;
    removed[victim] = true;
    for (auto it = edge_set.begin(); it != edge_set.end();)
      it = (((*it)[0] == victim || (*it)[2] == victim)) ? edge_set.erase(it) : std::next(it);
  }

  // Canonical breadth-first renumbering from the basepoint.
  const int rank = basis.size();
  std::map<std::pair<int, int>, int> out_map, in_map;
  for (const auto& e : edge_set) {
    out_map[{e[0], e[1]}] = e[2];
    in_map[{e[2], e[1]}] = e[0];
  }
  std::vector<int> order(compact_count, -1);
  int discovered = 0;
  std::queue<int> queue;
  order[0] = discovered++;
  queue.push(0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int l = 0; l < rank; ++l) {
      auto it = out_map.find({v, l});
      if (it != out_map.end() && order[it->second] < 0) {
        order[it->second] = discovered++;
        queue.push(it->second);
      }
    }
    for (int l = 0; l < rank; ++l) {
      auto it = in_map.find({v, l});
      if (it != in_map.end() && order[it->second] < 0) {
        order[it->second] = discovered++;
        queue.push(it->second);
      }
    }
  }

  std::vector<std::array<int, 3>> edges;
  edges.reserve(edge_set.size());
  for (const auto& e : edge_set) edges.push_back({order[e[0]], e[1], order[e[2]]});
  std::sort(edges.begin(), edges.end());
  return FoldedGraph(basis, discovered, std::move(edges));
}

bool FoldedGraph::contains(const Word& w) const {
  if (!w.alphabet().same(basis_)) throw Error("word over wrong alphabet in contains");
  const int rank = basis_.size();
  int v = 0;
  for (int32_t code : w.codes()) {
    const int label = std::abs(code) - 1;
    v = code > 0 ? out_[static_cast<size_t>(v) * rank + label]
                 : in_[static_cast<size_t>(v) * rank + label];
    if (v < 0) return false;
  }
  return v == 0;
}

bool FoldedGraph::is_rose() const {
  return vertex_count_ == 1 && edge_count() == basis_.size();
}

bool FoldedGraph::is_full_cover() const {
  const int rank = basis_.size();
  for (int v = 0; v < vertex_count_; ++v)
    for (int l = 0; l < rank; ++l)
      if (out_[static_cast<size_t>(v) * rank + l] < 0 ||
          in_[static_cast<size_t>(v) * rank + l] < 0)
        return false;
  return true;
}

std::string FoldedGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph stallings {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  v0 [shape=doublecircle];\n";
  for (int v = 1; v < vertex_count_; ++v) out << "  v" << v << ";\n";
  for (const auto& e : edges_)
    out << "  v" << e[0] << " -> v" << e[2] << " [label=\"" << basis_.name(e[1])
        << "\"];\n";
  out << "}\n";
  return out.str();
}

bool is_surjective_onto_free(const std::vector<Word>& images, const Alphabet& basis) {
  return FoldedGraph::fold(basis, images).is_rose();
}

}  // namespace trisect
