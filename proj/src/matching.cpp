#include "chainpart/matching.hpp"

namespace chainpart {
namespace {

class Augmenter {
 public:
  Augmenter(const BipartiteGraph& g, Matching& m) : graph_(g), matching_(m), visited_(g.right) {}

  bool try_augment(std::size_t l) {
    visited_.reset();
    return dfs(l);
  }

 private:
  bool dfs(std::size_t l) {
    Bitset candidates = graph_.adjacency[l] - visited_;
    for (auto r = candidates.find_first(); r != Bitset::npos; r = candidates.find_next(r)) {
      if (visited_.test(r)) continue;
      visited_.set(r);
      const std::size_t owner = matching_.mate_of_right[r];
      if (owner == Matching::kUnmatched || dfs(owner)) {
        matching_.mate_of_left[l] = r;
        matching_.mate_of_right[r] = l;
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& graph_;
  Matching& matching_;
  Bitset visited_;
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& graph) {
  Matching m;
  m.mate_of_left.assign(graph.left, Matching::kUnmatched);
  m.mate_of_right.assign(graph.right, Matching::kUnmatched);
  Augmenter augmenter(graph, m);
  for (std::size_t l = 0; l < graph.left; ++l)
    if (augmenter.try_augment(l)) ++m.size;
  return m;
}

std::optional<std::vector<Bitset>> perfect_matching_edges(const BipartiteGraph& graph) {
  if (graph.left != graph.right) return std::nullopt;
  const std::size_t n = graph.left;
  const Matching m = maximum_matching(graph);
  if (m.size != n) return std::nullopt;

  // Digraph on left vertices: x -> y when x is adjacent to y's mate. A
  // non-matching edge (x, mate(y)) lies in a perfect matching iff it closes an
  // alternating cycle, i.e. iff y reaches x.
  std::vector<Bitset> reach(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && graph.has_edge(x, m.mate_of_left[y])) reach[x].set(y);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (reach[x].test(k)) reach[x] |= reach[k];

  std::vector<Bitset> usable(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    const Bitset& nbrs = graph.adjacency[x];
    for (auto r = nbrs.find_first(); r != Bitset::npos; r = nbrs.find_next(r)) {
      const std::size_t y = m.mate_of_right[r];
      if (y == x || reach[y].test(x)) usable[x].set(r);
    }
  }
  return usable;
}

}  // namespace chainpart
