#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "chainpart/poset.hpp"

namespace chainpart {

/// Bipartite graph with left vertices 0..left-1 and right vertices 0..right-1.
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  /// adjacency[l] holds the right neighbours of l.
  std::vector<Bitset> adjacency;

  BipartiteGraph() = default;
  BipartiteGraph(std::size_t l, std::size_t r) : left(l), right(r), adjacency(l, Bitset(r)) {}

  void add_edge(std::size_t l, std::size_t r) { adjacency[l].set(r); }
  bool has_edge(std::size_t l, std::size_t r) const { return adjacency[l].test(r); }
};

struct Matching {
  static constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> mate_of_left;
  std::vector<std::size_t> mate_of_right;
  std::size_t size = 0;
};

/// Maximum matching by augmenting paths. Left vertices are processed in
/// ascending order and each search scans right vertices in ascending order,
/// so the result is a pure function of the graph.
Matching maximum_matching(const BipartiteGraph& graph);

/// For a balanced graph with a perfect matching, returns per left vertex the
/// set of right neighbours r such that (l, r) lies in some perfect matching.
/// Returns nullopt when no perfect matching exists.
std::optional<std::vector<Bitset>> perfect_matching_edges(const BipartiteGraph& graph);

}  // namespace chainpart
