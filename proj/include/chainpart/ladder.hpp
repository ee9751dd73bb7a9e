#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chainpart/poset.hpp"

namespace chainpart {

/// Rungs (x_1,y_1)..(x_m,y_m) of an induced ladder L_m: x_i < x_j and
/// y_i < y_j for i < j, x_i < y_j iff i ≤ j, all other pairs incomparable.
struct LadderEmbedding {
  std::vector<std::pair<Vertex, Vertex>> rungs;

  std::size_t size() const noexcept { return rungs.size(); }
  friend bool operator==(const LadderEmbedding&, const LadderEmbedding&) = default;
};

/// Checks the induced-ladder conditions on every pair of listed vertices.
bool is_induced_ladder(const Poset& poset, const LadderEmbedding& ladder);

struct LadderSearchResult {
  std::size_t m = 0;
  LadderEmbedding witness;
};

/// Extra condition on consecutive rungs, called as filter(y_i, x_{i+1}).
using RungFilter = std::function<bool(Vertex, Vertex)>;

/// Largest m ≤ cap such that P contains an induced L_m, with a witness.
///
/// For a fixed y_1 a ladder is a sequence of rungs where each step satisfies
/// x' < x, y' < y, x < y, x ∥ y', and every x avoids U(y_1). The search is a
/// longest-path dynamic program over (x, y) pairs for each choice of y_1. An
/// optional filter restricts consecutive rungs (canonical ladders).
LadderSearchResult find_max_ladder(const Poset& poset, std::size_t cap, const RungFilter& filter = {});

/// Returns a ladder with exactly `rungs` rungs whose endpoints fail
/// endpoint_ok(y_1, x_rungs), or nullopt if every such ladder passes.
/// Requires rungs ≤ 63.
std::optional<LadderEmbedding> find_ladder_violating(const Poset& poset, std::size_t rungs,
                                                     const std::function<bool(Vertex, Vertex)>& endpoint_ok);

}  // namespace chainpart
