#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "chainpart/online.hpp"
#include "chainpart/poset.hpp"
#include "chainpart/regular.hpp"

namespace chainpart {

struct ReductionOptions {
  /// Re-check the structural claims after every step and throw
  /// InvariantViolation on the first failure.
  bool check_invariants = true;
};

enum class Route { kXbar, kRegular };

struct RoutingDecision {
  Route route = Route::kXbar;
  /// For kRegular: 1-based index i of the new antichain A_i and the
  /// First-Fit color of (x, A_i) in (U, ≤_R).
  std::size_t block = 0;
  std::size_t color = 0;
};

/// The antichains computed while placing the last regular-path vertex.
struct StepTrace {
  Antichain a_x;
  Antichain a_d;
  Antichain a_u;
  Antichain a_i;
};

/// A point (u, A_i) of U: a prefix vertex and the 1-based block it belongs to.
struct LabeledPoint {
  Vertex vertex = 0;
  std::size_t block = 0;

  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

/// For each point of `lower`, the points of `upper` (as indices into upper)
/// it meets in some perfect matching of the cross comparabilities of
/// `order`; these are the Dilworth edges of the bipartite core. nullopt when
/// no perfect matching exists.
std::optional<std::vector<Bitset>> core_dilworth_edges(const Poset& order, std::span<const Vertex> lower,
                                                       std::span<const Vertex> upper);

/// ≤_R rows of a new block. `u` is ≤_U on every point, `r` is ≤_R with the
/// block's points still isolated, `lower` / `upper` are the points of B_p(i) /
/// B_s(i) (empty when absent). Each new point gets the Dilworth edges of the
/// ≤_U cores towards those blocks plus whatever ≤_R already implies beyond
/// them; nothing inside the block. Throws InvariantViolation when a core has
/// no perfect matching.
struct RExtension {
  std::vector<Bitset> up;
  std::vector<Bitset> down;
};
RExtension extend_r_relation(const Poset& u, const Poset& r, std::span<const Vertex> block,
                             std::span<const Vertex> lower, std::span<const Vertex> upper);

/// On-line state of the width-w reduction for one run. Vertices are prefix
/// positions: the k-th presented vertex is vertex k of every later prefix.
///
/// Each vertex either joins X̄ (when X̄ + x still has width < w) or triggers a
/// new maximum antichain A_i = A_d ∨ (A_u ∧ A_x). The block B_i = A_i × {i}
/// is added to U with
///   (u, i) ≤_U (v, j)  iff  u ≤ v and A_i ⊑ A_j,
/// and ≤_R keeps, towards B_s(i) and B_p(i), only the Dilworth edges of the
/// ≤_U cores, closing the rest through those two blocks. First-Fit runs on
/// (U, ≤_R), receiving each block's points in ascending key order.
class ReductionState {
 public:
  explicit ReductionState(std::size_t w, ReductionOptions options = {});

  /// `prefix` is the poset on every vertex presented so far, x = the newest
  /// (x must equal prefix.size() - 1). `key` orders points inside a block for
  /// First-Fit. Throws WidthExceededError when width(prefix) > w.
  RoutingDecision process_vertex(Vertex x, const Poset& prefix, std::size_t key);
  RoutingDecision process_vertex(Vertex x, const Poset& prefix) { return process_vertex(x, prefix, x); }

  std::size_t w() const noexcept { return w_; }
  std::size_t seen() const noexcept { return keys_.size(); }
  /// X̄ in ascending prefix position.
  const std::vector<Vertex>& xbar() const noexcept { return xbar_; }
  /// A_1..A_n in creation order and their trigger vertices x_1..x_n.
  const std::vector<Antichain>& antichains() const noexcept { return antichains_; }
  const std::vector<Vertex>& triggers() const noexcept { return triggers_; }
  const std::optional<StepTrace>& last_trace() const noexcept { return trace_; }
  /// p(i), s(i) (1-based) as used when B_i was added.
  const Neighbors& neighbors(std::size_t i) const { return neighbors_.at(i - 1); }

  const std::vector<LabeledPoint>& points() const noexcept { return points_; }
  /// Points of B_i (1-based), ascending point id.
  std::vector<std::size_t> block(std::size_t i) const;
  /// First-Fit color of each point of U.
  const std::vector<std::size_t>& point_colors() const noexcept { return point_color_; }

  Poset u_poset() const;
  Poset r_poset() const;
  /// ((U, ≤_R), B_1..B_n) with point ids as vertices.
  RegularInstance regular_instance() const;

  /// Width of the prefix restricted to X̄ is < w; A_i are distinct maximum
  /// antichains, linearly ordered by ⊑, each holding its trigger; ≤_U is a
  /// width-w order with every B_i a maximum antichain; ≤_R ⊆ ≤_U, ≤_R is
  /// transitively closed, and the (B_p(i), B_i) and (B_i, B_s(i)) pairs are
  /// cores under ≤_R. Throws InvariantViolation naming the failed property.
  void check_invariants(const Poset& prefix) const;

 private:
  void add_block(const Poset& prefix, const Antichain& a);
  void grow(std::size_t extra);

  std::size_t w_;
  ReductionOptions options_;
  std::vector<std::size_t> keys_;
  std::vector<Vertex> xbar_;
  std::vector<Antichain> antichains_;
  std::vector<Vertex> triggers_;
  std::vector<std::vector<bool>> sq_;  // sq_[i][j]: A_i ⊑ A_j (0-based)
  std::vector<Neighbors> neighbors_;    // 1-based values
  std::optional<StepTrace> trace_;

  std::vector<LabeledPoint> points_;
  std::vector<Bitset> u_up_;
  std::vector<Bitset> r_up_;
  std::vector<Bitset> r_down_;
  std::vector<std::size_t> point_color_;
  std::vector<Bitset> ff_classes_;
};

/// The recursive on-line colorer: X̄ goes to a width-(w-1) colorer, the rest
/// takes First-Fit colors of the regular poset built by ReductionState. Width 1
/// is First-Fit directly. A local color c at level ℓ becomes the global label
/// (ℓ-1)·C + c, where C is the per-level color cap; a local color above C
/// throws CapExceededError.
class CompositeColorer final : public OnlineColorer {
 public:
  explicit CompositeColorer(std::size_t color_cap, ReductionOptions options = {});

  void start(std::size_t width_bound) override;
  /// Uses the arrival position as the in-block key.
  std::size_t next(const Poset& prefix) override;
  std::size_t next(const Poset& prefix, std::size_t key);

  std::size_t width_bound() const noexcept { return w_; }
  std::size_t color_cap() const noexcept { return cap_; }
  /// Null at width ≤ 1.
  const ReductionState* state() const noexcept { return state_.get(); }
  const CompositeColorer* child() const noexcept { return child_.get(); }

 private:
  std::size_t local_first_fit(const Poset& prefix);

  std::size_t cap_;
  ReductionOptions options_;
  std::size_t w_ = 0;
  std::unique_ptr<ReductionState> state_;
  std::unique_ptr<CompositeColorer> child_;
  std::vector<Bitset> ff_classes_;  // width 1 only
};

/// The regular poset built at one level, with points mapped to original
/// vertex ids.
struct RegularEmission {
  std::size_t level = 0;
  RegularInstance instance;
  std::vector<LabeledPoint> points;
  std::vector<Vertex> triggers;
};

struct CompositeResult {
  /// Labels renumbered 1..k by first use.
  ChainPartition partition;
  /// Raw global label (level-1)·C + local per vertex.
  std::vector<std::size_t> global_color;
  std::size_t color_cap = 0;
  /// Levels w, w-1, ..., 2 (those with a regular path), top level first.
  std::vector<RegularEmission> levels;
};

/// Runs CompositeColorer on the instance, with original vertex ids as the
/// in-block keys. color_cap = 0 selects w·n. Throws WidthExceededError,
/// CapExceededError, or InvariantViolation if a produced class is not a chain.
CompositeResult composite_color(const OnlineInstance& instance, std::size_t color_cap = 0,
                                ReductionOptions options = {});

}  // namespace chainpart
