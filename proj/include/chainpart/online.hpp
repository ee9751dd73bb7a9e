#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chainpart/poset.hpp"

namespace chainpart {

/// A poset with a presentation order and a declared width bound.
struct OnlineInstance {
  Poset poset;
  std::vector<Vertex> presentation;
  std::size_t width_bound = 0;

  /// Throws BadParameterError if the presentation is not a permutation and
  /// WidthExceededError if width(poset) > width_bound.
  void validate() const;
};

/// Vertex → color in 1..n_colors.
struct GrundyColoring {
  std::vector<std::size_t> color;
  std::size_t n_colors = 0;

  ChainPartition as_partition() const { return {color, n_colors}; }
  friend bool operator==(const GrundyColoring&, const GrundyColoring&) = default;
};

enum class GrundyCondition { kNone, kMalformed, kG1, kG2, kG3 };

const char* to_string(GrundyCondition c);

/// Result of verify_grundy. On failure `condition` names the first violated
/// condition, `vertices` holds the witness vertices and `color` the color
/// concerned.
struct GrundyVerdict {
  GrundyCondition condition = GrundyCondition::kNone;
  std::vector<Vertex> vertices;
  std::size_t color = 0;
  std::string message;

  bool ok() const noexcept { return condition == GrundyCondition::kNone; }
  explicit operator bool() const noexcept { return ok(); }
};

/// First-Fit along `order`: each vertex gets the least color whose class it
/// extends to a chain.
GrundyColoring first_fit(const Poset& poset, const std::vector<Vertex>& order);
GrundyColoring first_fit(const OnlineInstance& instance);

/// Checks (G1) classes are chains, (G2) every color 1..n_colors is used and
/// (G3) a vertex of color j has an incomparable vertex of every color i < j.
GrundyVerdict verify_grundy(const Poset& poset, const GrundyColoring& g);

/// Presents class 1, then class 2, and so on, each class in ascending id.
/// Throws InvalidGrundyError when g fails verify_grundy.
OnlineInstance grundy_to_presentation(const Poset& poset, const GrundyColoring& g);

/// Largest First-Fit color count over all presentations, by depth-first
/// search over presentation prefixes with memoized First-Fit states. Throws
/// TooLargeError for n > 9.
std::size_t chi_ff_by_presentations(const Poset& poset);

/// A Grundy coloring with exactly k colors, found by branch-and-bound over
/// color assignments, or nullopt. Throws TooLargeError for n > 14.
std::optional<GrundyColoring> find_grundy_coloring(const Poset& poset, std::size_t k);

/// The largest k admitting a k-Grundy coloring together with one such
/// coloring, trying k downward from max_v |I(v)| + 1. Throws TooLargeError
/// for n > 14.
GrundyColoring max_grundy_coloring(const Poset& poset);

/// χ_FF(P): presentation search for n ≤ 9, Grundy branch-and-bound for
/// n ≤ 14, TooLargeError beyond.
std::size_t chi_ff_exact(const Poset& poset);

/// An on-line chain partitioning algorithm. Each call receives the poset
/// induced on the vertices presented so far, the newest vertex last, and
/// returns a positive chain label for it.
class OnlineColorer {
 public:
  virtual ~OnlineColorer() = default;
  /// Called once before the first vertex.
  virtual void start(std::size_t width_bound) = 0;
  virtual std::size_t next(const Poset& prefix) = 0;
};

class FirstFitColorer final : public OnlineColorer {
 public:
  void start(std::size_t width_bound) override;
  std::size_t next(const Poset& prefix) override;

 private:
  std::vector<std::vector<Vertex>> classes_;
};

/// Feeds the instance to the colorer in presentation order and checks every
/// emitted label. Labels are renumbered 1..k by first use. Throws
/// InvalidMoveError with the 1-based step of the first bad label.
ChainPartition run_online(OnlineColorer& colorer, const OnlineInstance& instance);

}  // namespace chainpart
