#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chainpart/dilworth.hpp"
#include "chainpart/ladder.hpp"
#include "chainpart/poset.hpp"

namespace chainpart {

/// A poset with a presentation sequence A_1..A_n of maximum antichains.
struct RegularInstance {
  Poset poset;
  std::vector<Antichain> antichains;
  std::size_t w = 0;

  /// Index of the antichain holding each vertex (0-based), or SIZE_MAX when
  /// uncovered; a vertex in several antichains reports the first.
  std::vector<std::size_t> layer_of() const;
};

/// The instance restricted to A_1..A_k, vertices renumbered in ascending
/// original id.
RegularInstance presentation_prefix(const RegularInstance& inst, std::size_t k);

/// p(i), s(i) as 1-based indices: the ⊑-greatest earlier antichain strictly
/// below A_i and the ⊑-least earlier antichain strictly above it.
struct Neighbors {
  std::optional<std::size_t> p;
  std::optional<std::size_t> s;
};

/// Requires 1 ≤ i ≤ n (BadParameterError otherwise).
Neighbors derive_ps(const RegularInstance& inst, std::size_t i);

/// True iff |A| = |B|, the cross graph {(a,b): a < b} has a perfect matching
/// and each of its edges survives the forced-edge test: deleting a and b
/// leaves a perfect matching. Throws SizeMismatchError, NotAntichainError, or
/// BadParameterError when A and B overlap.
bool is_core(const Poset& poset, const Antichain& lower, const Antichain& upper);

enum class RegularCondition { kWidth, kAntichain, kR1, kR2, kR3, kR4, kR5, kP6, kP7 };

const char* to_string(RegularCondition c);

struct RegularViolation {
  RegularCondition condition;
  /// 1-based antichain indices involved.
  std::vector<std::size_t> antichains;
  std::vector<Vertex> vertices;
  std::string message;
};

struct RegularVerdict {
  std::vector<RegularViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(RegularCondition c) const;
};

/// Checks every antichain is a w-antichain with width(P) = w, then (R1)–(R3),
/// then replays the presentation: at step i, (R4) for the cores with A_s(i)
/// and A_p(i) and (R5) for every comparability between A_i and an earlier
/// antichain.
RegularVerdict verify_regular(const RegularInstance& inst);

/// (P6)/(P7) for every pair A_r ⊏ A_s. The middle antichain of (P7) is read
/// two ways: `earliest_to_top` takes every A_t that is presented first among
/// the antichains of [A_t, A_s], `earliest_to_bottom` every A_t presented
/// first among [A_r, A_t].
struct P6P7Verdict {
  std::vector<RegularViolation> p6;
  std::vector<RegularViolation> earliest_to_top;
  std::vector<RegularViolation> earliest_to_bottom;

  bool ok() const noexcept { return p6.empty() && earliest_to_top.empty() && earliest_to_bottom.empty(); }
};

P6P7Verdict verify_p6_p7(const RegularInstance& inst);

struct LadderBound {
  std::size_t m = 0;
  std::size_t limit = 0;
  bool ok = false;
  LadderEmbedding witness;
};

/// Longest induced ladder searched up to 2w²+1 rungs; ok iff m ≤ 2w².
LadderBound ladder_bound_check(const RegularInstance& inst);

/// Longest canonical ladder (A(y_i) ⊑ A(x_{i+1}) for each i) searched up to
/// w+1 rungs; ok iff m ≤ w.
LadderBound canonical_ladder_check(const RegularInstance& inst);

/// Searches every induced (2w+1)-ladder for one with A(y_1) ⋢ A(x_{2w+1}).
std::optional<LadderEmbedding> long_ladder_counterexample(const RegularInstance& inst);

}  // namespace chainpart
