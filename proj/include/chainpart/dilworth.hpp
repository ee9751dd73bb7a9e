#pragma once

#include <cstddef>
#include <vector>

#include "chainpart/poset.hpp"

namespace chainpart {

/// Size of a largest antichain, computed as n minus a maximum matching of the
/// split bipartite graph of the strict order (Dilworth via König). Width of
/// the empty poset is 0.
std::size_t width(const Poset& poset);

/// Partition into exactly width(P) chains, read off the deterministic
/// matching. Chains are numbered by ascending least element.
ChainPartition dilworth_partition(const Poset& poset);

/// One maximum antichain, taken from the König vertex cover of the same
/// deterministic matching.
Antichain maximum_antichain(const Poset& poset);

/// True iff some Dilworth partition of P puts u and v in one chain.
///
/// The pair is forced into one chain by contracting u, a chain S of the open
/// interval (u,v), and v into a single element below U(v) and above D(u); the
/// pair is a Dilworth edge iff for some maximal such S the contracted poset
/// still has width(P). Throws NotComparableError when u = v or u ∥ v.
bool is_dilworth_edge(const Poset& poset, Vertex u, Vertex v);

/// Every antichain of size width(P), in lexicographic order. Exhaustive
/// backtracking; throws CapExceededError when more than `cap` exist.
std::vector<Antichain> maximum_antichains(const Poset& poset, std::size_t cap);

/// The lattice of maximum antichains of a fixed poset, ordered by
/// A ⊑ B iff A ⊆ D[B].
class AntichainLattice {
 public:
  explicit AntichainLattice(const Poset& poset);
  AntichainLattice(const Poset& poset, std::size_t width);

  const Poset& poset() const noexcept { return *poset_; }
  std::size_t width() const noexcept { return width_; }

  bool is_maximum(const Antichain& a) const;
  /// Throws NotMaximumAntichainError unless `a` is a maximum antichain.
  void require_maximum(const Antichain& a) const;

  bool leq(const Antichain& a, const Antichain& b) const;
  bool less(const Antichain& a, const Antichain& b) const { return a != b && leq(a, b); }
  /// Min_P(A ∪ B).
  Antichain meet(const Antichain& a, const Antichain& b) const;
  /// Max_P(A ∪ B).
  Antichain join(const Antichain& a, const Antichain& b) const;

 private:
  const Poset* poset_;
  std::size_t width_;
};

/// Checked free-function forms; each throws NotMaximumAntichainError.
bool sqsubseteq(const Poset& poset, const Antichain& a, const Antichain& b);
Antichain antichain_meet(const Poset& poset, const Antichain& a, const Antichain& b);
Antichain antichain_join(const Poset& poset, const Antichain& a, const Antichain& b);

/// Lexicographic product P·Q; vertex (p, q) gets id p·|Q| + q.
Poset lex_product(const Poset& p, const Poset& q);

}  // namespace chainpart
