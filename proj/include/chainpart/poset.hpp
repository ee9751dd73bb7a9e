#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace chainpart {

using Vertex = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Ordered pair (lower, upper) meaning lower < upper.
using Relation = std::pair<Vertex, Vertex>;

/// A finite poset on vertices 0..n-1.
///
/// The strict order is stored transitively closed as two dense bit matrices
/// (strict up-sets and strict down-sets), so every comparability query is O(1).
/// Instances are immutable once built.
class Poset {
 public:
  Poset() = default;

  /// n pairwise incomparable vertices.
  explicit Poset(std::size_t n);

  /// Transitive closure of `relations`. Throws SelfLoopError on (v,v),
  /// CycleError if the closure would force u < u, VertexRangeError on bad ids.
  static Poset from_relations(std::size_t n, std::span<const Relation> relations);

  /// Builds from strict up-sets; with `validate` the rows are checked for
  /// irreflexivity, antisymmetry and transitivity (CycleError otherwise).
  static Poset from_upsets(std::vector<Bitset> upsets, bool validate = true);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n) { return Poset(n); }

  std::size_t size() const noexcept { return up_.size(); }
  bool empty() const noexcept { return up_.empty(); }

  bool less(Vertex u, Vertex v) const { return up_[u].test(v); }
  bool leq(Vertex u, Vertex v) const { return u == v || less(u, v); }
  bool comparable(Vertex u, Vertex v) const { return u == v || less(u, v) || less(v, u); }
  bool incomparable(Vertex u, Vertex v) const { return !comparable(u, v); }

  /// Strict up-set U(v).
  const Bitset& above(Vertex v) const { return up_[v]; }
  /// Strict down-set D(v).
  const Bitset& below(Vertex v) const { return down_[v]; }
  /// I(v): vertices incomparable to v.
  Bitset incomparable_to(Vertex v) const;
  /// D[v] ∪ U[v].
  Bitset comparable_to(Vertex v) const;

  /// Union of strict up-sets (resp. down-sets) of a vertex set.
  Bitset above(std::span<const Vertex> set) const;
  Bitset below(std::span<const Vertex> set) const;

  /// Minimal / maximal elements of the subposet induced by `set`.
  std::vector<Vertex> minimal(std::span<const Vertex> set) const;
  std::vector<Vertex> maximal(std::span<const Vertex> set) const;

  /// Induced subposet; vertex k of the result is vertices[k].
  Poset induced(std::span<const Vertex> vertices) const;
  Poset induced(const Bitset& members) const;

  /// Every strict pair, ordered by (lower, upper).
  std::vector<Relation> relations() const;
  /// Cover pairs only (the transitive reduction).
  std::vector<Relation> covers() const;

  /// Number of strict comparable pairs.
  std::size_t relation_count() const;

  /// Deterministic linear extension (smallest available id first).
  std::vector<Vertex> linear_extension() const;

  bool is_chain(std::span<const Vertex> set) const;
  bool is_antichain(std::span<const Vertex> set) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  void rebuild_downsets();

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

/// Vertex → 1-based chain index; every class is a nonempty chain.
struct ChainPartition {
  std::vector<std::size_t> chain_of;
  std::size_t count = 0;

  /// Class members in ascending vertex order, classes in index order.
  std::vector<std::vector<Vertex>> chains() const;
};

/// True iff `partition` covers P, uses contiguous indices 1..count and each
/// class is a chain.
bool is_chain_partition(const Poset& poset, const ChainPartition& partition);

/// Sorted set of pairwise incomparable vertices.
struct Antichain {
  std::vector<Vertex> members;

  Antichain() = default;
  explicit Antichain(std::vector<Vertex> m);

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Vertex v) const;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend auto operator<=>(const Antichain&, const Antichain&) = default;
};

Bitset to_bitset(std::size_t n, std::span<const Vertex> vertices);
std::vector<Vertex> to_vector(const Bitset& set);

}  // namespace chainpart
