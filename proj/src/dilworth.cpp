#include "chainpart/dilworth.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "chainpart/error.hpp"
#include "chainpart/matching.hpp"

namespace chainpart {
namespace {

BipartiteGraph split_graph(const Poset& poset) {
  BipartiteGraph g(poset.size(), poset.size());
  for (Vertex u = 0; u < poset.size(); ++u) g.adjacency[u] = poset.above(u);
  return g;
}

// Poset with u, S and v replaced by one element c sitting above D(u) and below
// U(v). The contracted element gets the last id.
Poset contract_segment(const Poset& poset, Vertex u, Vertex v, const Bitset& segment) {
  Bitset removed = segment;
  removed.set(u);
  removed.set(v);
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < poset.size(); ++x)
    if (!removed.test(x)) keep.push_back(x);

  const std::size_t k = keep.size();
  std::vector<Bitset> rows(k + 1, Bitset(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (poset.less(keep[i], keep[j])) rows[i].set(j);
    if (poset.less(keep[i], u)) rows[i].set(k);
    if (poset.less(v, keep[i])) rows[k].set(i);
  }
  return Poset::from_upsets(std::move(rows), false);
}

}  // namespace

std::size_t width(const Poset& poset) {
  if (poset.empty()) return 0;
  return poset.size() - maximum_matching(split_graph(poset)).size;
}

ChainPartition dilworth_partition(const Poset& poset) {
  const Matching m = maximum_matching(split_graph(poset));
  ChainPartition partition;
  partition.chain_of.assign(poset.size(), 0);
  for (Vertex start = 0; start < poset.size(); ++start) {
    if (m.mate_of_right[start] != Matching::kUnmatched) continue;
    ++partition.count;
    for (Vertex v = start; v != Matching::kUnmatched; v = m.mate_of_left[v])
      partition.chain_of[v] = partition.count;
  }
  return partition;
}

Antichain maximum_antichain(const Poset& poset) {
  const std::size_t n = poset.size();
  const BipartiteGraph g = split_graph(poset);
  const Matching m = maximum_matching(g);

  // Alternating reachability from unmatched left vertices.
  Bitset left_seen(n), right_seen(n);
  std::vector<Vertex> stack;
  for (Vertex u = 0; u < n; ++u) {
    if (m.mate_of_left[u] == Matching::kUnmatched) {
      left_seen.set(u);
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const Vertex l = stack.back();
    stack.pop_back();
    Bitset next = g.adjacency[l] - right_seen;
    for (auto r = next.find_first(); r != Bitset::npos; r = next.find_next(r)) {
      right_seen.set(r);
      const Vertex mate = m.mate_of_right[r];
      if (mate != Matching::kUnmatched && !left_seen.test(mate)) {
        left_seen.set(mate);
        stack.push_back(mate);
      }
    }
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (left_seen.test(v) && !right_seen.test(v)) members.push_back(v);
  return Antichain(std::move(members));
}

bool is_dilworth_edge(const Poset& poset, Vertex u, Vertex v) {
  if (u >= poset.size() || v >= poset.size()) throw VertexRangeError("vertex out of range");
  if (u == v || poset.incomparable(u, v)) {
    throw NotComparableError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                             " are not a comparable pair");
  }
  if (poset.less(v, u)) std::swap(u, v);

  const std::size_t w = width(poset);
  const Bitset interval = poset.above(u) & poset.below(v);

  // Enlarging S never increases the cover size of the contraction, so only
  // maximal chains of the interval need to be tried.
  Bitset segment(poset.size());
  std::function<bool(Vertex)> extend = [&](Vertex last) {
    Bitset next = poset.above(last) & interval;
    bool extended = false;
    for (auto x = next.find_first(); x != Bitset::npos; x = next.find_next(x)) {
      // only covers of `last` inside the interval
      if ((poset.below(x) & next).any()) continue;
      extended = true;
      segment.set(x);
      if (extend(x)) return true;
      segment.reset(x);
    }
    if (extended) return false;
    return width(contract_segment(poset, u, v, segment)) == w;
  };
  return extend(u);
}

std::vector<Antichain> maximum_antichains(const Poset& poset, std::size_t cap) {
  const std::size_t n = poset.size();
  const std::size_t w = width(poset);
  std::vector<Antichain> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }

  std::vector<Vertex> chosen;
  std::function<void(Vertex, const Bitset&)> search = [&](Vertex from, const Bitset& allowed) {
    if (chosen.size() == w) {
      if (out.size() == cap) {
        throw CapExceededError("more than " + std::to_string(cap) + " maximum antichains");
      }
      out.emplace_back(chosen);
      return;
    }
    Bitset rest = allowed;
    for (Vertex x = 0; x < from; ++x) rest.reset(x);
    if (chosen.size() + rest.count() < w) return;
    for (auto x = rest.find_first(); x != Bitset::npos; x = rest.find_next(x)) {
      chosen.push_back(x);
      search(x + 1, allowed & poset.incomparable_to(x));
      chosen.pop_back();
      Bitset tail = rest;
      for (Vertex y = 0; y <= x; ++y) tail.reset(y);
      if (chosen.size() + tail.count() < w) break;
    }
  };
  Bitset all(n);
  all.set();
  search(0, all);
  return out;
}

AntichainLattice::AntichainLattice(const Poset& poset) : poset_(&poset), width_(chainpart::width(poset)) {}

AntichainLattice::AntichainLattice(const Poset& poset, std::size_t w) : poset_(&poset), width_(w) {}

bool AntichainLattice::is_maximum(const Antichain& a) const {
  if (a.size() != width_) return false;
  for (Vertex v : a.members)
    if (v >= poset_->size()) return false;
  if (!std::is_sorted(a.members.begin(), a.members.end())) return false;
  return poset_->is_antichain(a.members);
}

void AntichainLattice::require_maximum(const Antichain& a) const {
  if (!is_maximum(a)) {
    throw NotMaximumAntichainError("set of size " + std::to_string(a.size()) +
                                   " is not a maximum antichain (width " + std::to_string(width_) + ")");
  }
}

bool AntichainLattice::leq(const Antichain& a, const Antichain& b) const {
  const Bitset target = to_bitset(poset_->size(), b.members);
  for (Vertex x : a.members) {
    if (target.test(x)) continue;
    if (!poset_->above(x).intersects(target)) return false;
  }
  return true;
}

Antichain AntichainLattice::meet(const Antichain& a, const Antichain& b) const {
  std::vector<Vertex> both = a.members;
  both.insert(both.end(), b.members.begin(), b.members.end());
  return Antichain(poset_->minimal(both));
}

Antichain AntichainLattice::join(const Antichain& a, const Antichain& b) const {
  std::vector<Vertex> both = a.members;
  both.insert(both.end(), b.members.begin(), b.members.end());
  return Antichain(poset_->maximal(both));
}

bool sqsubseteq(const Poset& poset, const Antichain& a, const Antichain& b) {
  AntichainLattice lattice(poset);
  lattice.require_maximum(a);
  lattice.require_maximum(b);
  return lattice.leq(a, b);
}

Antichain antichain_meet(const Poset& poset, const Antichain& a, const Antichain& b) {
  AntichainLattice lattice(poset);
  lattice.require_maximum(a);
  lattice.require_maximum(b);
  return lattice.meet(a, b);
}

Antichain antichain_join(const Poset& poset, const Antichain& a, const Antichain& b) {
  AntichainLattice lattice(poset);
  lattice.require_maximum(a);
  lattice.require_maximum(b);
  return lattice.join(a, b);
}

Poset lex_product(const Poset& p, const Poset& q) {
  const std::size_t np = p.size();
  const std::size_t nq = q.size();
  const std::size_t n = np * nq;
  std::vector<Bitset> rows(n, Bitset(n));
  for (Vertex a = 0; a < np; ++a) {
    for (Vertex b = 0; b < nq; ++b) {
      Bitset& row = rows[a * nq + b];
      for (auto c = p.above(a).find_first(); c != Bitset::npos; c = p.above(a).find_next(c))
        for (Vertex d = 0; d < nq; ++d) row.set(c * nq + d);
      for (auto d = q.above(b).find_first(); d != Bitset::npos; d = q.above(b).find_next(d))
        row.set(a * nq + d);
    }
  }
  return Poset::from_upsets(std::move(rows), false);
}

}  // namespace chainpart
