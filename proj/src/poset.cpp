#include "chainpart/poset.hpp"

#include <algorithm>
#include <string>

#include "chainpart/error.hpp"

namespace chainpart {

Bitset to_bitset(std::size_t n, std::span<const Vertex> vertices) {
  Bitset bits(n);
  for (Vertex v : vertices) bits.set(v);
  return bits;
}

std::vector<Vertex> to_vector(const Bitset& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) out.push_back(v);
  return out;
}

Poset::Poset(std::size_t n) : up_(n, Bitset(n)), down_(n, Bitset(n)) {}

Poset Poset::chain(std::size_t n) {
  std::vector<Relation> rel;
  for (Vertex v = 1; v < n; ++v) rel.emplace_back(v - 1, v);
  return from_relations(n, rel);
}

Poset Poset::from_relations(std::size_t n, std::span<const Relation> relations) {
  std::vector<std::vector<Vertex>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [u, v] : relations) {
    if (u >= n || v >= n) {
      throw VertexRangeError("relation (" + std::to_string(u) + "," + std::to_string(v) +
                             ") references a vertex outside 0.." + std::to_string(n));
    }
    if (u == v) throw SelfLoopError("self-loop on vertex " + std::to_string(u));
    succ[u].push_back(v);
    ++indegree[v];
  }

  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (Vertex s : succ[v])
      if (--indegree[s] == 0) ready.push_back(s);
  }
  if (order.size() != n) {
    auto it = std::find_if(indegree.begin(), indegree.end(), [](std::size_t d) { return d > 0; });
    throw CycleError("relations contain a cycle through vertex " +
                     std::to_string(static_cast<std::size_t>(it - indegree.begin())));
  }

  Poset p(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Bitset& row = p.up_[*it];
    for (Vertex s : succ[*it]) {
      row.set(s);
      row |= p.up_[s];
    }
  }
  p.rebuild_downsets();
  return p;
}

Poset Poset::from_upsets(std::vector<Bitset> upsets, bool validate) {
  const std::size_t n = upsets.size();
  Poset p;
  p.up_ = std::move(upsets);
  for (const Bitset& row : p.up_)
    if (row.size() != n) throw SizeMismatchError("up-set row has wrong length");
  if (validate) {
    for (Vertex v = 0; v < n; ++v) {
      if (p.up_[v].test(v)) throw CycleError("vertex " + std::to_string(v) + " is below itself");
      for (auto w = p.up_[v].find_first(); w != Bitset::npos; w = p.up_[v].find_next(w)) {
        if (p.up_[w].test(v)) throw CycleError("antisymmetry fails on " + std::to_string(v));
        if (!p.up_[w].is_subset_of(p.up_[v]))
          throw CycleError("relation is not transitively closed at " + std::to_string(v));
      }
    }
  }
  p.rebuild_downsets();
  return p;
}

void Poset::rebuild_downsets() {
  const std::size_t n = up_.size();
  down_.assign(n, Bitset(n));
  for (Vertex u = 0; u < n; ++u)
    for (auto v = up_[u].find_first(); v != Bitset::npos; v = up_[u].find_next(v)) down_[v].set(u);
}

Bitset Poset::incomparable_to(Vertex v) const {
  Bitset out = up_[v] | down_[v];
  out.set(v);
  out.flip();
  return out;
}

Bitset Poset::comparable_to(Vertex v) const {
  Bitset out = up_[v] | down_[v];
  out.set(v);
  return out;
}

Bitset Poset::above(std::span<const Vertex> set) const {
  Bitset out(size());
  for (Vertex v : set) out |= up_[v];
  return out;
}

Bitset Poset::below(std::span<const Vertex> set) const {
  Bitset out(size());
  for (Vertex v : set) out |= down_[v];
  return out;
}

std::vector<Vertex> Poset::minimal(std::span<const Vertex> set) const {
  Bitset members = to_bitset(size(), set);
  std::vector<Vertex> out;
  for (Vertex v : set)
    if (!down_[v].intersects(members)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> Poset::maximal(std::span<const Vertex> set) const {
  Bitset members = to_bitset(size(), set);
  std::vector<Vertex> out;
  for (Vertex v : set)
    if (!up_[v].intersects(members)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poset Poset::induced(std::span<const Vertex> vertices) const {
  const std::size_t k = vertices.size();
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (less(vertices[i], vertices[j])) rows[i].set(j);
  return from_upsets(std::move(rows), false);
}

Poset Poset::induced(const Bitset& members) const {
  auto v = to_vector(members);
  return induced(v);
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (Vertex u = 0; u < size(); ++u)
    for (auto v = up_[u].find_first(); v != Bitset::npos; v = up_[u].find_next(v)) out.emplace_back(u, v);
  return out;
}

std::vector<Relation> Poset::covers() const {
  std::vector<Relation> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (auto v = up_[u].find_first(); v != Bitset::npos; v = up_[u].find_next(v)) {
      // u < v is a cover iff nothing lies strictly between them
      if (!up_[u].intersects(down_[v])) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Poset::relation_count() const {
  std::size_t total = 0;
  for (const Bitset& row : up_) total += row.count();
  return total;
}

std::vector<Vertex> Poset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> remaining(n);
  for (Vertex v = 0; v < n; ++v) remaining[v] = down_[v].count();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!placed[v] && remaining[v] == 0) {
        pick = v;
        break;
      }
    }
    placed[pick] = true;
    order.push_back(pick);
    for (auto w = up_[pick].find_first(); w != Bitset::npos; w = up_[pick].find_next(w)) --remaining[w];
  }
  return order;
}

bool Poset::is_chain(std::span<const Vertex> set) const {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!comparable(set[i], set[j])) return false;
  return true;
}

bool Poset::is_antichain(std::span<const Vertex> set) const {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || comparable(set[i], set[j])) return false;
  return true;
}

std::vector<std::vector<Vertex>> ChainPartition::chains() const {
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < chain_of.size(); ++v) {
    const std::size_t c = chain_of[v];
    if (c >= 1 && c <= count) out[c - 1].push_back(v);
  }
  return out;
}

bool is_chain_partition(const Poset& poset, const ChainPartition& partition) {
  if (partition.chain_of.size() != poset.size()) return false;
  for (std::size_t c : partition.chain_of)
    if (c < 1 || c > partition.count) return false;
  for (const auto& members : partition.chains()) {
    if (members.empty() || !poset.is_chain(members)) return false;
  }
  return true;
}

Antichain::Antichain(std::vector<Vertex> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
}

bool Antichain::contains(Vertex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

}  // namespace chainpart
