#include "chainpart/online.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "chainpart/dilworth.hpp"
#include "chainpart/error.hpp"

namespace chainpart {
namespace {

constexpr std::size_t kPresentationLimit = 9;
constexpr std::size_t kGrundyLimit = 14;

using Mask = std::uint32_t;

std::vector<Mask> comparable_masks(const Poset& poset) {
  std::vector<Mask> out(poset.size(), 0);
  for (Vertex u = 0; u < poset.size(); ++u)
    for (Vertex v = 0; v < poset.size(); ++v)
      if (poset.comparable(u, v)) out[u] |= Mask{1} << v;
  return out;
}

std::size_t incomparability_bound(const Poset& poset) {
  std::size_t best = 0;
  for (Vertex v = 0; v < poset.size(); ++v) best = std::max(best, poset.incomparable_to(v).count() + 1);
  return std::min(best, poset.size());
}

// Depth-first search over presentation prefixes. Two prefixes leading to the
// same color classes have the same future, so states are memoized.
class PresentationSearch {
 public:
  explicit PresentationSearch(const Poset& poset)
      : n_(poset.size()), comparable_(comparable_masks(poset)), bound_(incomparability_bound(poset)),
        color_(n_, 0) {}

  std::size_t run() {
    if (n_ == 0) return 0;
    dfs(0, 0);
    return best_;
  }

 private:
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t v = 0; v < n_; ++v) k |= static_cast<std::uint64_t>(color_[v]) << (4 * v);
    return k;
  }

  void dfs(std::size_t colored, std::size_t used) {
    best_ = std::max(best_, used);
    if (best_ >= bound_ || used + (n_ - colored) <= best_) return;
    if (!seen_.insert(key()).second) return;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      std::size_t c = 0;
      while (c < used && (classes_[c] & ~comparable_[v]) != 0) ++c;
      if (c == used) classes_.push_back(0);
      classes_[c] |= Mask{1} << v;
      color_[v] = static_cast<std::uint8_t>(c + 1);
      dfs(colored + 1, std::max(used, c + 1));
      color_[v] = 0;
      classes_[c] &= ~(Mask{1} << v);
      if (c == used) classes_.pop_back();
      if (best_ >= bound_) return;
    }
  }

  std::size_t n_;
  std::vector<Mask> comparable_;
  std::size_t bound_;
  std::vector<std::uint8_t> color_;
  std::vector<Mask> classes_;
  std::unordered_set<std::uint64_t> seen_;
  std::size_t best_ = 0;
};

// Assigns colors 1..k vertex by vertex keeping classes chains, and prunes as
// soon as some colored vertex can no longer receive a (G3) witness.
class GrundySearch {
 public:
  GrundySearch(const Poset& poset, std::size_t k)
      : n_(poset.size()), k_(k), comparable_(comparable_masks(poset)), color_(n_, 0), classes_(k + 1, 0) {}

  std::optional<GrundyColoring> run() {
    if (k_ == 0) return n_ == 0 ? std::optional<GrundyColoring>(GrundyColoring{}) : std::nullopt;
    if (!assign(0)) return std::nullopt;
    return GrundyColoring{color_, k_};
  }

 private:
  Mask incomparable(Vertex v) const { return ~comparable_[v] & full(); }
  Mask full() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  bool witnesses_possible(Vertex next) const {
    const Mask open = full() & ~((Mask{1} << next) - 1);
    for (Vertex u = 0; u < next; ++u) {
      for (std::size_t i = 1; i < color_[u]; ++i) {
        if (classes_[i] & incomparable(u)) continue;
        bool possible = false;
        Mask candidates = open & incomparable(u);
        while (candidates && !possible) {
          const Vertex w = static_cast<Vertex>(__builtin_ctz(candidates));
          candidates &= candidates - 1;
          possible = (classes_[i] & ~comparable_[w]) == 0;
        }
        if (!possible) return false;
      }
    }
    return true;
  }

  bool assign(Vertex v) {
    if (v == n_) return classes_[k_] != 0;
    for (std::size_t c = 1; c <= k_; ++c) {
      if (classes_[c] & ~comparable_[v]) continue;
      classes_[c] |= Mask{1} << v;
      color_[v] = c;
      if (witnesses_possible(v + 1) && assign(v + 1)) return true;
      classes_[c] &= ~(Mask{1} << v);
      color_[v] = 0;
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<Mask> comparable_;
  std::vector<std::size_t> color_;
  std::vector<Mask> classes_;
};

}  // namespace

void OnlineInstance::validate() const {
  const std::size_t n = poset.size();
  if (presentation.size() != n) throw BadParameterError("presentation length differs from vertex count");
  std::vector<bool> seen(n, false);
  for (Vertex v : presentation) {
    if (v >= n || seen[v]) throw BadParameterError("presentation is not a permutation of the vertices");
    seen[v] = true;
  }
  const std::size_t w = width(poset);
  if (w > width_bound) {
    throw WidthExceededError("poset width " + std::to_string(w) + " exceeds declared bound " +
                             std::to_string(width_bound));
  }
}

const char* to_string(GrundyCondition c) {
  switch (c) {
    case GrundyCondition::kNone: return "ok";
    case GrundyCondition::kMalformed: return "malformed";
    case GrundyCondition::kG1: return "G1";
    case GrundyCondition::kG2: return "G2";
    case GrundyCondition::kG3: return "G3";
  }
  return "?";
}

GrundyColoring first_fit(const Poset& poset, const std::vector<Vertex>& order) {
  GrundyColoring g;
  g.color.assign(poset.size(), 0);
  std::vector<Bitset> classes;
  for (Vertex v : order) {
    const Bitset comparable = poset.comparable_to(v);
    std::size_t c = 0;
    while (c < classes.size() && !classes[c].is_subset_of(comparable)) ++c;
    if (c == classes.size()) classes.emplace_back(poset.size());
    classes[c].set(v);
    g.color[v] = c + 1;
  }
  g.n_colors = classes.size();
  return g;
}

GrundyColoring first_fit(const OnlineInstance& instance) { return first_fit(instance.poset, instance.presentation); }

GrundyVerdict verify_grundy(const Poset& poset, const GrundyColoring& g) {
  GrundyVerdict verdict;
  const std::size_t n = poset.size();
  if (g.color.size() != n) {
    verdict.condition = GrundyCondition::kMalformed;
    verdict.message = "coloring has " + std::to_string(g.color.size()) + " entries for " + std::to_string(n) +
                      " vertices";
    return verdict;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.color[v] < 1 || g.color[v] > g.n_colors) {
      verdict.condition = GrundyCondition::kMalformed;
      verdict.vertices = {v};
      verdict.color = g.color[v];
      verdict.message = "color out of range 1.." + std::to_string(g.n_colors);
      return verdict;
    }
  }
  std::vector<Bitset> classes(g.n_colors + 1, Bitset(n));
  for (Vertex v = 0; v < n; ++v) classes[g.color[v]].set(v);

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.color[u] == g.color[v] && poset.incomparable(u, v)) {
        verdict.condition = GrundyCondition::kG1;
        verdict.vertices = {u, v};
        verdict.color = g.color[u];
        verdict.message = "incomparable vertices share a color";
        return verdict;
      }
    }
  }
  for (std::size_t c = 1; c <= g.n_colors; ++c) {
    if (classes[c].none()) {
      verdict.condition = GrundyCondition::kG2;
      verdict.color = c;
      verdict.message = "color " + std::to_string(c) + " is unused";
      return verdict;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const Bitset others = poset.incomparable_to(v);
    for (std::size_t i = 1; i < g.color[v]; ++i) {
      if (!classes[i].intersects(others)) {
        verdict.condition = GrundyCondition::kG3;
        verdict.vertices = {v};
        verdict.color = i;
        verdict.message = "vertex " + std::to_string(v) + " of color " + std::to_string(g.color[v]) +
                          " has no incomparable vertex of color " + std::to_string(i);
        return verdict;
      }
    }
  }
  return verdict;
}

OnlineInstance grundy_to_presentation(const Poset& poset, const GrundyColoring& g) {
  const GrundyVerdict verdict = verify_grundy(poset, g);
  if (!verdict) throw InvalidGrundyError(std::string(to_string(verdict.condition)) + ": " + verdict.message);
  OnlineInstance instance{poset, {}, width(poset)};
  for (std::size_t c = 1; c <= g.n_colors; ++c)
    for (Vertex v = 0; v < poset.size(); ++v)
      if (g.color[v] == c) instance.presentation.push_back(v);
  return instance;
}

std::size_t chi_ff_by_presentations(const Poset& poset) {
  if (poset.size() > kPresentationLimit) {
    throw TooLargeError("presentation search supports at most " + std::to_string(kPresentationLimit) +
                        " vertices");
  }
  return PresentationSearch(poset).run();
}

std::optional<GrundyColoring> find_grundy_coloring(const Poset& poset, std::size_t k) {
  if (poset.size() > kGrundyLimit) {
    throw TooLargeError("Grundy search supports at most " + std::to_string(kGrundyLimit) + " vertices");
  }
  return GrundySearch(poset, k).run();
}

GrundyColoring max_grundy_coloring(const Poset& poset) {
  if (poset.size() > kGrundyLimit) {
    throw TooLargeError("Grundy search supports at most " + std::to_string(kGrundyLimit) + " vertices");
  }
  for (std::size_t k = incomparability_bound(poset); k >= 1; --k)
    if (auto g = GrundySearch(poset, k).run()) return *g;
  return GrundyColoring{};
}

std::size_t chi_ff_exact(const Poset& poset) {
  if (poset.size() <= kPresentationLimit) return chi_ff_by_presentations(poset);
  return max_grundy_coloring(poset).n_colors;
}

void FirstFitColorer::start(std::size_t) { classes_.clear(); }

std::size_t FirstFitColorer::next(const Poset& prefix) {
  const Vertex v = prefix.size() - 1;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (std::all_of(classes_[c].begin(), classes_[c].end(), [&](Vertex u) { return prefix.comparable(u, v); })) {
      classes_[c].push_back(v);
      return c + 1;
    }
  }
  classes_.push_back({v});
  return classes_.size();
}

ChainPartition run_online(OnlineColorer& colorer, const OnlineInstance& instance) {
  instance.validate();
  const Poset& poset = instance.poset;
  const std::size_t n = poset.size();
  colorer.start(instance.width_bound);

  ChainPartition partition;
  partition.chain_of.assign(n, 0);
  std::unordered_map<std::size_t, std::size_t> renumber;
  std::vector<Bitset> members;
  std::vector<Vertex> seen;
  for (std::size_t step = 0; step < n; ++step) {
    const Vertex v = instance.presentation[step];
    seen.push_back(v);
    const std::size_t label = colorer.next(poset.induced(seen));
    if (label == 0) throw InvalidMoveError(step + 1, "label 0 is not a chain index");
    auto [it, fresh] = renumber.try_emplace(label, renumber.size() + 1);
    if (fresh) members.emplace_back(n);
    Bitset& chain = members[it->second - 1];
    if (!chain.is_subset_of(poset.comparable_to(v))) {
      throw InvalidMoveError(step + 1, "vertex " + std::to_string(v) + " is incomparable to a vertex of chain " +
                                           std::to_string(label));
    }
    chain.set(v);
    partition.chain_of[v] = it->second;
  }
  partition.count = renumber.size();
  return partition;
}

}  // namespace chainpart
