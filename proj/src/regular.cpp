#include "chainpart/regular.hpp"

#include <algorithm>
#include <limits>

#include "chainpart/error.hpp"
#include "chainpart/matching.hpp"

namespace chainpart {
namespace {

constexpr std::size_t kNoLayer = std::numeric_limits<std::size_t>::max();

struct CoreDefect {
  bool no_perfect_matching = false;
  Vertex lower = 0;
  Vertex upper = 0;
};

// First cross edge lying in no perfect matching, or a missing perfect matching.
std::optional<CoreDefect> core_defect(const Poset& poset, const Antichain& lower, const Antichain& upper) {
  const std::size_t k = lower.size();
  BipartiteGraph g(k, upper.size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < upper.size(); ++j)
      if (poset.less(lower.members[i], upper.members[j])) g.add_edge(i, j);
  if (maximum_matching(g).size != k || upper.size() != k) return CoreDefect{true, 0, 0};

  for (std::size_t i = 0; i < k; ++i) {
    for (auto j = g.adjacency[i].find_first(); j != Bitset::npos; j = g.adjacency[i].find_next(j)) {
      BipartiteGraph rest(k, k);
      for (std::size_t a = 0; a < k; ++a) {
        if (a == i) continue;
        rest.adjacency[a] = g.adjacency[a];
        rest.adjacency[a].reset(j);
      }
      if (maximum_matching(rest).size + 1 != k) return CoreDefect{false, lower.members[i], upper.members[j]};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<bool>> dominance_matrix(const RegularInstance& inst) {
  const AntichainLattice lattice(inst.poset, inst.w);
  const std::size_t n = inst.antichains.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = lattice.leq(inst.antichains[i], inst.antichains[j]);
  return leq;
}

bool overlaps(const Antichain& a, const Antichain& b) {
  return std::any_of(a.members.begin(), a.members.end(), [&](Vertex v) { return b.contains(v); });
}

// p(i), s(i) among the first i-1 antichains; indices are 0-based here.
Neighbors neighbors(const std::vector<std::vector<bool>>& leq, std::size_t i) {
  Neighbors nb;
  for (std::size_t j = 0; j < i; ++j) {
    if (leq[j][i] && !leq[i][j]) {
      if (!nb.p || leq[*nb.p][j]) nb.p = j;
    }
    if (leq[i][j] && !leq[j][i]) {
      if (!nb.s || leq[j][*nb.s]) nb.s = j;
    }
  }
  return nb;
}

std::string core_message(const CoreDefect& d) {
  if (d.no_perfect_matching) return "cross comparabilities admit no perfect matching";
  return "edge " + std::to_string(d.lower) + "<" + std::to_string(d.upper) + " lies in no perfect matching";
}

}  // namespace

std::vector<std::size_t> RegularInstance::layer_of() const {
  std::vector<std::size_t> out(poset.size(), kNoLayer);
  for (std::size_t i = antichains.size(); i-- > 0;)
    for (Vertex v : antichains[i].members)
      if (v < out.size()) out[v] = i;
  return out;
}

RegularInstance presentation_prefix(const RegularInstance& inst, std::size_t k) {
  k = std::min(k, inst.antichains.size());
  Bitset keep(inst.poset.size());
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : inst.antichains[i].members) keep.set(v);
  const std::vector<Vertex> vertices = to_vector(keep);
  std::vector<Vertex> renumber(inst.poset.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) renumber[vertices[i]] = i;

  RegularInstance out{inst.poset.induced(vertices), {}, inst.w};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vertex> members;
    for (Vertex v : inst.antichains[i].members) members.push_back(renumber[v]);
    out.antichains.emplace_back(std::move(members));
  }
  return out;
}

Neighbors derive_ps(const RegularInstance& inst, std::size_t i) {
  if (i < 1 || i > inst.antichains.size()) throw BadParameterError("antichain index out of range");
  const AntichainLattice lattice(inst.poset, inst.w);
  const Antichain& a = inst.antichains[i - 1];
  Neighbors nb;
  for (std::size_t j = 0; j + 1 < i; ++j) {
    const Antichain& b = inst.antichains[j];
    if (lattice.less(b, a) && (!nb.p || lattice.leq(inst.antichains[*nb.p - 1], b))) nb.p = j + 1;
    if (lattice.less(a, b) && (!nb.s || lattice.leq(b, inst.antichains[*nb.s - 1]))) nb.s = j + 1;
  }
  return nb;
}

bool is_core(const Poset& poset, const Antichain& lower, const Antichain& upper) {
  if (lower.size() != upper.size()) {
    throw SizeMismatchError("core sides have sizes " + std::to_string(lower.size()) + " and " +
                            std::to_string(upper.size()));
  }
  for (const Antichain* side : {&lower, &upper}) {
    for (Vertex v : side->members)
      if (v >= poset.size()) throw VertexRangeError("antichain member out of range");
    if (!poset.is_antichain(side->members)) throw NotAntichainError("core side is not an antichain");
  }
  if (overlaps(lower, upper)) throw BadParameterError("core sides overlap");
  return !core_defect(poset, lower, upper).has_value();
}

const char* to_string(RegularCondition c) {
  switch (c) {
    case RegularCondition::kWidth: return "width";
    case RegularCondition::kAntichain: return "antichain";
    case RegularCondition::kR1: return "R1";
    case RegularCondition::kR2: return "R2";
    case RegularCondition::kR3: return "R3";
    case RegularCondition::kR4: return "R4";
    case RegularCondition::kR5: return "R5";
    case RegularCondition::kP6: return "P6";
    case RegularCondition::kP7: return "P7";
  }
  return "?";
}

bool RegularVerdict::has(RegularCondition c) const {
  return std::any_of(violations.begin(), violations.end(), [c](const RegularViolation& v) { return v.condition == c; });
}

RegularVerdict verify_regular(const RegularInstance& inst) {
  RegularVerdict verdict;
  auto& out = verdict.violations;
  const Poset& poset = inst.poset;
  const std::size_t n = inst.antichains.size();

  const std::size_t actual = width(poset);
  if (actual != inst.w) {
    out.push_back({RegularCondition::kWidth, {}, {},
                   "poset width " + std::to_string(actual) + " differs from w = " + std::to_string(inst.w)});
  }
  bool well_formed = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Antichain& a = inst.antichains[i];
    const bool in_range = std::all_of(a.members.begin(), a.members.end(), [&](Vertex v) { return v < poset.size(); });
    if (!in_range || a.size() != inst.w || !poset.is_antichain(a.members)) {
      out.push_back({RegularCondition::kAntichain, {i + 1}, a.members,
                     "A_" + std::to_string(i + 1) + " is not an antichain of size " + std::to_string(inst.w)});
      well_formed = false;
    }
  }
  if (!well_formed) return verdict;

  // (R1), (R2)
  std::vector<std::vector<std::size_t>> holders(poset.size());
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex v : inst.antichains[i].members) holders[v].push_back(i + 1);
  std::vector<Vertex> uncovered;
  for (Vertex v = 0; v < poset.size(); ++v) {
    if (holders[v].empty()) uncovered.push_back(v);
    if (holders[v].size() > 1) {
      out.push_back({RegularCondition::kR2, holders[v], {v},
                     "vertex " + std::to_string(v) + " lies in " + std::to_string(holders[v].size()) + " antichains"});
    }
  }
  if (!uncovered.empty()) {
    out.push_back({RegularCondition::kR1, {}, uncovered,
                   std::to_string(uncovered.size()) + " vertices lie in no antichain"});
  }

  // (R3)
  const auto leq = dominance_matrix(inst);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!leq[i][j] && !leq[j][i]) {
        out.push_back({RegularCondition::kR3, {i + 1, j + 1}, {},
                       "A_" + std::to_string(i + 1) + " and A_" + std::to_string(j + 1) + " are ⊑-incomparable"});
      }
    }
  }

  // (R4), (R5) at the moment each A_i is presented
  for (std::size_t i = 0; i < n; ++i) {
    const Antichain& a = inst.antichains[i];
    const Neighbors nb = neighbors(leq, i);
    auto check_core = [&](std::size_t lo, std::size_t hi) {
      const Antichain& lower = inst.antichains[lo];
      const Antichain& upper = inst.antichains[hi];
      if (overlaps(lower, upper)) return;
      if (auto d = core_defect(poset, lower, upper)) {
        std::vector<Vertex> witness;
        if (!d->no_perfect_matching) witness = {d->lower, d->upper};
        out.push_back({RegularCondition::kR4, {lo + 1, hi + 1}, witness, core_message(*d)});
      }
    };
    if (nb.s) check_core(i, *nb.s);
    if (nb.p) check_core(*nb.p, i);

    for (std::size_t j = 0; j < i; ++j) {
      for (Vertex x : a.members) {
        for (Vertex y : inst.antichains[j].members) {
          if (poset.less(x, y)) {
            // x ∈ A_i below an older y: need z ∈ A_s(i) with x < z ≤ y
            const bool ok = nb.s && std::any_of(inst.antichains[*nb.s].members.begin(),
                                                inst.antichains[*nb.s].members.end(),
                                                [&](Vertex z) { return poset.less(x, z) && poset.leq(z, y); });
            if (!ok) {
              out.push_back({RegularCondition::kR5, {i + 1, j + 1}, {x, y},
                             std::to_string(x) + "<" + std::to_string(y) + " does not factor through A_s(" +
                                 std::to_string(i + 1) + ")"});
            }
          } else if (poset.less(y, x)) {
            // older y below x ∈ A_i: need z ∈ A_p(i) with y ≤ z < x
            const bool ok = nb.p && std::any_of(inst.antichains[*nb.p].members.begin(),
                                                inst.antichains[*nb.p].members.end(),
                                                [&](Vertex z) { return poset.leq(y, z) && poset.less(z, x); });
            if (!ok) {
              out.push_back({RegularCondition::kR5, {j + 1, i + 1}, {y, x},
                             std::to_string(y) + "<" + std::to_string(x) + " does not factor through A_p(" +
                                 std::to_string(i + 1) + ")"});
            }
          }
        }
      }
    }
  }
  return verdict;
}

P6P7Verdict verify_p6_p7(const RegularInstance& inst) {
  P6P7Verdict verdict;
  const Poset& poset = inst.poset;
  const std::size_t n = inst.antichains.size();
  const auto leq = dominance_matrix(inst);
  auto strictly = [&](std::size_t a, std::size_t b) { return leq[a][b] && !leq[b][a]; };

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (!strictly(r, s)) continue;
      const Antichain& lower = inst.antichains[r];
      const Antichain& upper = inst.antichains[s];
      if (auto d = core_defect(poset, lower, upper)) {
        std::vector<Vertex> witness;
        if (!d->no_perfect_matching) witness = {d->lower, d->upper};
        verdict.p6.push_back({RegularCondition::kP6, {r + 1, s + 1}, witness, core_message(*d)});
      }

      std::vector<std::size_t> between;
      for (std::size_t t = 0; t < n; ++t)
        if (leq[r][t] && leq[t][s]) between.push_back(t);
      for (std::size_t t : between) {
        bool first_to_top = true, first_to_bottom = true;
        for (std::size_t u : between) {
          if (u < t && leq[t][u]) first_to_top = false;
          if (u < t && leq[u][t]) first_to_bottom = false;
        }
        if (!first_to_top && !first_to_bottom) continue;
        const Antichain& middle = inst.antichains[t];
        for (Vertex x : lower.members) {
          for (Vertex y : upper.members) {
            if (!poset.less(x, y)) continue;
            const bool ok = std::any_of(middle.members.begin(), middle.members.end(),
                                        [&](Vertex z) { return poset.leq(x, z) && poset.leq(z, y); });
            if (ok) continue;
            RegularViolation v{RegularCondition::kP7, {r + 1, s + 1, t + 1}, {x, y},
                               "no z in A_" + std::to_string(t + 1) + " between " + std::to_string(x) + " and " +
                                   std::to_string(y)};
            if (first_to_top) verdict.earliest_to_top.push_back(v);
            if (first_to_bottom) verdict.earliest_to_bottom.push_back(v);
          }
        }
      }
    }
  }
  return verdict;
}

LadderBound ladder_bound_check(const RegularInstance& inst) {
  LadderBound out;
  out.limit = 2 * inst.w * inst.w;
  auto found = find_max_ladder(inst.poset, out.limit + 1);
  out.m = found.m;
  out.witness = std::move(found.witness);
  out.ok = out.m <= out.limit;
  return out;
}

LadderBound canonical_ladder_check(const RegularInstance& inst) {
  const auto leq = dominance_matrix(inst);
  const auto layer = inst.layer_of();
  LadderBound out;
  out.limit = inst.w;
  auto found = find_max_ladder(inst.poset, out.limit + 1, [&](Vertex y, Vertex x) {
    return layer[y] != kNoLayer && layer[x] != kNoLayer && leq[layer[y]][layer[x]];
  });
  out.m = found.m;
  out.witness = std::move(found.witness);
  out.ok = out.m <= out.limit;
  return out;
}

std::optional<LadderEmbedding> long_ladder_counterexample(const RegularInstance& inst) {
  const auto leq = dominance_matrix(inst);
  const auto layer = inst.layer_of();
  return find_ladder_violating(inst.poset, 2 * inst.w + 1, [&](Vertex y1, Vertex x) {
    return layer[y1] != kNoLayer && layer[x] != kNoLayer && leq[layer[y1]][layer[x]];
  });
}

}  // namespace chainpart
