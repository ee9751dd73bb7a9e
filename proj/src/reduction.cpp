#include "chainpart/reduction.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "chainpart/dilworth.hpp"
#include "chainpart/error.hpp"
#include "chainpart/matching.hpp"

namespace chainpart {

std::optional<std::vector<Bitset>> core_dilworth_edges(const Poset& order, std::span<const Vertex> lower,
                                                       std::span<const Vertex> upper) {
  BipartiteGraph g(lower.size(), upper.size());
  for (std::size_t a = 0; a < lower.size(); ++a)
    for (std::size_t b = 0; b < upper.size(); ++b)
      if (order.less(lower[a], upper[b])) g.add_edge(a, b);
  return perfect_matching_edges(g);
}

RExtension extend_r_relation(const Poset& u, const Poset& r, std::span<const Vertex> block,
                             std::span<const Vertex> lower, std::span<const Vertex> upper) {
  RExtension ext{std::vector<Bitset>(block.size(), Bitset(u.size())), std::vector<Bitset>(block.size(), Bitset(u.size()))};
  if (!upper.empty()) {
    const auto edges = core_dilworth_edges(u, block, upper);
    if (!edges) throw InvariantViolation("≤_U core towards B_s(i) has no perfect matching");
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (auto b = (*edges)[a].find_first(); b != Bitset::npos; b = (*edges)[a].find_next(b)) {
        ext.up[a].set(upper[b]);
        ext.up[a] |= r.above(upper[b]);
      }
    }
  }
  if (!lower.empty()) {
    const auto edges = core_dilworth_edges(u, lower, block);
    if (!edges) throw InvariantViolation("≤_U core from B_p(i) has no perfect matching");
    for (std::size_t a = 0; a < lower.size(); ++a) {
      for (auto b = (*edges)[a].find_first(); b != Bitset::npos; b = (*edges)[a].find_next(b)) {
        ext.down[b].set(lower[a]);
        ext.down[b] |= r.below(lower[a]);
      }
    }
  }
  return ext;
}

ReductionState::ReductionState(std::size_t w, ReductionOptions options) : w_(w), options_(options) {
  if (w < 1) throw BadParameterError("reduction needs w ≥ 1");
}

std::vector<std::size_t> ReductionState::block(std::size_t i) const {
  if (i < 1 || i > antichains_.size()) throw BadParameterError("block index out of range");
  std::vector<std::size_t> out(w_);
  for (std::size_t k = 0; k < w_; ++k) out[k] = (i - 1) * w_ + k;
  return out;
}

void ReductionState::grow(std::size_t extra) {
  const std::size_t n = points_.size() + extra;
  for (auto* rows : {&u_up_, &r_up_, &r_down_}) {
    for (Bitset& row : *rows) row.resize(n);
    rows->resize(n, Bitset(n));
  }
  for (Bitset& c : ff_classes_) c.resize(n);
}

void ReductionState::add_block(const Poset& prefix, const Antichain& a) {
  const std::size_t i = antichains_.size();
  const AntichainLattice lattice(prefix, w_);
  for (std::size_t j = 0; j < i; ++j) sq_[j].push_back(lattice.leq(antichains_[j], a));
  sq_.emplace_back(i + 1, false);
  for (std::size_t j = 0; j < i; ++j) sq_[i][j] = lattice.leq(a, antichains_[j]);
  sq_[i][i] = true;
  antichains_.push_back(a);

  std::optional<std::size_t> p, s;
  for (std::size_t j = 0; j < i; ++j) {
    if (sq_[j][i] && !sq_[i][j] && (!p || sq_[*p][j])) p = j;
    if (sq_[i][j] && !sq_[j][i] && (!s || sq_[j][*s])) s = j;
  }
  neighbors_.push_back({p ? std::optional(*p + 1) : std::nullopt, s ? std::optional(*s + 1) : std::nullopt});

  std::vector<Vertex> members = a.members;
  std::sort(members.begin(), members.end(), [&](Vertex l, Vertex r) { return keys_[l] < keys_[r]; });
  const std::size_t base = points_.size();
  grow(w_);
  for (Vertex v : members) points_.push_back({v, i + 1});

  for (std::size_t q = base; q < base + w_; ++q) {
    const Vertex u = points_[q].vertex;
    for (std::size_t r = 0; r < base; ++r) {
      const Vertex v = points_[r].vertex;
      const std::size_t j = points_[r].block - 1;
      if (prefix.leq(u, v) && sq_[i][j]) u_up_[q].set(r);
      if (prefix.leq(v, u) && sq_[j][i]) u_up_[r].set(q);
    }
  }

  // rules (ii)-(iv): Dilworth edges to B_s(i) and from B_p(i), closed through those blocks only
  {
    const std::vector<Vertex> mid = block(i + 1);
    const std::vector<Vertex> lower = p ? block(*p + 1) : std::vector<Vertex>{};
    const std::vector<Vertex> upper = s ? block(*s + 1) : std::vector<Vertex>{};
    RExtension ext = extend_r_relation(u_poset(), r_poset(), mid, lower, upper);
    for (std::size_t k = 0; k < w_; ++k) {
      r_up_[base + k] = std::move(ext.up[k]);
      r_down_[base + k] = std::move(ext.down[k]);
    }
  }
  for (std::size_t q = base; q < base + w_; ++q) {
    for (auto r = r_up_[q].find_first(); r != Bitset::npos; r = r_up_[q].find_next(r)) r_down_[r].set(q);
    for (auto r = r_down_[q].find_first(); r != Bitset::npos; r = r_down_[q].find_next(r)) r_up_[r].set(q);
  }

  point_color_.resize(points_.size(), 0);
  for (std::size_t q = base; q < base + w_; ++q) {
    Bitset comparable = r_up_[q] | r_down_[q];
    comparable.set(q);
    std::size_t c = 0;
    while (c < ff_classes_.size() && !ff_classes_[c].is_subset_of(comparable)) ++c;
    if (c == ff_classes_.size()) ff_classes_.emplace_back(points_.size());
    ff_classes_[c].set(q);
    point_color_[q] = c + 1;
  }
}

RoutingDecision ReductionState::process_vertex(Vertex x, const Poset& prefix, std::size_t key) {
  if (prefix.size() != keys_.size() + 1 || x + 1 != prefix.size()) {
    throw BadParameterError("process_vertex expects the newest vertex of a prefix grown by one");
  }
  const std::size_t pw = width(prefix);
  if (pw > w_) {
    throw WidthExceededError("prefix width " + std::to_string(pw) + " exceeds w = " + std::to_string(w_));
  }
  keys_.push_back(key);

  std::vector<Vertex> candidate = xbar_;
  candidate.push_back(x);
  if (width(prefix.induced(candidate)) < w_) {
    xbar_.push_back(x);
    if (options_.check_invariants) check_invariants(prefix);
    return {Route::kXbar, 0, 0};
  }

  // A_x: x plus a maximum antichain of X̄ ∩ I(x)
  const Bitset inc = prefix.incomparable_to(x);
  std::vector<Vertex> pool;
  for (Vertex v : xbar_)
    if (inc.test(v)) pool.push_back(v);
  std::vector<Vertex> ax_members{x};
  for (Vertex k : maximum_antichain(prefix.induced(pool)).members) ax_members.push_back(pool[k]);
  const Antichain ax(std::move(ax_members));
  if (ax.size() != w_) {
    throw InvariantViolation("A_x has " + std::to_string(ax.size()) + " points, expected " + std::to_string(w_));
  }

  std::optional<std::size_t> d, u;
  for (std::size_t j = 0; j < antichains_.size(); ++j) {
    const auto& m = antichains_[j].members;
    if (std::any_of(m.begin(), m.end(), [&](Vertex a) { return prefix.less(a, x); }) && (!d || sq_[*d][j])) d = j;
    if (std::any_of(m.begin(), m.end(), [&](Vertex a) { return prefix.less(x, a); }) && (!u || sq_[j][*u])) u = j;
  }
  const AntichainLattice lattice(prefix, w_);
  StepTrace t{ax, d ? antichains_[*d] : ax, u ? antichains_[*u] : ax, {}};
  // Without an A_d the join is taken with the lattice bottom: A_x ∨ (A_u ∧ A_x)
  // would collapse to A_x, which need not lie ⊑-below A_u.
  const Antichain low = lattice.meet(t.a_u, ax);
  t.a_i = d ? lattice.join(t.a_d, low) : low;
  trace_ = t;
  triggers_.push_back(x);
  add_block(prefix, t.a_i);

  const std::size_t i = antichains_.size();
  std::size_t color = 0;
  for (std::size_t q : block(i))
    if (points_[q].vertex == x) color = point_color_[q];
  if (options_.check_invariants) check_invariants(prefix);
  if (color == 0) throw InvariantViolation("x_" + std::to_string(i) + " is not in A_" + std::to_string(i));
  return {Route::kRegular, i, color};
}

Poset ReductionState::u_poset() const { return Poset::from_upsets(u_up_, false); }

Poset ReductionState::r_poset() const { return Poset::from_upsets(r_up_, false); }

RegularInstance ReductionState::regular_instance() const {
  RegularInstance inst{r_poset(), {}, w_};
  for (std::size_t i = 1; i <= antichains_.size(); ++i) inst.antichains.emplace_back(block(i));
  return inst;
}

void ReductionState::check_invariants(const Poset& prefix) const {
  auto fail = [](const std::string& what) { throw InvariantViolation(what); };

  if (!xbar_.empty() && width(prefix.induced(xbar_)) >= w_) fail("width of X̄ reached w");

  const std::size_t n = antichains_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Antichain& a = antichains_[i];
    const std::string name = "A_" + std::to_string(i + 1);
    if (a.size() != w_ || !prefix.is_antichain(a.members)) fail(name + " is not a maximum antichain");
    if (!a.contains(triggers_[i])) fail(name + " misses its trigger vertex");
    for (std::size_t j = 0; j < i; ++j) {
      if (antichains_[j] == a) fail(name + " repeats A_" + std::to_string(j + 1));
      if (!sq_[i][j] && !sq_[j][i]) fail(name + " and A_" + std::to_string(j + 1) + " are ⊑-incomparable");
    }
  }

  Poset u, r;
  try {
    u = Poset::from_upsets(u_up_, true);
  } catch (const CycleError& e) {
    fail(std::string("≤_U is not a partial order: ") + e.what());
  }
  try {
    r = Poset::from_upsets(r_up_, true);
  } catch (const CycleError& e) {
    fail(std::string("≤_R is not transitively closed: ") + e.what());
  }
  if (n > 0 && width(u) != w_) fail("(U, ≤_U) has width " + std::to_string(width(u)));
  for (std::size_t q = 0; q < points_.size(); ++q) {
    if (!r_up_[q].is_subset_of(u_up_[q])) fail("≤_R is not contained in ≤_U at point " + std::to_string(q));
    if (r.below(q) != r_down_[q]) fail("≤_R down-set out of sync at point " + std::to_string(q));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Antichain bi(block(i));
    if (!u.is_antichain(bi.members)) fail("B_" + std::to_string(i) + " is not an antichain of U");
    const Neighbors& nb = neighbors_[i - 1];
    if (nb.s && !is_core(r, bi, Antichain(block(*nb.s))))
      fail("(B_" + std::to_string(i) + ", B_s) is not a core under ≤_R");
    if (nb.p && !is_core(r, Antichain(block(*nb.p)), bi))
      fail("(B_p, B_" + std::to_string(i) + ") is not a core under ≤_R");
  }
}

CompositeColorer::CompositeColorer(std::size_t color_cap, ReductionOptions options)
    : cap_(color_cap), options_(options) {
  if (color_cap < 1) throw BadParameterError("color cap must be positive");
}

void CompositeColorer::start(std::size_t width_bound) {
  w_ = width_bound;
  state_.reset();
  child_.reset();
  ff_classes_.clear();
  if (w_ >= 2) {
    state_ = std::make_unique<ReductionState>(w_, options_);
    child_ = std::make_unique<CompositeColorer>(cap_, options_);
    child_->start(w_ - 1);
  }
}

std::size_t CompositeColorer::next(const Poset& prefix) { return next(prefix, prefix.size() - 1); }

std::size_t CompositeColorer::local_first_fit(const Poset& prefix) {
  const Vertex x = prefix.size() - 1;
  for (Bitset& c : ff_classes_) c.resize(prefix.size());
  const Bitset comparable = prefix.comparable_to(x);
  std::size_t c = 0;
  while (c < ff_classes_.size() && !ff_classes_[c].is_subset_of(comparable)) ++c;
  if (c == ff_classes_.size()) ff_classes_.emplace_back(prefix.size());
  ff_classes_[c].set(x);
  return c + 1;
}

std::size_t CompositeColorer::next(const Poset& prefix, std::size_t key) {
  if (w_ == 0) throw WidthExceededError("no vertex fits width bound 0");
  std::size_t local = 0;
  if (w_ == 1) {
    local = local_first_fit(prefix);
    if (local > 1) throw WidthExceededError("width-1 level received two incomparable vertices");
  } else {
    const Vertex x = prefix.size() - 1;
    const RoutingDecision d = state_->process_vertex(x, prefix, key);
    if (d.route == Route::kXbar) return child_->next(prefix.induced(state_->xbar()), key);
    local = d.color;
  }
  if (local > cap_) {
    throw CapExceededError("level " + std::to_string(w_) + " used local color " + std::to_string(local) +
                           " above the cap " + std::to_string(cap_));
  }
  return (w_ - 1) * cap_ + local;
}

CompositeResult composite_color(const OnlineInstance& instance, std::size_t color_cap, ReductionOptions options) {
  instance.validate();
  const Poset& poset = instance.poset;
  const std::size_t n = poset.size();
  const std::size_t w = instance.width_bound;
  CompositeResult out;
  out.color_cap = color_cap ? color_cap : std::max<std::size_t>(1, w * n);

  CompositeColorer colorer(out.color_cap, options);
  colorer.start(w);
  out.global_color.assign(n, 0);
  out.partition.chain_of.assign(n, 0);
  std::unordered_map<std::size_t, std::size_t> renumber;
  std::vector<Bitset> members;
  std::vector<Vertex> seen;
  for (Vertex v : instance.presentation) {
    seen.push_back(v);
    const std::size_t label = colorer.next(poset.induced(seen), v);
    auto [it, fresh] = renumber.try_emplace(label, renumber.size() + 1);
    if (fresh) members.emplace_back(n);
    Bitset& chain = members[it->second - 1];
    if (!chain.is_subset_of(poset.comparable_to(v))) {
      throw InvariantViolation("label " + std::to_string(label) + " would join incomparable vertices at " +
                               std::to_string(v));
    }
    chain.set(v);
    out.global_color[v] = label;
    out.partition.chain_of[v] = it->second;
  }
  out.partition.count = renumber.size();

  std::vector<Vertex> id_map = instance.presentation;
  for (const CompositeColorer* level = &colorer; level && level->state(); level = level->child()) {
    const ReductionState& st = *level->state();
    if (!st.antichains().empty()) {
      RegularEmission e{level->width_bound(), st.regular_instance(), st.points(), {}};
      for (LabeledPoint& p : e.points) p.vertex = id_map[p.vertex];
      for (Vertex t : st.triggers()) e.triggers.push_back(id_map[t]);
      out.levels.push_back(std::move(e));
    }
    std::vector<Vertex> child_map;
    for (Vertex v : st.xbar()) child_map.push_back(id_map[v]);
    id_map = std::move(child_map);
  }
  return out;
}

}  // namespace chainpart
