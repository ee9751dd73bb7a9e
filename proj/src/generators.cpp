#include "chainpart/generators.hpp"

#include <cmath>
#include <string>

#include "chainpart/error.hpp"

namespace chainpart {

Vertex rn_vertex(std::size_t k, std::size_t i) { return (k - 1) * k / 2 + (k - i); }

OnlineInstance gen_Rn(std::size_t n) {
  if (n < 1) throw BadParameterError("R_n needs n ≥ 1");
  const std::size_t size = n * (n + 1) / 2;
  std::vector<Relation> rel;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = k; i >= 2; --i) rel.emplace_back(rn_vertex(k, i), rn_vertex(k, i - 1));
    if (k < 2) continue;
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = i; j <= k - 1; ++j) rel.emplace_back(rn_vertex(k - 1, j), rn_vertex(k, i));
      if (k >= 3) rel.emplace_back(rn_vertex(k - 2, 1), rn_vertex(k, i));  // top of X^{k-2}
    }
  }
  OnlineInstance inst{Poset::from_relations(size, rel), {}, n >= 2 ? 2u : 1u};
  inst.presentation.resize(size);
  for (Vertex v = 0; v < size; ++v) inst.presentation[v] = v;
  return inst;
}

Poset gen_ladder(std::size_t m) {
  if (m < 1) throw BadParameterError("a ladder needs m ≥ 1");
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < m; ++i) {
    rel.emplace_back(2 * i, 2 * i + 1);
    if (i + 1 < m) {
      rel.emplace_back(2 * i, 2 * i + 2);
      rel.emplace_back(2 * i + 1, 2 * i + 3);
    }
  }
  return Poset::from_relations(2 * m, rel);
}

LadderEmbedding ladder_rungs(std::size_t m) {
  LadderEmbedding l;
  for (std::size_t i = 0; i < m; ++i) l.rungs.emplace_back(2 * i, 2 * i + 1);
  return l;
}

bool core_relation(CoreKind kind, std::size_t w, std::size_t k, std::size_t i, std::size_t j) {
  if (i == j) return true;
  switch (kind) {
    case CoreKind::kI:
      return false;
    case CoreKind::kS:
      return (i == 1 && j <= k) || (i >= 2 && i <= k && j + 1 == i);
    case CoreKind::kT:
      return (j == w && i + k >= w + 1) || (i + k >= w + 2 && j + 1 == i);
  }
  return false;
}

Poset gen_core(CoreKind kind, std::size_t w, std::size_t k) {
  if (w < 1 || k < 1 || k > w) {
    throw BadParameterError("core parameter k = " + std::to_string(k) + " outside 1.." + std::to_string(w));
  }
  std::vector<Relation> rel;
  for (std::size_t i = 1; i <= w; ++i)
    for (std::size_t j = 1; j <= w; ++j)
      if (core_relation(kind, w, k, i, j)) rel.emplace_back(i - 1, w + j - 1);
  return Poset::from_relations(2 * w, rel);
}

Vertex regular_ladder_vertex(std::size_t w, std::size_t copy, std::size_t a, std::size_t p) {
  return copy * (2 * w + 1) * w + (a - 1) * w + (p - 1);
}

RegularLadder gen_regular_with_ladder(std::size_t w) {
  if (w < 2) throw BadParameterError("the long-ladder construction needs w ≥ 2");
  const std::size_t h = (w + 2) / 2;
  const std::size_t layers = 2 * w + 1;
  std::vector<Relation> rel;

  for (std::size_t c = 0; c < h; ++c) {
    auto link = [&](std::size_t lower, std::size_t upper, CoreKind kind, std::size_t k) {
      for (std::size_t i = 1; i <= w; ++i)
        for (std::size_t j = 1; j <= w; ++j)
          if (core_relation(kind, w, k, i, j))
            rel.emplace_back(regular_ladder_vertex(w, c, lower, i), regular_ladder_vertex(w, c, upper, j));
    };
    link(2, 1, CoreKind::kS, w);
    for (std::size_t a = 3; a <= w + 1; ++a) {
      link(a, 1, CoreKind::kS, w - a + 2);
      link(a - 1, a, CoreKind::kI, 1);
    }
    link(1, w + 2, CoreKind::kT, w);
    for (std::size_t a = w + 3; a <= 2 * w + 1; ++a) {
      link(a, a - 1, CoreKind::kI, 1);
      link(1, a, CoreKind::kT, 2 * w - a + 2);
    }
    // top of this copy below the bottom of the next, pointwise
    if (c + 1 < h) {
      for (std::size_t i = 1; i <= w; ++i)
        rel.emplace_back(regular_ladder_vertex(w, c, w + 2, i), regular_ladder_vertex(w, c + 1, 2, i));
    }
  }

  RegularLadder out;
  out.instance.poset = Poset::from_relations(h * layers * w, rel);
  out.instance.w = w;
  for (std::size_t c = 0; c < h; ++c) {
    for (std::size_t a = 1; a <= layers; ++a) {
      std::vector<Vertex> members;
      for (std::size_t p = 1; p <= w; ++p) members.push_back(regular_ladder_vertex(w, c, a, p));
      out.instance.antichains.emplace_back(std::move(members));
    }
    for (std::size_t i = 1; i <= w; ++i) {
      out.ladder.rungs.emplace_back(regular_ladder_vertex(w, c, i + 1, 1),
                                    regular_ladder_vertex(w, c, 2 * w + 2 - i, w));
    }
  }
  return out;
}

QkFamily gen_Qk(std::size_t m, std::size_t k, std::size_t target_width, std::size_t size_cap) {
  if (m < 2) throw BadParameterError("Q_k needs m ≥ 2");
  const std::size_t base = 1 + (m - 1) * m / 2;
  double projected = std::pow(static_cast<double>(base), static_cast<double>(k));
  if (target_width > 0) projected += static_cast<double>(target_width);
  if (projected > static_cast<double>(size_cap)) {
    throw SizeCapError("Q_" + std::to_string(k) + " for m = " + std::to_string(m) + " exceeds the size cap " +
                       std::to_string(size_cap));
  }

  // P = R_{m-1} plus a minimum 0̂, colored by First-Fit with 0̂ presented last.
  const OnlineInstance r = gen_Rn(m - 1);
  const std::size_t nr = r.poset.size();
  std::vector<Relation> rel = r.poset.covers();
  for (Vertex v = 0; v < nr; ++v) rel.emplace_back(nr, v);
  const Poset p = Poset::from_relations(nr + 1, rel);
  std::vector<Vertex> order = r.presentation;
  order.push_back(nr);
  const GrundyColoring f = first_fit(p, order);

  QkFamily q{Poset(1), GrundyColoring{{1}, 1}};
  for (std::size_t level = 0; level < k; ++level) {
    const std::size_t nq = q.poset.size();
    Poset next = lex_product(p, q.poset);
    GrundyColoring h;
    h.color.resize(next.size());
    for (Vertex a = 0; a < p.size(); ++a)
      for (Vertex b = 0; b < nq; ++b) h.color[a * nq + b] = (f.color[a] - 1) * q.coloring.n_colors + q.coloring.color[b];
    h.n_colors = f.n_colors * q.coloring.n_colors;
    q = {std::move(next), std::move(h)};
  }

  const std::size_t w = std::size_t{1} << k;
  if (target_width > w) {
    const std::size_t extra = target_width - w;
    std::vector<Bitset> rows(q.poset.size() + extra, Bitset(q.poset.size() + extra));
    for (Vertex v = 0; v < q.poset.size(); ++v) {
      rows[v] = q.poset.above(v);
      rows[v].resize(q.poset.size() + extra);
    }
    q.poset = Poset::from_upsets(std::move(rows), false);
    for (std::size_t e = 0; e < extra; ++e) q.coloring.color.push_back(++q.coloring.n_colors);
  }
  return q;
}

double ff_upper_bound(std::size_t m, std::size_t w) {
  const double wd = static_cast<double>(w);
  return std::pow(wd, 2.5 * std::log2(2.0 * wd) + 2.0 * std::log2(static_cast<double>(m)));
}

double reduction_upper_bound(std::size_t w) {
  double total = 0;
  for (std::size_t i = 1; i <= w; ++i) total += ff_upper_bound(2 * i * i + 1, i);
  return total;
}

}  // namespace chainpart
