#include "chainpart/ladder.hpp"

#include <algorithm>
#include <cstdint>

#include "chainpart/error.hpp"

namespace chainpart {
namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

// Candidate upper legs for a fixed y_1: y_1 and everything above it, in a
// linear-extension order so predecessors are finished first.
std::vector<Vertex> upper_legs(const Poset& poset, const std::vector<Vertex>& order, Vertex y1) {
  std::vector<Vertex> out;
  for (Vertex v : order)
    if (v == y1 || poset.less(y1, v)) out.push_back(v);
  return out;
}

}  // namespace

bool is_induced_ladder(const Poset& poset, const LadderEmbedding& ladder) {
  const auto& r = ladder.rungs;
  for (const auto& [x, y] : r)
    if (x >= poset.size() || y >= poset.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!poset.less(r[i].first, r[i].second)) return false;
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const auto [xi, yi] = r[i];
      const auto [xj, yj] = r[j];
      if (!poset.less(xi, xj) || !poset.less(yi, yj) || !poset.less(xi, yj)) return false;
      if (!poset.incomparable(yi, xj)) return false;
    }
  }
  return true;
}

LadderSearchResult find_max_ladder(const Poset& poset, std::size_t cap, const RungFilter& filter) {
  LadderSearchResult best;
  const std::size_t n = poset.size();
  if (cap == 0 || n == 0) return best;

  const std::vector<Vertex> order = poset.linear_extension();
  std::vector<int> f(n * n), g(n * n);
  std::vector<Vertex> g_arg(n * n), parent_x(n * n), parent_y(n * n);

  for (Vertex y1 = 0; y1 < n; ++y1) {
    if (poset.below(y1).none()) continue;
    Bitset allowed_x = poset.above(y1);
    allowed_x.flip();
    allowed_x.reset(y1);
    const std::vector<Vertex> ys = upper_legs(poset, order, y1);
    const Bitset y_set = to_bitset(n, ys);
    std::fill(f.begin(), f.end(), -1);
    std::fill(g.begin(), g.end(), -1);

    for (Vertex y : ys) {
      const Bitset lowers = poset.below(y) & allowed_x;
      std::vector<Vertex> defined;
      for (auto x = lowers.find_first(); x != Bitset::npos; x = lowers.find_next(x)) {
        int value = -1;
        Vertex py = kNone;
        if (y == y1) {
          value = 1;
        } else {
          const Bitset prev = poset.below(y) & y_set & poset.incomparable_to(x);
          for (auto yp = prev.find_first(); yp != Bitset::npos; yp = prev.find_next(yp)) {
            const int cand = g[x * n + yp];
            if (cand + 1 > value && cand >= 1 && (!filter || filter(yp, x))) {
              value = cand + 1;
              py = yp;
            }
          }
        }
        if (value < 0) continue;
        f[x * n + y] = value;
        parent_y[x * n + y] = py;
        parent_x[x * n + y] = py == kNone ? kNone : g_arg[x * n + py];
        defined.push_back(x);

        if (static_cast<std::size_t>(value) > best.m) {
          best.m = static_cast<std::size_t>(value);
          best.witness.rungs.clear();
          for (Vertex cx = x, cy = y; cx != kNone;) {
            best.witness.rungs.emplace_back(cx, cy);
            const Vertex nx = parent_x[cx * n + cy];
            const Vertex ny = parent_y[cx * n + cy];
            cx = nx;
            cy = ny;
          }
          std::reverse(best.witness.rungs.begin(), best.witness.rungs.end());
          if (best.m >= cap) return best;
        }
      }
      // g[x][y] = max over x' < x of f[x'][y], for x usable after rung (x', y).
      const Bitset later_x = allowed_x & poset.incomparable_to(y);
      for (Vertex xp : defined) {
        const int value = f[xp * n + y];
        const Bitset targets = poset.above(xp) & later_x;
        for (auto x = targets.find_first(); x != Bitset::npos; x = targets.find_next(x)) {
          if (value > g[x * n + y]) {
            g[x * n + y] = value;
            g_arg[x * n + y] = xp;
          }
        }
      }
    }
  }
  return best;
}

std::optional<LadderEmbedding> find_ladder_violating(const Poset& poset, std::size_t rungs,
                                                     const std::function<bool(Vertex, Vertex)>& endpoint_ok) {
  if (rungs == 0 || rungs > 63) throw BadParameterError("ladder length must be in 1..63");
  const std::size_t n = poset.size();
  const std::uint64_t limit = (std::uint64_t{1} << rungs) - 1;
  const std::uint64_t target = std::uint64_t{1} << (rungs - 1);
  const std::vector<Vertex> order = poset.linear_extension();
  // bit k-1 of f[x][y]: some ladder with k rungs ends with rung (x, y)
  std::vector<std::uint64_t> f(n * n), g(n * n);

  for (Vertex y1 = 0; y1 < n; ++y1) {
    if (poset.below(y1).none()) continue;
    Bitset allowed_x = poset.above(y1);
    allowed_x.flip();
    allowed_x.reset(y1);
    const std::vector<Vertex> ys = upper_legs(poset, order, y1);
    const Bitset y_set = to_bitset(n, ys);
    std::fill(f.begin(), f.end(), 0);
    std::fill(g.begin(), g.end(), 0);

    auto rebuild = [&](Vertex x, Vertex y) {
      LadderEmbedding ladder;
      ladder.rungs.emplace_back(x, y);
      for (std::size_t k = rungs; k > 1; --k) {
        const std::uint64_t bit = std::uint64_t{1} << (k - 2);
        const Bitset prev_y = poset.below(y) & y_set & poset.incomparable_to(x);
        const Bitset prev_x = poset.below(x) & allowed_x;
        bool found = false;
        for (auto yp = prev_y.find_first(); yp != Bitset::npos && !found; yp = prev_y.find_next(yp)) {
          for (auto xp = prev_x.find_first(); xp != Bitset::npos; xp = prev_x.find_next(xp)) {
            if (f[xp * n + yp] & bit) {
              x = xp;
              y = yp;
              found = true;
              break;
            }
          }
        }
        if (!found) throw InvariantViolation("ladder reconstruction lost its predecessor");
        ladder.rungs.emplace_back(x, y);
      }
      std::reverse(ladder.rungs.begin(), ladder.rungs.end());
      return ladder;
    };

    for (Vertex y : ys) {
      const Bitset lowers = poset.below(y) & allowed_x;
      std::vector<Vertex> defined;
      for (auto x = lowers.find_first(); x != Bitset::npos; x = lowers.find_next(x)) {
        std::uint64_t mask = 0;
        if (y == y1) {
          mask = 1;
        } else {
          const Bitset prev = poset.below(y) & y_set & poset.incomparable_to(x);
          for (auto yp = prev.find_first(); yp != Bitset::npos; yp = prev.find_next(yp)) mask |= g[x * n + yp];
          mask = (mask << 1) & limit;
        }
        if (mask == 0) continue;
        f[x * n + y] = mask;
        defined.push_back(x);
        if ((mask & target) && !endpoint_ok(y1, x)) return rebuild(x, y);
      }
      const Bitset later_x = allowed_x & poset.incomparable_to(y);
      for (Vertex xp : defined) {
        const std::uint64_t mask = f[xp * n + y];
        const Bitset targets = poset.above(xp) & later_x;
        for (auto x = targets.find_first(); x != Bitset::npos; x = targets.find_next(x)) g[x * n + y] |= mask;
      }
    }
  }
  return std::nullopt;
}

}  // namespace chainpart
