// Acceptance suite: seven exact criteria, one PASS/FAIL line each. Exit code
// is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "chainpart/dilworth.hpp"
#include "chainpart/error.hpp"
#include "chainpart/generators.hpp"
#include "chainpart/harness.hpp"
#include "chainpart/ladder.hpp"
#include "chainpart/reduction.hpp"
#include "oracles.hpp"

using namespace chainpart;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<Vertex> shuffled(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// n ≤ 9 with density spread over (0.05, 0.85).
Poset small_poset(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 9;
  const double density = 0.05 + 0.8 * std::uniform_real_distribution<double>(0, 1)(rng);
  return oracle::random_poset(rng, n, density);
}

Outcome first_fit_adversary() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    const GrundyColoring g = first_fit(gen_Rn(n));
    if (g.n_colors != n) o.fail("R_" + std::to_string(n) + " used " + std::to_string(g.n_colors) + " colors");
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i = 1; i <= k; ++i)
        if (g.color[rn_vertex(k, i)] != i) o.fail("x^" + std::to_string(k) + "_" + std::to_string(i) + " off its chain");
  }
  if (o.pass) o.detail = "n = 1..8 exact";
  return o;
}

Outcome grundy_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20201);
  std::size_t largest = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Poset p = small_poset(rng);
    const std::size_t by_presentations = chi_ff_by_presentations(p);
    const GrundyColoring best = max_grundy_coloring(p);
    if (!verify_grundy(p, best).ok()) o.fail("trial " + std::to_string(trial) + ": search returned a non-Grundy coloring");
    if (best.n_colors != by_presentations) {
      o.fail("trial " + std::to_string(trial) + ": presentations " + std::to_string(by_presentations) + " vs Grundy " +
             std::to_string(best.n_colors));
    }
    if (first_fit(grundy_to_presentation(p, best)) != best) o.fail("trial " + std::to_string(trial) + ": optimum does not round-trip");
    for (int s = 0; s < 5; ++s) {
      const GrundyColoring g = first_fit(p, shuffled(rng, p.size()));
      if (first_fit(grundy_to_presentation(p, g)) != g) o.fail("trial " + std::to_string(trial) + ": FF output does not round-trip");
    }
    largest = std::max(largest, by_presentations);
  }
  if (o.pass) o.detail = "500 posets, max chi_FF " + std::to_string(largest);
  return o;
}

Outcome dilworth_lattice() {
  Outcome o;
  std::mt19937_64 rng(20202);
  std::size_t laws = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Poset p = small_poset(rng);
    const std::string at = "trial " + std::to_string(trial) + ": ";
    const std::size_t w = width(p);
    if (w != oracle::width(p)) o.fail(at + "matching width differs from brute force");
    const ChainPartition part = dilworth_partition(p);
    if (!is_chain_partition(p, part) || part.count != w) o.fail(at + "Dilworth partition is not width(P) chains");

    const auto all = maximum_antichains(p, 1u << 12);
    std::vector<std::vector<Vertex>> listed;
    for (const Antichain& a : all) listed.push_back(a.members);
    if (listed != oracle::antichains_of_size(p, w)) o.fail(at + "maximum antichain enumeration differs");

    const AntichainLattice lat(p, w);
    for (const Antichain& a : all) {
      if (lat.meet(a, a) != a || lat.join(a, a) != a) o.fail(at + "idempotence");
      for (const Antichain& b : all) {
        const Antichain m = lat.meet(a, b), j = lat.join(a, b);
        if (!lat.is_maximum(m) || !lat.is_maximum(j)) o.fail(at + "meet/join not maximum");
        if (m != lat.meet(b, a) || j != lat.join(b, a)) o.fail(at + "commutativity");
        if (lat.join(a, m) != a || lat.meet(a, j) != a) o.fail(at + "absorption");
        if (lat.leq(a, b) != (m == a) || lat.leq(a, b) != (j == b)) o.fail(at + "order/meet/join consistency");
        if (!lat.leq(m, a) || !lat.leq(m, b) || !lat.leq(a, j) || !lat.leq(b, j)) o.fail(at + "bounds");
        for (const Antichain& c : all) {
          if (lat.meet(lat.meet(a, b), c) != lat.meet(a, lat.meet(b, c))) o.fail(at + "meet associativity");
          if (lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c))) o.fail(at + "join associativity");
          ++laws;
        }
      }
    }
  }
  if (o.pass) o.detail = "1000 posets, " + std::to_string(laws) + " antichain triples";
  return o;
}

Outcome reduction_soundness() {
  Outcome o;
  std::mt19937_64 rng(20203);
  std::size_t levels = 0, max_colors = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t w = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % 40;
    const OnlineInstance inst = random_online_instance(rng(), n, w);
    const std::string at = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) + ", w=" + std::to_string(w) + "): ";
    try {
      // check_invariants asserts width(P[X̄]) < w and the structural claims
      // after every presented vertex.
      const CompositeResult res = composite_color(inst, 0, ReductionOptions{true});
      if (!is_chain_partition(inst.poset, res.partition)) o.fail(at + "not a chain partition");
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (res.partition.chain_of[u] == res.partition.chain_of[v] && inst.poset.incomparable(u, v))
            o.fail(at + "incomparable pair shares a chain");
      for (const RegularEmission& level : res.levels) {
        ++levels;
        const RegularVerdict v = verify_regular(level.instance);
        if (!v.ok()) o.fail(at + "level " + std::to_string(level.level) + ": " + v.violations.front().message);
        if (!verify_p6_p7(level.instance).ok()) o.fail(at + "level " + std::to_string(level.level) + " fails P6/P7");
      }
      max_colors = std::max(max_colors, res.partition.count);
    } catch (const Error& e) {
      o.fail(at + e.what());
    }
  }
  if (o.pass) o.detail = "300 instances, " + std::to_string(levels) + " regular levels, max colors " + std::to_string(max_colors);
  return o;
}

Outcome ladder_bounds() {
  Outcome o;
  std::string rungs;
  for (std::size_t w = 2; w <= 5; ++w) {
    const std::string at = "w=" + std::to_string(w) + ": ";
    const RegularLadder rl = gen_regular_with_ladder(w);
    if (!verify_regular(rl.instance).ok()) o.fail(at + "not regular");
    if (width(rl.instance.poset) != w) o.fail(at + "width differs");
    const std::size_t expected = w * ((w + 2) / 2);
    if (rl.ladder.size() != expected || !is_induced_ladder(rl.instance.poset, rl.ladder)) {
      o.fail(at + "witness is not an induced L_" + std::to_string(expected));
    }
    const LadderSearchResult longest = find_max_ladder(rl.instance.poset, 2 * w * w + 1);
    if (longest.m > 2 * w * w) o.fail(at + "ladder of " + std::to_string(longest.m) + " rungs exceeds 2w^2");
    rungs += (rungs.empty() ? "" : ",") + std::to_string(rl.ladder.size()) + "/" + std::to_string(longest.m);
  }
  if (o.pass) o.detail = "witness/longest rungs for w=2..5: " + rungs;
  return o;
}

Outcome lower_bound_family() {
  Outcome o;
  std::string seen;
  for (auto [m, k] : {std::pair<std::size_t, std::size_t>{3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
    const std::string at = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + "): ";
    const QkFamily q = gen_Qk(m, k);
    std::size_t floor = 1;
    for (std::size_t i = 0; i < k; ++i) floor *= m - 1;
    if (!verify_grundy(q.poset, q.coloring).ok()) o.fail(at + "product coloring is not Grundy");
    if (q.coloring.n_colors < floor) o.fail(at + "fewer than (m-1)^k colors");
    if (width(q.poset) != (std::size_t{1} << k)) o.fail(at + "width is not 2^k");
    const std::size_t ladder = find_max_ladder(q.poset, m).m;
    if (ladder >= m) o.fail(at + "contains L_m");
    seen += (seen.empty() ? "" : " ") + std::to_string(q.coloring.n_colors) + "c/" + std::to_string(ladder) + "r";
  }
  if (o.pass) o.detail = "colors/longest ladder: " + seen;
  return o;
}

Outcome width_two_bound() {
  Outcome o;
  std::mt19937_64 rng(20207);
  std::size_t checked = 0, tightest = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Poset p = small_poset(rng);
    if (width(p) != 2) continue;
    const std::size_t m = find_max_ladder(p, 64).m + 1;
    if (m != oracle::max_ladder(p) + 1) o.fail("trial " + std::to_string(trial) + ": ladder routes disagree");
    const std::size_t chi = chi_ff_exact(p);
    if (chi > 2 * m) o.fail("trial " + std::to_string(trial) + ": chi_FF " + std::to_string(chi) + " > 2m = " + std::to_string(2 * m));
    tightest = std::max(tightest, chi * 100 / (2 * m));
    ++checked;
  }
  if (checked == 0) o.fail("no width-2 samples");
  if (o.pass) o.detail = std::to_string(checked) + " width-2 posets, max chi_FF/2m = " + std::to_string(tightest) + "%";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 first-fit adversary R_n", first_fit_adversary},
      {"2 Grundy equivalence", grundy_equivalence},
      {"3 Dilworth and antichain lattice", dilworth_lattice},
      {"4 reduction soundness", reduction_soundness},
      {"5 regular ladder bounds", ladder_bounds},
      {"6 lower-bound family Q_k", lower_bound_family},
      {"7 width-2 ladder-free bound", width_two_bound},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %s  (%.1fs)  %s\n", o.pass ? "PASS" : "FAIL", name, s, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed;
}
