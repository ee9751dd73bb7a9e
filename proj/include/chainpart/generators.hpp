#pragma once

#include <cstddef>

#include "chainpart/ladder.hpp"
#include "chainpart/online.hpp"
#include "chainpart/poset.hpp"
#include "chainpart/regular.hpp"

namespace chainpart {

/// Id of x^k_i in R_n (1 ≤ i ≤ k ≤ n): chains X^1, X^2, ... laid out in
/// order, each bottom-up, so ids equal presentation positions.
Vertex rn_vertex(std::size_t k, std::size_t i);

/// R_n with presentation X^1 ≺ ... ≺ X^n, each chain bottom-up. Width 2 for
/// n ≥ 2; First-Fit uses n colors on it.
OnlineInstance gen_Rn(std::size_t n);

/// L_m with x_i = 2(i-1) and y_i = 2(i-1)+1.
Poset gen_ladder(std::size_t m);
LadderEmbedding ladder_rungs(std::size_t m);

enum class CoreKind { kI, kS, kT };

/// u_i ≤ v_j for a core of the given kind on two w-antichains (1-based
/// indices). Points outside the pattern of S_k / T_k are matched to their own
/// index.
bool core_relation(CoreKind kind, std::size_t w, std::size_t k, std::size_t i, std::size_t j);

/// Bipartite poset with lower u_i = i-1 and upper v_j = w+j-1. Throws
/// BadParameterError unless 1 ≤ k ≤ w.
Poset gen_core(CoreKind kind, std::size_t w, std::size_t k);

struct RegularLadder {
  RegularInstance instance;
  LadderEmbedding ladder;
};

/// Id of point p of antichain a in copy c (copy 0-based, a and p 1-based).
Vertex regular_ladder_vertex(std::size_t w, std::size_t copy, std::size_t a, std::size_t p);

/// ⌊(w+2)/2⌋ glued copies of the 2w+1 antichain regular poset, with an
/// induced ladder of w·⌊(w+2)/2⌋ rungs. Requires w ≥ 2.
RegularLadder gen_regular_with_ladder(std::size_t w);

struct QkFamily {
  Poset poset;
  GrundyColoring coloring;
};

/// Q_0 is one vertex and Q_k = P·Q_{k-1}, where P is R_{m-1} with a new
/// minimum. The coloring is the product coloring (f(p)-1)·c + g(q). With
/// target_width > 2^k, isolated vertices are added, each on a new top color.
/// Throws SizeCapError when |Q_k| would exceed size_cap.
QkFamily gen_Qk(std::size_t m, std::size_t k, std::size_t target_width = 0, std::size_t size_cap = 4096);

/// w^(2.5 lg(2w) + 2 lg m), the First-Fit bound for L_m-free width-w posets.
double ff_upper_bound(std::size_t m, std::size_t w);

/// Sum over levels i = 1..w of ff_upper_bound(2i²+1, i): the color bound of
/// the recursive reduction with First-Fit on each regular level.
double reduction_upper_bound(std::size_t w);

}  // namespace chainpart
