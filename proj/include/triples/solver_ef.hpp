#pragma once

#include "triples/game.hpp"
#include "triples/structure.hpp"

namespace triples {

// Existence condition for an envy-free partition under max degree 2:
// 2q + r <= p over the component census.
bool ef_exists(const ComponentDecomposition& decomp);

struct EfSolveStats {
    long long steps = 0;
};

// Constructive solver for binary symmetric games of maximum degree 2.
// Components of size 3k become consecutive triples. A component of size
// 3k-1 keeps k-1 consecutive triples and joins its final adjacent pair with
// one isolated agent. A component of size 3k-2 (k > 1) keeps k-2 consecutive
// triples and joins each of its two final adjacent pairs with one isolated
// agent. Isolated agents are consumed ascending, the leftovers grouped
// ascending. none_exists carries "Lemma-1 condition violated".
SolveOutcome solve_ef_maxdeg2(const Ashg& game, EfSolveStats* stats = nullptr);

}  // namespace triples
