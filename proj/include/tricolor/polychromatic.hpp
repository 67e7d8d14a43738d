#ifndef TRICOLOR_POLYCHROMATIC_HPP
#define TRICOLOR_POLYCHROMATIC_HPP

#include "tricolor/hypergraph.hpp"

namespace tricolor {

// Polychromatic k-coloring: every edge with >= 2k-1 vertices receives all k
// colors. The caller certifies that the edges come from one pseudohalfplane
// family; existence is then guaranteed.
//
// Two backends: a greedy sweep over minimal heavy edges (fast path, always
// re-checked) and a complete backtracking search with constraint propagation
// (authoritative). Throws NoColoringFound when the search space is exhausted.
Coloring polychromatic_color(const RangeHypergraph& h, int k);

}  // namespace tricolor

#endif
