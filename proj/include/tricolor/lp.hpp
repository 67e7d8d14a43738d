#ifndef TRICOLOR_LP_HPP
#define TRICOLOR_LP_HPP

#include <vector>

#include "tricolor/bitrow.hpp"
#include "tricolor/rat.hpp"

namespace tricolor {

// Working sets kept between warm-started calls (consecutive rounds of the
// capped-distribution construction solve near-identical games).
struct GameLpState {
  std::vector<int> rows;
  std::vector<int> cols;
};

struct MaxMinResult {
  std::vector<Rat> w;  // distribution over [0, m)
  Rat min_cover;       // exact min_x w(rows[x])
  bool feasible;       // min_cover >= target
};

// rows[x] is a subset of [0, m) with x in rows[x] (closed neighborhoods).
// Returns a distribution w with min_x w(rows[x]) >= target when one exists
// (stopping early, not necessarily at the maximin optimum); otherwise the
// exact maximin equilibrium distribution with feasible = false.
//
// Exact rational double-oracle: small subgames are solved by a dense exact
// simplex on the packing form, the full constraint set is only ever scanned.
MaxMinResult max_min_distribution(const std::vector<BitRow>& rows, const Rat& target,
                                  GameLpState* state = nullptr);

}  // namespace tricolor

#endif
