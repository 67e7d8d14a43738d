#ifndef TRICOLOR_HYPERGRAPH_HPP
#define TRICOLOR_HYPERGRAPH_HPP

#include <string>
#include <vector>

#include "tricolor/vec.hpp"

namespace tricolor {

struct Coloring {
  std::vector<int> colors;  // values in 1..k
  int size() const { return static_cast<int>(colors.size()); }
};

struct RangeEdge {
  std::vector<int> pts;  // sorted point indices
  Vec2 tag{};            // realizing translate / cone apex, when geometric
  long tag_id = -1;      // abstract id otherwise
};

struct RangeHypergraph {
  int n_points = 0;
  std::vector<RangeEdge> edges;
  std::string family_id;
};

// c(v) differs from c1(v) and c2(v); smallest color not excluded.
Coloring union_combine(const Coloring& c1, const Coloring& c2);

// Indices of edges of size >= heaviness missing some color in 1..k.
std::vector<int> check_polychromatic(const RangeHypergraph& h, const Coloring& c, int k,
                                     int heaviness);

// Indices of monochromatic edges of size >= heaviness.
std::vector<int> check_proper(const RangeHypergraph& h, const Coloring& c, int heaviness);

}  // namespace tricolor

#endif
