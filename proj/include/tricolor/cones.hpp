#ifndef TRICOLOR_CONES_HPP
#define TRICOLOR_CONES_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "tricolor/bitrow.hpp"
#include "tricolor/convex_body.hpp"
#include "tricolor/vec.hpp"

namespace tricolor {

// Closed-cone membership: p in apex + K. Boundary rays count as inside.
bool cone_contains(const Cone& cone, Vec2 apex, Vec2 p);

// Arcs (q, p) with q in p + K ("p is bigger than q"). Transitive by the cone
// containment observation.
std::vector<std::pair<int, int>> quasi_order_arcs(std::span<const Vec2> points, const Cone& cone);

// Complete multidigraph whose arcs are the union of k transitive arc classes.
class QuasiOrderMultiDigraph {
 public:
  QuasiOrderMultiDigraph(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  void add_arc(int cls, int u, int v);  // arc u -> v
  bool has_arc(int cls, int u, int v) const { return out_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(u)].test(v); }

  // closed neighborhoods (vertex included)
  const BitRow& closed_in(int cls, int x) const { return in_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(x)]; }
  const BitRow& closed_out(int cls, int x) const { return out_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(x)]; }
  // union over all classes
  const BitRow& closed_in_all(int x) const { return in_all_[static_cast<std::size_t>(x)]; }

  // at least one arc between every distinct pair, in some class and direction
  bool is_complete(std::pair<int, int>* missing = nullptr) const;
  // every class transitive
  bool is_transitive(int* bad_class = nullptr) const;

  bool certified_complete = false;

 private:
  int n_, k_;
  // in_[c][x] = {x} + sources of arcs into x; out_[c][x] = {x} + targets
  std::vector<std::vector<BitRow>> in_, out_;
  std::vector<BitRow> in_all_;
};

// Quasi orders from a set of tri-partition cones; throws NotComplete when the
// cones do not cover all directions for some point pair.
QuasiOrderMultiDigraph build_multidigraph(std::span<const Vec2> points, const std::array<Cone, 3>& cones);

QuasiOrderMultiDigraph digraph_from_arc_lists(int n, const std::vector<std::vector<std::pair<int, int>>>& arcs);

}  // namespace tricolor

#endif
