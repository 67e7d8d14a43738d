#include "tricolor/cones.hpp"

#include <string>

#include "tricolor/errors.hpp"
#include "tricolor/predicates.hpp"

namespace tricolor {

bool cone_contains(const Cone& cone, Vec2 apex, Vec2 p) {
  Vec2 q = p - apex;
  // inside the closed wedge: ccw of ray_cw and cw of ray_ccw
  return cross_sign(cone.ray_cw, q) >= 0 && cross_sign(cone.ray_ccw, q) <= 0;
}

std::vector<std::pair<int, int>> quasi_order_arcs(std::span<const Vec2> points, const Cone& cone) {
  std::vector<std::pair<int, int>> arcs;
  int n = static_cast<int>(points.size());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      if (cone_contains(cone, points[static_cast<std::size_t>(p)], points[static_cast<std::size_t>(q)]))
        arcs.emplace_back(q, p);  // q in p + K: p is bigger, edge qp
    }
  return arcs;
}

QuasiOrderMultiDigraph::QuasiOrderMultiDigraph(int n, int k) : n_(n), k_(k) {
  in_.assign(static_cast<std::size_t>(k), std::vector<BitRow>(static_cast<std::size_t>(n), BitRow(n)));
  out_ = in_;
  in_all_.assign(static_cast<std::size_t>(n), BitRow(n));
  for (int c = 0; c < k; ++c)
    for (int x = 0; x < n; ++x) {
      in_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)].set(x);
      out_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)].set(x);
    }
  for (int x = 0; x < n; ++x) in_all_[static_cast<std::size_t>(x)].set(x);
}

void QuasiOrderMultiDigraph::add_arc(int cls, int u, int v) {
  out_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(u)].set(v);
  in_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(v)].set(u);
  in_all_[static_cast<std::size_t>(v)].set(u);
}

bool QuasiOrderMultiDigraph::is_complete(std::pair<int, int>* missing) const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      bool any = in_all_[static_cast<std::size_t>(v)].test(u) || in_all_[static_cast<std::size_t>(u)].test(v);
      if (!any) {
        if (missing) *missing = {u, v};
        return false;
      }
    }
  return true;
}

bool QuasiOrderMultiDigraph::is_transitive(int* bad_class) const {
  for (int c = 0; c < k_; ++c)
    for (int u = 0; u < n_; ++u) {
      const BitRow& row = out_[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)];
      bool ok = true;
      row.for_each([&](int v) {
        if (!ok || v == u) return;
        if (!out_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)].subset_of(row)) ok = false;
      });
      if (!ok) {
        if (bad_class) *bad_class = c;
        return false;
      }
    }
  return true;
}

QuasiOrderMultiDigraph build_multidigraph(std::span<const Vec2> points,
                                          const std::array<Cone, 3>& cones) {
  int n = static_cast<int>(points.size());
  QuasiOrderMultiDigraph d(n, 3);
  for (int c = 0; c < 3; ++c)
    for (auto [q, p] : quasi_order_arcs(points, cones[static_cast<std::size_t>(c)])) d.add_arc(c, q, p);
  std::pair<int, int> missing;
  if (!d.is_complete(&missing))
    throw NotComplete("points " + std::to_string(missing.first) + " and " +
                      std::to_string(missing.second) + " are incomparable in all cone orders");
  d.certified_complete = true;
  return d;
}

QuasiOrderMultiDigraph digraph_from_arc_lists(int n,
                                              const std::vector<std::vector<std::pair<int, int>>>& arcs) {
  QuasiOrderMultiDigraph d(n, static_cast<int>(arcs.size()));
  for (int c = 0; c < d.k(); ++c)
    for (auto [u, v] : arcs[static_cast<std::size_t>(c)]) {
      if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw BadInput("arc endpoints out of range");
      d.add_arc(c, u, v);
    }
  return d;
}

}  // namespace tricolor
