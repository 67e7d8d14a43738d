#include "tricolor/hypergraph.hpp"

#include "tricolor/errors.hpp"

namespace tricolor {

Coloring union_combine(const Coloring& c1, const Coloring& c2) {
  if (c1.colors.size() != c2.colors.size()) throw BadInput("colorings differ in length");
  Coloring out;
  out.colors.resize(c1.colors.size());
  for (std::size_t v = 0; v < c1.colors.size(); ++v) {
    int a = c1.colors[v], b = c2.colors[v];
    int c = 1;
    while (c == a || c == b) ++c;
    out.colors[v] = c;
  }
  return out;
}

std::vector<int> check_polychromatic(const RangeHypergraph& h, const Coloring& c, int k,
                                     int heaviness) {
  std::vector<int> bad;
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& pts = h.edges[e].pts;
    if (static_cast<int>(pts.size()) < heaviness) continue;
    std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    for (int p : pts) seen[static_cast<std::size_t>(c.colors[static_cast<std::size_t>(p)])] = 1;
    for (int col = 1; col <= k; ++col)
      if (!seen[static_cast<std::size_t>(col)]) {
        bad.push_back(static_cast<int>(e));
        break;
      }
  }
  return bad;
}

std::vector<int> check_proper(const RangeHypergraph& h, const Coloring& c, int heaviness) {
  std::vector<int> bad;
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& pts = h.edges[e].pts;
    if (static_cast<int>(pts.size()) < heaviness || pts.empty()) continue;
    int first = c.colors[static_cast<std::size_t>(pts[0])];
    bool mono = true;
    for (int p : pts)
      if (c.colors[static_cast<std::size_t>(p)] != first) {
        mono = false;
        break;
      }
    if (mono) bad.push_back(static_cast<int>(e));
  }
  return bad;
}

}  // namespace tricolor
