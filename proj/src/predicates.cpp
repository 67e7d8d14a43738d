#include "tricolor/predicates.hpp"

#include <cassert>

namespace tricolor {

namespace {

// Shewchuk's static filter constant for orient2d: (3 + 16 eps) eps with eps = 2^-53.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;

int orient_exact(const RatVec2& a, const RatVec2& b, const RatVec2& c) {
  Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

}  // namespace

int orient(Vec2 a, Vec2 b, Vec2 c) {
  double detleft = (a.x - c.x) * (b.y - c.y);
  double detright = (a.y - c.y) * (b.x - c.x);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0) {
    if (detright <= 0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
    detsum = detleft + detright;
  } else if (detleft < 0) {
    if (detright >= 0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
    detsum = -detleft - detright;
  } else {
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
  }
  double errbound = kCcwErrBound * detsum;
  if (det > errbound) return 1;
  if (-det > errbound) return -1;
  return orient_exact(RatVec2(a), RatVec2(b), RatVec2(c));
}

int orient_rat(Vec2 a, Vec2 b, const RatVec2& c) {
  return orient_exact(RatVec2(a), RatVec2(b), c);
}

int cross_sign(Vec2 u, Vec2 v) {
  double l = u.x * v.y;
  double r = u.y * v.x;
  double det = l - r;
  double sum = std::abs(l) + std::abs(r);
  double errbound = kCcwErrBound * sum;
  if (det > errbound) return 1;
  if (-det > errbound) return -1;
  Rat dl = rat_of(u.x) * rat_of(v.y) - rat_of(u.y) * rat_of(v.x);
  return sgn(dl);
}

namespace {

template <class Pt, class Orient>
int point_vs_convex_impl(std::span<const Vec2> poly, const Pt& p, Orient ori) {
  int n = static_cast<int>(poly.size());
  assert(n >= 3);
  // locate wedge from vertex 0
  int s0 = ori(poly[0], poly[1], p);
  int s1 = ori(poly[0], poly[n - 1], p);
  if (s0 < 0 || s1 > 0) return -1;
  // p is on ray poly[0]->poly[1] side or edge handling below
  int lo = 1, hi = n - 1;
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (ori(poly[0], poly[mid], p) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  int side = ori(poly[lo], poly[hi], p);
  if (side < 0) return -1;
  if (side > 0) {
    // interior of the wedge triangle, but boundary cases on the two fan edges:
    if (lo == 1 && s0 == 0) {
      // p on the support line of edge (v0, v1): inside iff strictly between
      return 0;
    }
    if (hi == n - 1 && s1 == 0) return 0;
    return 1;
  }
  // p on the line through (v_lo, v_hi); on the closed segment iff also inside wedge
  return 0;
}

}  // namespace

int point_vs_convex(std::span<const Vec2> poly, Vec2 p) {
  return point_vs_convex_impl(poly, p, [](Vec2 a, Vec2 b, const Vec2& q) { return orient(a, b, q); });
}

int point_vs_convex(std::span<const Vec2> poly, const RatVec2& p) {
  return point_vs_convex_impl(poly, p,
                              [](Vec2 a, Vec2 b, const RatVec2& q) { return orient_rat(a, b, q); });
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  int d1 = orient(c, d, a);
  int d2 = orient(c, d, b);
  int d3 = orient(a, b, c);
  int d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  auto on_seg = [](Vec2 p, Vec2 q, Vec2 r) {
    // r collinear with pq; on the closed segment?
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
  };
  if (d1 == 0 && on_seg(c, d, a)) return true;
  if (d2 == 0 && on_seg(c, d, b)) return true;
  if (d3 == 0 && on_seg(a, b, c)) return true;
  if (d4 == 0 && on_seg(a, b, d)) return true;
  return false;
}

std::optional<RatVec2> line_intersection(const RatVec2& a, const RatVec2& b, const RatVec2& c,
                                         const RatVec2& d) {
  RatVec2 r = b - a;
  RatVec2 s = d - c;
  Rat denom = r.cross(s);
  if (denom == 0) return std::nullopt;
  Rat t = (c - a).cross(s) / denom;
  return RatVec2{a.x + t * r.x, a.y + t * r.y};
}

bool segments_overlap_collinear(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (orient(a, b, c) != 0 || orient(a, b, d) != 0) return false;
  // project on the dominant axis
  auto lo = [](double u, double v) { return u < v ? u : v; };
  auto hi = [](double u, double v) { return u > v ? u : v; };
  if (std::abs(b.x - a.x) >= std::abs(b.y - a.y)) {
    double l = std::max(lo(a.x, b.x), lo(c.x, d.x));
    double h = std::min(hi(a.x, b.x), hi(c.x, d.x));
    return l < h;
  }
  double l = std::max(lo(a.y, b.y), lo(c.y, d.y));
  double h = std::min(hi(a.y, b.y), hi(c.y, d.y));
  return l < h;
}

}  // namespace tricolor
