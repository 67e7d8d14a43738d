#include "tricolor/convex_body.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "tricolor/errors.hpp"

namespace tricolor {

namespace {

double param_mod(double t) {
  t = std::fmod(t, 1.0);
  if (t < 0) t += 1.0;
  return t;
}

// ccw gap in parameter space, in (0, 1]
double ccw_param_gap(double a, double b) {
  double d = param_mod(b) - param_mod(a);
  if (d <= 0) d += 1.0;
  return d;
}

}  // namespace

ConvexBody ConvexBody::make_polygon(std::vector<Vec2> vertices) {
  int n = static_cast<int>(vertices.size());
  if (n < 3) throw BadInput("polygon needs at least 3 vertices");
  int pos = 0, neg = 0;
  for (int i = 0; i < n; ++i) {
    int s = orient(vertices[(i + n - 1) % n], vertices[i], vertices[(i + 1) % n]);
    if (s == 0) throw CollinearVertices("collinear or repeated vertices at index " + std::to_string(i));
    (s > 0 ? pos : neg)++;
  }
  ConvexBody body;
  if (neg == n) {
    std::reverse(vertices.begin(), vertices.end());
    body.reversed_ = true;
  } else if (pos != n) {
    throw NotConvex("vertex chain is not convex");
  }
  // reject multiply-wound chains: exterior angles of a simple convex polygon sum to 2pi
  double turn = 0.0;
  for (int i = 0; i < n; ++i) {
    Vec2 din = vertices[i] - vertices[(i + n - 1) % n];
    Vec2 dout = vertices[(i + 1) % n] - vertices[i];
    turn += ccw_delta(std::atan2(din.y, din.x), std::atan2(dout.y, dout.x));
  }
  if (turn > kTwoPi + 1.0) throw NotConvex("vertex chain winds more than once");
  body.verts_ = std::move(vertices);
  body.finish();
  return body;
}

ConvexBody ConvexBody::make_disk_approx(double radius, int n_segments) {
  if (n_segments < 8) throw TooFewSegments("disk approximation needs >= 8 segments");
  if (!(radius > 0)) throw BadInput("radius must be positive");
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(n_segments));
  for (int i = 0; i < n_segments; ++i) {
    double a = kTwoPi * static_cast<double>(i) / static_cast<double>(n_segments);
    v.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return make_polygon(std::move(v));
}

void ConvexBody::finish() {
  int n = num_vertices();
  cum_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  normal_angles_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec2 d = verts_[(i + 1) % n] - verts_[i];
    cum_[i + 1] = cum_[i] + d.norm();
    normal_angles_[i] = norm_angle(std::atan2(-d.x, d.y));
  }
  perimeter_ = cum_[static_cast<std::size_t>(n)];
}

double ConvexBody::vertex_param(int i) const {
  int n = num_vertices();
  i = ((i % n) + n) % n;
  return cum_[static_cast<std::size_t>(i)] / perimeter_;
}

ConvexBody::Location ConvexBody::locate(double t) const {
  t = param_mod(t);
  int n = num_vertices();
  double s = t * perimeter_;
  auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  int e = static_cast<int>(it - cum_.begin()) - 1;
  if (e >= n) e = n - 1;
  if (e < 0) e = 0;
  // exact vertex parameters take priority over the arithmetic inverse
  if (t == vertex_param(e)) return {e, 0.0, true};
  if (e + 1 < n && t == vertex_param(e + 1)) return {e + 1, 0.0, true};
  double len = cum_[e + 1] - cum_[e];
  double alpha = (s - cum_[e]) / len;
  if (alpha < 0.0) alpha = 0.0;
  if (alpha >= 1.0) alpha = std::nextafter(1.0, 0.0);
  return {e, alpha, false};
}

Vec2 ConvexBody::point_at(double t) const {
  Location loc = locate(t);
  int n = num_vertices();
  Vec2 a = verts_[static_cast<std::size_t>(loc.edge)];
  Vec2 b = verts_[static_cast<std::size_t>((loc.edge + 1) % n)];
  return a + (b - a) * loc.alpha;
}

GaussRange ConvexBody::gauss_range(double t) const {
  Location loc = locate(t);
  int n = num_vertices();
  if (loc.at_vertex) {
    int prev = (loc.edge + n - 1) % n;
    return {normal_angles_[static_cast<std::size_t>(prev)],
            normal_angles_[static_cast<std::size_t>(loc.edge)]};
  }
  double a = normal_angles_[static_cast<std::size_t>(loc.edge)];
  return {a, a};
}

double ConvexBody::arc_gauss_length(double t_a, double t_b) const {
  t_a = param_mod(t_a);
  t_b = param_mod(t_b);
  if (t_a == t_b) return kTwoPi;
  int n = num_vertices();
  auto in_ccw_closed = [&](double v) {
    if (t_a < t_b) return t_a <= v && v <= t_b;
    return v >= t_a || v <= t_b;
  };
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (in_ccw_closed(vertex_param(i))) {
      int prev = (i + n - 1) % n;
      total += ccw_delta(normal_angles_[static_cast<std::size_t>(prev)],
                         normal_angles_[static_cast<std::size_t>(i)]);
    }
  }
  return total;
}

SupportLine ConvexBody::supporting_line(double t) const {
  GaussRange g = gauss_range(t);
  double mid = norm_angle(g.minus + g.length() / 2.0);
  return {point_at(t), mid};
}

double ConvexBody::diameter() const {
  double best = 0.0;
  int n = num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::max(best, (verts_[i] - verts_[j]).norm());
  return best;
}

bool ConvexBody::is_parallelogram() const {
  if (num_vertices() != 4) return false;
  Vec2 e0 = verts_[1] - verts_[0];
  Vec2 e1 = verts_[2] - verts_[1];
  Vec2 e2 = verts_[3] - verts_[2];
  Vec2 e3 = verts_[0] - verts_[3];
  return cross_sign(e0, e2) == 0 && cross_sign(e1, e3) == 0;
}

Vec2 ConvexBody::centroid() const {
  double a2 = 0.0, cx = 0.0, cy = 0.0;
  int n = num_vertices();
  for (int i = 0; i < n; ++i) {
    Vec2 p = verts_[i], q = verts_[(i + 1) % n];
    double w = p.cross(q);
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

// ---------------------------------------------------------------------------
// tri-partition search
// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  double t;
  double g_lo;  // g_- at this parameter
  double g_hi;  // g_+ at this parameter
};

// Gauss length of the boundary piece from candidate a to candidate b (ccw).
double cand_arc(const Candidate& a, const Candidate& b) { return ccw_delta(a.g_lo, b.g_hi); }

}  // namespace

TriPartition tri_partition(const ConvexBody& body) {
  if (body.is_parallelogram()) throw IsParallelogram("tri-partition undefined for parallelograms");
  int n = body.num_vertices();
  std::vector<Candidate> cand;
  cand.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double tv = body.vertex_param(i);
    GaussRange gv = body.gauss_range(tv);
    cand.push_back({tv, gv.minus, gv.plus});
    double tm = (body.cumulative_edge_lengths()[i] + body.cumulative_edge_lengths()[i + 1]) /
                (2.0 * body.perimeter());
    double a = body.edge_normal_angle(i);
    cand.push_back({tm, a, a});
  }
  int C = static_cast<int>(cand.size());
  auto at = [&](int i) -> const Candidate& { return cand[static_cast<std::size_t>(i % C)]; };

  double best_slack = -1.0;
  std::array<int, 3> best{};
  for (int a = 0; a < C; ++a) {
    int c = a + 2;
    for (int b = a + 1; b <= a + C - 2; ++b) {
      double arc_ab = cand_arc(at(a), at(b));
      if (arc_ab >= kPi) break;
      if (c <= b) c = b + 1;
      auto worst = [&](int cc) {
        return std::max(cand_arc(at(b), at(cc)), cand_arc(at(cc), at(a)));
      };
      while (c + 1 <= a + C - 1 && worst(c + 1) < worst(c)) ++c;
      double slack = kPi - std::max(arc_ab, worst(c));
      if (slack > best_slack) {
        best_slack = slack;
        best = {a % C, b % C, c % C};
      }
    }
  }
  if (best_slack < 1e-9)
    throw IsParallelogram("no tri-partition with positive slack (parallelogram-like body)");

  TriPartition tp;
  for (int i = 0; i < 3; ++i) tp.t[static_cast<std::size_t>(i)] = cand[static_cast<std::size_t>(best[static_cast<std::size_t>(i)])].t;
  std::sort(tp.t.begin(), tp.t.end());

  // epsilon cap: stay inside the candidates' combinatorial class and keep the
  // three extension windows disjoint
  double cap = 1.0;
  for (int i = 0; i < 3; ++i) {
    double ti = tp.t[static_cast<std::size_t>(i)];
    auto loc = body.locate(ti);
    const auto& cum = body.cumulative_edge_lengths();
    double per = body.perimeter();
    if (loc.at_vertex) {
      int v = loc.edge;
      int pe = (v + n - 1) % n;
      double prev_len = cum[static_cast<std::size_t>(pe) + 1] - cum[static_cast<std::size_t>(pe)];
      double next_len = cum[static_cast<std::size_t>(v) + 1] - cum[static_cast<std::size_t>(v)];
      cap = std::min(cap, 0.99 * std::min(prev_len, next_len) / per);
    } else {
      double elen = cum[static_cast<std::size_t>(loc.edge) + 1] - cum[static_cast<std::size_t>(loc.edge)];
      double off = loc.alpha * elen;
      cap = std::min(cap, 0.99 * std::min(off, elen - off) / per);
    }
    double gap = ccw_param_gap(tp.t[static_cast<std::size_t>(i)], tp.t[static_cast<std::size_t>((i + 1) % 3)]);
    cap = std::min(cap, 0.49 * gap);
  }

  auto feasible = [&](double eps) {
    if (eps <= 0) return false;
    for (int i = 0; i < 3; ++i) {
      double lo = tp.t[static_cast<std::size_t>(i)] - eps;
      double hi = tp.t[static_cast<std::size_t>((i + 1) % 3)] + eps;
      if (body.arc_gauss_length(param_mod(lo), param_mod(hi)) >= kPi - 1e-9) return false;
    }
    return true;
  };
  if (!feasible(cap * 1e-6)) throw IsParallelogram("no positive-epsilon tri-partition");
  double lo = cap * 1e-6, hi = cap;
  if (feasible(hi)) {
    lo = hi;
  } else {
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
  }
  tp.epsilon = lo / 2.0;

  for (int i = 0; i < 3; ++i) {
    double ti = tp.t[static_cast<std::size_t>(i)];
    tp.tangents[static_cast<std::size_t>(i)] = body.supporting_line(ti);
    tp.tau_mm[static_cast<std::size_t>(i)] = param_mod(ti - tp.epsilon);
    tp.tau_m[static_cast<std::size_t>(i)] = param_mod(ti - tp.epsilon / 2.0);
    tp.tau_p[static_cast<std::size_t>(i)] = param_mod(ti + tp.epsilon / 2.0);
    tp.tau_pp[static_cast<std::size_t>(i)] = param_mod(ti + tp.epsilon);
  }
  double worst_arc = 0.0;
  for (int i = 0; i < 3; ++i) {
    double arc = body.arc_gauss_length(tp.tau_mm[static_cast<std::size_t>(i)],
                                       tp.tau_pp[static_cast<std::size_t>((i + 1) % 3)]);
    worst_arc = std::max(worst_arc, arc);
  }
  tp.min_slack = kPi - worst_arc;
  return tp;
}

std::array<Cone, 3> tri_partition_cones(const TriPartition& tp) {
  std::array<Cone, 3> cones;
  for (int i = 0; i < 3; ++i) {
    const SupportLine& li = tp.tangents[static_cast<std::size_t>(i)];
    const SupportLine& lj = tp.tangents[static_cast<std::size_t>((i + 1) % 3)];
    RatVec2 a(li.point), b(li.point + li.direction());
    RatVec2 c(lj.point), d(lj.point + lj.direction());
    auto apex = line_intersection(a, b, c, d);
    if (!apex) throw DegenerateCone("tangent lines are parallel");
    Vec2 ap = apex->approx();
    Vec2 to_i = li.point - ap;
    Vec2 to_j = lj.point - ap;
    if (to_i.norm() == 0.0 || to_j.norm() == 0.0)
      throw DegenerateCone("tangent point coincides with the cone apex");
    Cone k{to_j.normalized(), to_i.normalized()};  // l_{i+1} clockwise side, l_i counterclockwise
    if (!(k.ray_cw.cross(k.ray_ccw) > 0))
      throw DegenerateCone("tangent triangle corner is not a proper cone");
    cones[static_cast<std::size_t>(i)] = k;
  }
  return cones;
}

}  // namespace tricolor
