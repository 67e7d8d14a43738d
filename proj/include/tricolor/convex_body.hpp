#ifndef TRICOLOR_CONVEX_BODY_HPP
#define TRICOLOR_CONVEX_BODY_HPP

#include <array>
#include <vector>

#include "tricolor/predicates.hpp"
#include "tricolor/vec.hpp"

namespace tricolor {

// [g_minus, g_plus]: the arc of unit outer normals supporting the boundary at
// one point. Degenerate (minus == plus) on edge interiors.
struct GaussRange {
  double minus = 0.0;  // clockwise last normal angle, in [0, 2pi)
  double plus = 0.0;   // counterclockwise last normal angle
  double length() const { return minus == plus ? 0.0 : ccw_delta(minus, plus); }
};

// Closed cone with apex at the origin. Interior angle, measured
// counterclockwise from ray_cw to ray_ccw, is strictly inside (0, pi).
struct Cone {
  Vec2 ray_cw;
  Vec2 ray_ccw;
  double angle() const { return ccw_delta(std::atan2(ray_cw.y, ray_cw.x), std::atan2(ray_ccw.y, ray_ccw.x)); }
  Cone reflected() const { return {-ray_cw, -ray_ccw}; }
};

struct SupportLine {
  Vec2 point;
  double normal_angle;  // outward; the body lies in the closed negative halfplane
  Vec2 normal() const { return from_angle(normal_angle); }
  Vec2 direction() const { return from_angle(normal_angle).rot90(); }
};

// Strictly convex polygon, counterclockwise, with the boundary parametrized
// by normalized arc length t in [0,1) starting at vertex 0.
class ConvexBody {
 public:
  // Validates and builds. Clockwise input is reversed (reversed() reports it);
  // collinear triples and non-convex chains are rejected.
  static ConvexBody make_polygon(std::vector<Vec2> vertices);

  // Regular n-gon inscribed in the circle of the given radius, vertex 0 at angle 0.
  static ConvexBody make_disk_approx(double radius, int n_segments);

  int num_vertices() const { return static_cast<int>(verts_.size()); }
  const std::vector<Vec2>& vertices() const { return verts_; }
  double perimeter() const { return perimeter_; }
  const std::vector<double>& cumulative_edge_lengths() const { return cum_; }
  bool reversed() const { return reversed_; }

  // parameter of vertex i; exact value reused by locate()
  double vertex_param(int i) const;
  Vec2 point_at(double t) const;
  // outward normal angle of edge (i, i+1)
  double edge_normal_angle(int i) const { return normal_angles_[static_cast<std::size_t>(i)]; }

  GaussRange gauss_range(double t) const;
  // |g(gamma_[ta,tb])|: counterclockwise from g_-(ta) to g_+(tb). ta == tb
  // means the full boundary (2pi). Wraps when ta > tb.
  double arc_gauss_length(double t_a, double t_b) const;

  SupportLine supporting_line(double t) const;
  double diameter() const;

  bool is_parallelogram() const;

  bool contains(Vec2 p) const { return point_vs_convex(verts_, p) >= 0; }
  int side_of(Vec2 p) const { return point_vs_convex(verts_, p); }
  Vec2 centroid() const;

  struct Location {
    int edge;        // edge index e: point between verts[e] and verts[e+1]
    double alpha;    // fraction along the edge
    bool at_vertex;  // alpha == 0 exactly at verts[edge]
  };
  Location locate(double t) const;

 private:
  ConvexBody() = default;
  void finish();  // fills lengths, normals

  std::vector<Vec2> verts_;
  std::vector<double> cum_;  // cum_[i] = arc length up to vertex i (cum_[0] = 0)
  std::vector<double> normal_angles_;
  double perimeter_ = 0.0;
  bool reversed_ = false;
};

// t1 < t2 < t3 plus epsilon such that all three extended boundary arcs have
// Gauss length strictly below pi; anchor parameters for grid sizing.
struct TriPartition {
  std::array<double, 3> t{};
  double epsilon = 0.0;
  std::array<SupportLine, 3> tangents{};
  // anchor parameters per i: tau--, tau-, tau+, tau++
  std::array<double, 3> tau_mm{}, tau_m{}, tau_p{}, tau_pp{};
  double min_slack = 0.0;  // pi minus the largest extended arc
};

TriPartition tri_partition(const ConvexBody& body);

// Cones K_{1,2}, K_{2,3}, K_{3,1} at the corners of the tangent triangle;
// K_{i,i+1} is bordered by l_i on its counterclockwise side.
std::array<Cone, 3> tri_partition_cones(const TriPartition& tp);

}  // namespace tricolor

#endif
