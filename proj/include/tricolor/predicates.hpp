#ifndef TRICOLOR_PREDICATES_HPP
#define TRICOLOR_PREDICATES_HPP

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "tricolor/vec.hpp"

namespace tricolor {

// Exact orientation sign of the triangle (a, b, c): +1 ccw, -1 cw, 0 collinear.
// Semi-static float filter in front of the rational evaluation.
int orient(Vec2 a, Vec2 b, Vec2 c);

// Exact orientation where c is an exact rational point (e.g. a constructed
// arrangement vertex); a, b are double points.
int orient_rat(Vec2 a, Vec2 b, const RatVec2& c);

// Exact sign of cross(u, v) for double vectors.
int cross_sign(Vec2 u, Vec2 v);

// Point-in-convex-polygon, vertices in ccw order, closed membership.
// Returns +1 strictly inside, 0 on the boundary, -1 outside.
// O(log n) wedge search around vertex 0.
int point_vs_convex(std::span<const Vec2> poly, Vec2 p);
int point_vs_convex(std::span<const Vec2> poly, const RatVec2& p);

// Proper + touching intersection test for closed segments, exact.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Exact intersection point of the segment supports, if unique.
std::optional<RatVec2> line_intersection(const RatVec2& a, const RatVec2& b, const RatVec2& c,
                                         const RatVec2& d);

// True if the closed segments intersect in more than one point (collinear overlap).
bool segments_overlap_collinear(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

}  // namespace tricolor

#endif
