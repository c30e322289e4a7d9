#pragma once

#include <utility>
#include <vector>

#include "polyfan/linalg.hpp"

namespace polyfan {

struct Segment {
  Vec3 a;
  Vec3 b;
};

// Number of lattice segments the segment decomposes into:
// gcd of the coordinate differences of the endpoints.
Int lattice_length(const Segment& s);

/// A 2-face of a lattice 3-polytope.
///
/// `support` is the primitive outward linear form: <support, v> == height on
/// every facet vertex and <support, p> < height on every other vertex.
/// `vertex_indices` walk the facet polygon counterclockwise as seen from
/// outside, starting at the smallest index.
struct Facet {
  std::vector<int> vertex_indices;
  DualVec3 support;
  Int height;
};

/// A full-dimensional lattice polytope in N = Z^3, immutable once built.
///
/// Vertices are exactly the extreme points, sorted lexicographically.
/// Facets are sorted lexicographically by (support, height). Edges are
/// index pairs (i < j), sorted; each edge lies in exactly two facets.
class LatticePolytope {
 public:
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const Vec3& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }

  // True iff the point satisfies every facet inequality <support, x> <= height.
  bool contains(const Vec3& x) const;

  friend LatticePolytope convex_hull(const std::vector<Vec3>& points);

 private:
  LatticePolytope() = default;
  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::pair<int, int>> edges_;
};

// True iff the affine hull of the points is all of R^3.
bool spans_3space(const std::vector<Vec3>& points);

// Componentwise (min, max) over a nonempty point list.
std::pair<Vec3, Vec3> bounding_box(const std::vector<Vec3>& points);

// Exact convex hull. Duplicates and non-extreme input points are dropped.
// Throws std::invalid_argument("degenerate: not full-dimensional") when the
// input does not affinely span 3-space.
LatticePolytope convex_hull(const std::vector<Vec3>& points);

// True iff the origin is strictly interior and every facet has height 1.
bool is_reflexive(const LatticePolytope& p);

// Polar dual; requires a reflexive input. The dual's vertices are exactly
// the negated facet supports of p.
LatticePolytope dual(const LatticePolytope& p);

// All lattice points of p, in lexicographic order.
std::vector<Vec3> lattice_points(const LatticePolytope& p);

// Lattice points strictly inside a convex polygon embedded in the plane
// <w, x> == h. `poly` must be in cyclic order, counterclockwise with respect
// to w. Result is in lexicographic order.
std::vector<Vec3> polygon_interior_lattice_points(const std::vector<Vec3>& poly,
                                                  const DualVec3& w,
                                                  const Int& h);

// Lattice points in the relative interior of a facet, in lexicographic order.
std::vector<Vec3> facet_interior_lattice_points(const LatticePolytope& p,
                                                const Facet& f);

}  // namespace polyfan
