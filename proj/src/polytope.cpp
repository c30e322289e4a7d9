#include "polyfan/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polyfan {

namespace {

struct PlaneKey {
  DualVec3 w;
  Int h;
};

struct PlaneLess {
  bool operator()(const PlaneKey& a, const PlaneKey& b) const {
    int c = lex_cmp(a.w, b.w);
    if (c != 0) return c < 0;
    return a.h < b.h;
  }
};

// 2D cross product of (a - o) and (b - o) in the coordinates (u, v).
Int cross2(const Vec3& o, const Vec3& a, const Vec3& b, int u, int v) {
  return (a[u] - o[u]) * (b[v] - o[v]) - (a[v] - o[v]) * (b[u] - o[u]);
}

// Convex polygon through the given coplanar points (>= 3, not all collinear),
// returned in cyclic order, counterclockwise with respect to the outward
// form w. Non-extreme points are dropped.
std::vector<Vec3> plane_polygon(std::vector<Vec3> pts, const DualVec3& w) {
  // Project along a coordinate axis where w is nonzero; this is a bijection
  // of the plane onto the remaining two coordinates.
  int m = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(w[i]) > abs(w[m])) m = i;
  const int u = (m == 0) ? 1 : 0;
  const int v = (m == 2) ? 1 : 2;

  std::sort(pts.begin(), pts.end(), [&](const Vec3& a, const Vec3& b) {
    int c = cmp(a[u], b[u]);
    if (c != 0) return c < 0;
    c = cmp(a[v], b[v]);
    if (c != 0) return c < 0;
    return lex_cmp(a, b) < 0;
  });

  // Andrew monotone chain with strict turns: collinear points are dropped.
  auto build = [&](auto begin, auto end) {
    std::vector<Vec3> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross2(chain[chain.size() - 2], chain.back(), *it, u, v) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Vec3> lower = build(pts.begin(), pts.end());
  std::vector<Vec3> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());

  if (lower.size() < 3)
    throw std::logic_error("plane polygon degenerated to fewer than 3 vertices");

  // Orient counterclockwise as seen from outside (from the w side).
  Int t = pairing(cross(lower[1] - lower[0], lower[2] - lower[0]), w);
  if (t < 0) std::reverse(lower.begin(), lower.end());
  return lower;
}

}  // namespace

Int lattice_length(const Segment& s) {
  Vec3 d = s.b - s.a;
  if (d == Vec3(Vec3::Zero()))
    throw std::invalid_argument("lattice length of a degenerate segment");
  return content(d);
}

bool LatticePolytope::contains(const Vec3& x) const {
  for (const Facet& f : facets_)
    if (pairing(f.support, x) > f.height) return false;
  return true;
}

bool spans_3space(const std::vector<Vec3>& points) {
  if (points.size() < 4) return false;
  const Vec3& p0 = points[0];
  Vec3 q1 = Vec3::Zero();
  size_t i = 1;
  for (; i < points.size(); ++i) {
    q1 = points[i] - p0;
    if (q1 != Vec3(Vec3::Zero())) break;
  }
  if (i == points.size()) return false;
  Vec3 nrm = Vec3::Zero();
  for (++i; i < points.size(); ++i) {
    nrm = cross(q1, points[i] - p0);
    if (nrm != Vec3(Vec3::Zero())) break;
  }
  if (i == points.size()) return false;
  for (++i; i < points.size(); ++i)
    if (pairing(nrm, points[i] - p0) != 0) return true;
  return false;
}

std::pair<Vec3, Vec3> bounding_box(const std::vector<Vec3>& points) {
  Vec3 lo = points.at(0);
  Vec3 hi = points.at(0);
  for (const Vec3& p : points)
    for (int k = 0; k < 3; ++k) {
      if (p[k] < lo[k]) lo[k] = p[k];
      if (p[k] > hi[k]) hi[k] = p[k];
    }
  return {lo, hi};
}

LatticePolytope convex_hull(const std::vector<Vec3>& points) {
  std::vector<Vec3> pts = points;
  std::sort(pts.begin(), pts.end(), Vec3Lex{});
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec3& a, const Vec3& b) { return a == b; }),
            pts.end());
  if (!spans_3space(pts))
    throw std::invalid_argument("degenerate: not full-dimensional");

  const int n = static_cast<int>(pts.size());

  // Every facet plane passes through three non-collinear input points, so
  // enumerating supporting planes over all triples finds all of them.
  std::set<PlaneKey, PlaneLess> planes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (nrm == Vec3(Vec3::Zero())) continue;
        Int c = pairing(nrm, pts[i]);
        bool above = false, below = false;
        for (int t = 0; t < n && !(above && below); ++t) {
          int s = sign(Int(pairing(nrm, pts[t]) - c));
          above = above || s > 0;
          below = below || s < 0;
        }
        if (above && below) continue;  // not a supporting plane
        DualVec3 w = above ? DualVec3(-nrm) : nrm;
        Int h = above ? Int(-c) : c;
        Int g = content(w);
        if (g != 1) {
          for (int t = 0; t < 3; ++t) w[t] = div_exact(w[t], g);
          h = div_exact(h, g);  // g divides h because h = <w0, lattice point>
        }
        planes.insert(PlaneKey{w, h});
      }

  struct RawFacet {
    DualVec3 w;
    Int h;
    std::vector<Vec3> poly;
  };
  std::vector<RawFacet> raw;
  raw.reserve(planes.size());
  for (const PlaneKey& pl : planes) {
    std::vector<Vec3> on;
    for (const Vec3& p : pts)
      if (pairing(pl.w, p) == pl.h) on.push_back(p);
    raw.push_back(RawFacet{pl.w, pl.h, plane_polygon(std::move(on), pl.w)});
  }

  // The polytope's vertices are exactly the extreme points of its facets.
  std::set<Vec3, Vec3Lex> vset;
  for (const RawFacet& f : raw)
    for (const Vec3& p : f.poly) vset.insert(p);

  LatticePolytope out;
  out.vertices_.assign(vset.begin(), vset.end());
  std::map<Vec3, int, Vec3Lex> vindex;
  for (int i = 0; i < static_cast<int>(out.vertices_.size()); ++i)
    vindex.emplace(out.vertices_[static_cast<size_t>(i)], i);

  std::map<std::pair<int, int>, int> edge_count;
  for (const RawFacet& rf : raw) {
    Facet f;
    f.support = rf.w;
    f.height = rf.h;
    f.vertex_indices.reserve(rf.poly.size());
    for (const Vec3& p : rf.poly) f.vertex_indices.push_back(vindex.at(p));
    // Start the cycle at the smallest vertex index, preserving direction.
    auto mn = std::min_element(f.vertex_indices.begin(), f.vertex_indices.end());
    std::rotate(f.vertex_indices.begin(), mn, f.vertex_indices.end());
    const size_t deg = f.vertex_indices.size();
    for (size_t t = 0; t < deg; ++t) {
      int a = f.vertex_indices[t];
      int b = f.vertex_indices[(t + 1) % deg];
      ++edge_count[{std::min(a, b), std::max(a, b)}];
    }
    out.facets_.push_back(std::move(f));
  }

  for (const auto& [e, count] : edge_count) {
    if (count != 2)
      throw std::logic_error("hull inconsistency: edge not shared by exactly two facets");
    out.edges_.push_back(e);
  }
  const long V = static_cast<long>(out.vertices_.size());
  const long E = static_cast<long>(out.edges_.size());
  const long F = static_cast<long>(out.facets_.size());
  if (V - E + F != 2) throw std::logic_error("hull inconsistency: Euler check failed");
  return out;
}

bool is_reflexive(const LatticePolytope& p) {
  for (const Facet& f : p.facets())
    if (f.height != 1) return false;
  return true;
}

LatticePolytope dual(const LatticePolytope& p) {
  if (!is_reflexive(p))
    throw std::invalid_argument("dual is not a lattice polytope");
  std::vector<Vec3> verts;
  verts.reserve(p.facets().size());
  for (const Facet& f : p.facets()) verts.push_back(-f.support);
  return convex_hull(verts);
}

std::vector<Vec3> lattice_points(const LatticePolytope& p) {
  auto [lo, hi] = bounding_box(p.vertices());
  std::vector<Vec3> out;
  Vec3 pt;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y) {
      // Narrow the feasible z interval from the facet inequalities.
      Int zlo = lo[2], zhi = hi[2];
      bool feasible = true;
      for (const Facet& f : p.facets()) {
        Int c = f.height - f.support[0] * x - f.support[1] * y;
        const Int& wz = f.support[2];
        if (wz == 0) {
          if (c < 0) {
            feasible = false;
            break;
          }
        } else if (wz > 0) {
          zhi = std::min(zhi, div_floor(c, wz));
        } else {
          zlo = std::max(zlo, div_ceil(c, wz));
        }
      }
      if (!feasible) continue;
      for (Int z = zlo; z <= zhi; ++z) {
        pt << x, y, z;
        out.push_back(pt);
      }
    }
  return out;
}

std::vector<Vec3> polygon_interior_lattice_points(const std::vector<Vec3>& poly,
                                                  const DualVec3& w,
                                                  const Int& h) {
  auto [lo, hi] = bounding_box(poly);
  const size_t deg = poly.size();
  std::vector<Vec3> out;
  Vec3 pt;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y)
      for (Int z = lo[2]; z <= hi[2]; ++z) {
        pt << x, y, z;
        if (pairing(w, pt) != h) continue;
        bool inside = true;
        for (size_t t = 0; t < deg && inside; ++t) {
          const Vec3& a = poly[t];
          const Vec3& b = poly[(t + 1) % deg];
          // Strictly left of every edge, counterclockwise w.r.t. w.
          if (pairing(cross(b - a, pt - a), w) <= 0) inside = false;
        }
        if (inside) out.push_back(pt);
      }
  return out;
}

std::vector<Vec3> facet_interior_lattice_points(const LatticePolytope& p,
                                                const Facet& f) {
  std::vector<Vec3> poly;
  poly.reserve(f.vertex_indices.size());
  for (int i : f.vertex_indices) poly.push_back(p.vertex(i));
  return polygon_interior_lattice_points(poly, f.support, f.height);
}

}  // namespace polyfan
