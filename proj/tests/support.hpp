// Shared fixtures, oracles and generators for the unit and acceptance suites.
// Oracles here are intentionally independent of the library implementation
// paths they check.
#pragma once

#include <array>
#include <random>
#include <vector>

#include "polyfan/ks.hpp"
#include "polyfan/polytope.hpp"
#include "polyfan/singularity.hpp"

namespace testsupport {

using namespace polyfan;

using Rng = std::mt19937_64;

inline Vec3 v3(long x, long y, long z) {
  Vec3 v;
  v << x, y, z;
  return v;
}

// --- fixtures -------------------------------------------------------------

inline std::vector<Vec3> cube_vertices() {
  std::vector<Vec3> out;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) out.push_back(v3(x, y, z));
  return out;
}

inline std::vector<Vec3> octahedron_vertices() {
  return {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0),
          v3(0, -1, 0), v3(0, 0, 1), v3(0, 0, -1)};
}

inline std::vector<Vec3> simplex_vertices() {
  return {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(-1, -1, -1)};
}

// Reflexive polytope with one pair of almost-flat A_1-triangle facets.
inline std::vector<Vec3> flat_a1_vertices() {
  return {v3(0, 0, 1), v3(0, 1, -1), v3(0, 1, 0), v3(-2, -1, 0), v3(1, 0, 0)};
}

// Reflexive polytope with one A_1 pair of pairing -1 (not almost-flat).
inline std::vector<Vec3> tilted_a1_vertices() {
  return {v3(0, 0, -1), v3(0, 0, 1), v3(1, 0, 0), v3(-1, 2, 0), v3(0, -1, 0)};
}

// Reflexive polytope with an almost-flat A_2 pair and a second A_1 pair.
inline std::vector<Vec3> flat_a2_vertices() {
  return {v3(1, 0, -1), v3(0, 0, 1), v3(1, 0, 0), v3(-2, 3, 0), v3(0, -1, 0)};
}

inline std::vector<std::vector<Vec3>> reflexive_fixtures() {
  return {cube_vertices(),     octahedron_vertices(), simplex_vertices(),
          flat_a1_vertices(),  tilted_a1_vertices(),  flat_a2_vertices()};
}

// Reflexive fixtures that contain at least one adjacent A_n pair.
inline std::vector<std::vector<Vec3>> paired_reflexive_fixtures() {
  return {flat_a1_vertices(), tilted_a1_vertices(), flat_a2_vertices()};
}

// --- random generators -----------------------------------------------------

// Product of <= `steps` elementary integer row operations; always in GL3(Z).
inline Mat3 random_unimodular(Rng& rng, int steps = 10) {
  Mat3 u = Mat3::Identity();
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<int> idx(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int s = 0; s < steps; ++s) {
    int i = idx(rng), j = idx(rng);
    switch (op(rng)) {
      case 0:
        if (i != j) u.row(i) += Int(coef(rng)) * u.row(j);
        break;
      case 1:
        if (i != j) u.row(i).swap(u.row(j));
        break;
      default:
        u.row(i) = -u.row(i);
        break;
    }
  }
  return u;
}

inline std::vector<Vec3> transform(const Mat3& u, const std::vector<Vec3>& pts) {
  std::vector<Vec3> out;
  out.reserve(pts.size());
  for (const Vec3& p : pts) out.push_back(u * p);
  return out;
}

// Random reflexive polytope: a fixture, possibly with one vertex dropped when
// that keeps reflexivity, in a random unimodular coordinate change.
inline std::vector<Vec3> random_reflexive(Rng& rng) {
  auto bases = reflexive_fixtures();
  std::uniform_int_distribution<size_t> pick(0, bases.size() - 1);
  std::vector<Vec3> pts = bases[pick(rng)];
  if (std::uniform_int_distribution<int>(0, 1)(rng) && pts.size() > 4) {
    std::vector<Vec3> sub = pts;
    sub.erase(sub.begin() +
              static_cast<long>(std::uniform_int_distribution<size_t>(
                  0, sub.size() - 1)(rng)));
    try {
      if (is_reflexive(convex_hull(sub))) pts = sub;
    } catch (const std::invalid_argument&) {
      // degenerate subset; keep the full fixture
    }
  }
  return transform(random_unimodular(rng), pts);
}

// Two adjacent A_n-triangles in normal position with apex (a, b, -1).
struct SyntheticPair {
  std::array<Vec3, 3> t0;
  std::array<Vec3, 3> t1;
};

inline SyntheticPair synthetic_pair(long a, long b, int n) {
  SyntheticPair sp;
  sp.t0 = {v3(a, b, -1), v3(1, 0, 0), v3(-n, n + 1, 0)};
  sp.t1 = {v3(0, 0, 1), v3(1, 0, 0), v3(-n, n + 1, 0)};
  return sp;
}

inline SyntheticPair transform(const Mat3& u, const SyntheticPair& sp) {
  SyntheticPair out;
  for (int i = 0; i < 3; ++i) {
    out.t0[static_cast<size_t>(i)] = u * sp.t0[static_cast<size_t>(i)];
    out.t1[static_cast<size_t>(i)] = u * sp.t1[static_cast<size_t>(i)];
  }
  return out;
}

// Valid adjacent pair carrying the stated (a, b, n) labels verbatim, without
// the canonical relabeling applied by find_adjacent_pairs.
inline AdjacentAnPair normal_position_pair(long a, long b, int n) {
  AdjacentAnPair pr;
  pr.n = n;
  pr.rho0 = v3(a, b, -1);
  pr.rho1 = v3(0, 0, 1);
  pr.rho_u = v3(1, 0, 0);
  pr.rho_v = v3(-n, n + 1, 0);
  pr.w0 = v3(1, 1, a + b - 1);
  pr.w1 = v3(1, 1, 1);
  pr.pairing = Int(a) + Int(b) - 1;
  return pr;
}

// Covariant relabeling of a pair under u in GL3(Z): points map by u, forms by
// the inverse transpose, so every pairing is preserved.
inline AdjacentAnPair transform_pair(const Mat3& u, const AdjacentAnPair& pr) {
  AdjacentAnPair out = pr;
  Mat3 wmap = inverse_unimodular(u).transpose();
  out.rho0 = u * pr.rho0;
  out.rho1 = u * pr.rho1;
  out.rho_u = u * pr.rho_u;
  out.rho_v = u * pr.rho_v;
  out.w0 = wmap * pr.w0;
  out.w1 = wmap * pr.w1;
  return out;
}

// --- oracles ----------------------------------------------------------------

// Plain bounding-box scan: every box point against every facet inequality.
inline std::vector<Vec3> brute_lattice_points(const LatticePolytope& p) {
  auto [lo, hi] = bounding_box(p.vertices());
  std::vector<Vec3> out;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y)
      for (Int z = lo[2]; z <= hi[2]; ++z) {
        Vec3 pt = v3(0, 0, 0);
        pt[0] = x;
        pt[1] = y;
        pt[2] = z;
        bool inside = true;
        for (const Facet& f : p.facets()) {
          Int val = f.support[0] * x + f.support[1] * y + f.support[2] * z;
          if (val > f.height) {
            inside = false;
            break;
          }
        }
        if (inside) out.push_back(pt);
      }
  return out;
}

// Relative-interior test via triangle-fan signed areas: q is strictly inside
// the polygon iff every fan triangle (q, v_i, v_{i+1}) has positive signed
// area with respect to the outward form.
inline std::vector<Vec3> brute_facet_interior(const LatticePolytope& p,
                                              const Facet& f) {
  std::vector<Vec3> poly;
  for (int i : f.vertex_indices) poly.push_back(p.vertex(i));
  auto [lo, hi] = bounding_box(poly);
  std::vector<Vec3> out;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y)
      for (Int z = lo[2]; z <= hi[2]; ++z) {
        Vec3 q = v3(0, 0, 0);
        q[0] = x;
        q[1] = y;
        q[2] = z;
        if (pairing(f.support, q) != f.height) continue;
        bool strict = true;
        for (size_t t = 0; t < poly.size() && strict; ++t) {
          const Vec3& a = poly[t];
          const Vec3& b = poly[(t + 1) % poly.size()];
          Int area2 = pairing(cross(a - q, b - q), f.support);
          if (area2 <= 0) strict = false;
        }
        if (strict) out.push_back(q);
      }
  return out;
}

// Validates every SnfDecomposition invariant against the input matrix.
inline bool check_snf(const MatX& a, const SnfDecomposition& d,
                      std::string* why = nullptr) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  MatX prod = d.U * a * d.V;
  if (prod != d.S) return fail("U*A*V != S");
  Int du = det_exact(d.U);
  Int dv = det_exact(d.V);
  if (du != 1 && du != -1) return fail("det U not +-1");
  if (dv != 1 && dv != -1) return fail("det V not +-1");
  const Eigen::Index m = std::min(d.S.rows(), d.S.cols());
  for (Eigen::Index i = 0; i < d.S.rows(); ++i)
    for (Eigen::Index j = 0; j < d.S.cols(); ++j)
      if (i != j && d.S(i, j) != 0) return fail("S not diagonal");
  for (Eigen::Index i = 0; i < m; ++i)
    if (d.S(i, i) < 0) return fail("negative diagonal entry");
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    const Int& cur = d.S(i, i);
    const Int& nxt = d.S(i + 1, i + 1);
    if (cur == 0) {
      if (nxt != 0) return fail("zero before nonzero on the diagonal");
    } else if (nxt % cur != 0) {
      return fail("divisibility chain broken");
    }
  }
  return true;
}

inline MatX random_matrix(Rng& rng, int max_dim = 5, int max_abs = 9) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  MatX m(dim(rng), dim(rng));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Int(entry(rng));
  return m;
}

}  // namespace testsupport
