#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polyfan/polytope.hpp"

namespace polyfan {

enum class FacetTag { Smooth, AnTriangle, Other };

/// Classification of a facet: Smooth (a triangle whose vertices form a basis
/// of N), AnTriangle (no interior lattice points, edge lattice lengths
/// {1, 1, n+1} with n >= 1, supporting plane at height 1), or Other.
/// `witness` explains which condition failed for Other.
struct FacetClass {
  FacetTag tag = FacetTag::Other;
  int n = 0;  // meaningful for AnTriangle only
  std::string witness;
};

/// Two A_n-triangle facets T0, T1 glued along their long edge and lying in
/// opposite half-spaces of the plane through the origin spanned by that edge.
///
/// rho0/rho1 are the apexes (the vertex of each triangle off the shared
/// edge), rho_u/rho_v the shared edge endpoints, w0/w1 the height-1 forms of
/// T0/T1. Canonical labeling: rho0 is the lexicographically smaller apex and
/// rho_u the lexicographically smaller edge endpoint.
struct AdjacentAnPair {
  int n = 0;
  Vec3 rho0, rho1, rho_u, rho_v;
  DualVec3 w0, w1;
  Int pairing;  // <w1, rho0> == <w0, rho1>
  std::pair<int, int> facet_ids{-1, -1};  // (T0, T1); (-1, -1) when synthetic

  bool almost_flat() const { return pairing == 0; }
};

/// Data of the pair after the unimodular change of coordinates U with
/// U*rho_u = (1,0,0), U*rho1 = (0,0,1), U*rho_v = (-n, n+1, 0),
/// U*rho0 = (a, b, -1), together with the derived integers:
/// r = gcd(n+1, b) > 0, b = r*p, n+1 = r*q, s*p + t*q = 1, and the line
/// bundle degrees d_x = b - (n+1)(a+b), d_y = -b, d_z = -a-b.
struct NormalForm {
  Mat3 U;
  Int a, b;
  int n = 0;
  Int r, p, q, s, t;
  Int d_x, d_y, d_z;
};

struct ExtProfile {
  std::vector<Int> degrees;  // entry for j in {2, ..., n+1}: -j*(pairing+1)
};

struct ClassGroup {
  int free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const ClassGroup&) const = default;
};

enum class VerdictTag { NotSmoothable, NoObstructionFound, AlreadySmooth };

struct SmoothabilityVerdict {
  VerdictTag tag = VerdictTag::NoObstructionFound;
  std::vector<AdjacentAnPair> witnesses;  // pairs with pairing >= 0
};

FacetClass classify_facet(const LatticePolytope& p, const Facet& f);

// Classification of a standalone lattice triangle (no ambient polytope).
// When the triangle lies in a height-1 plane, *support_out receives the form.
FacetClass classify_triangle(const std::array<Vec3, 3>& tri,
                             DualVec3* support_out = nullptr);

// All unordered facet pairs satisfying the adjacency conditions, canonically
// labeled, sorted by facet id. The opposite-half-space condition is verified
// via the annihilator of span(rho_u, rho_v), never assumed.
std::vector<AdjacentAnPair> find_adjacent_pairs(const LatticePolytope& p);

// Builds a pair from two standalone triangles (two-cone fan fixtures).
// Throws std::invalid_argument when the adjacency conditions fail.
AdjacentAnPair adjacent_pair_from_triangles(const std::array<Vec3, 3>& t0,
                                            const std::array<Vec3, 3>& t1);

// Relabelings (valid but non-canonical); pairing and n are unchanged.
AdjacentAnPair swap_edge(AdjacentAnPair pr);       // rho_u <-> rho_v
AdjacentAnPair swap_triangles(AdjacentAnPair pr);  // T0 <-> T1

// <w1, rho0>; asserts the symmetry <w1, rho0> == <w0, rho1>.
Int pairing_value(const AdjacentAnPair& pr);

NormalForm normal_form(const AdjacentAnPair& pr);

// Columns are the images of rho0, rho1, rho_u, rho_v in normal coordinates:
// [[a, 0, 1, -n], [b, 0, 0, n+1], [-1, 1, 0, 0]].
Mat34 ray_map(const NormalForm& nf);

// Primitive generator (q, q, -n*p - a*q, -p) of the kernel of the ray map.
Vec4 ray_map_kernel(const NormalForm& nf);

// Divisor class group Z (+) Z/r, cross-checked against the Smith normal form
// of the transpose of the ray map.
ClassGroup class_group(const NormalForm& nf);

std::tuple<Int, Int, Int> bundle_degrees(const NormalForm& nf);

ExtProfile ext_profile(int n, const Int& pairing);

// NotSmoothable iff some adjacent pair has pairing >= 0 (those pairs are the
// witnesses); AlreadySmooth iff every facet classifies Smooth; otherwise
// NoObstructionFound (the criterion is silent, not a smoothability claim).
SmoothabilityVerdict verdict(const LatticePolytope& p);

}  // namespace polyfan
