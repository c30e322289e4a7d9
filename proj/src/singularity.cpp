#include "polyfan/singularity.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyfan {

namespace {

std::string int_str(const Int& v) { return v.get_str(); }

// Shared checks for a triangle already known to lie in the plane
// <support, x> == 1, with vertices in some cyclic order oriented
// counterclockwise with respect to support.
FacetClass classify_height1_triangle(const std::vector<Vec3>& tri,
                                     const DualVec3& support) {
  Int l0 = content(Vec3(tri[1] - tri[0]));
  Int l1 = content(Vec3(tri[2] - tri[1]));
  Int l2 = content(Vec3(tri[0] - tri[2]));
  std::array<Int, 3> len{l0, l1, l2};
  std::sort(len.begin(), len.end());
  if (!(len[0] == 1 && len[1] == 1 && len[2] >= 2))
    return {FacetTag::Other, 0,
            "edge lattice lengths {" + int_str(len[0]) + ", " + int_str(len[1]) +
                ", " + int_str(len[2]) + "}, need {1, 1, n+1} with n >= 1"};
  auto interior = polygon_interior_lattice_points(tri, support, 1);
  if (!interior.empty())
    return {FacetTag::Other, 0,
            std::to_string(interior.size()) +
                " lattice point(s) in the relative interior"};
  return {FacetTag::AnTriangle, static_cast<int>(to_longlong(len[2]) - 1), ""};
}

// Canonical pair construction from validated ingredients. Returns nullopt
// when the half-space condition fails (apexes not strictly on opposite sides
// of the plane through the origin spanned by the shared edge).
std::optional<AdjacentAnPair> try_make_pair(int n, const Vec3& apex_a,
                                            const DualVec3& form_a, int facet_a,
                                            const Vec3& apex_b,
                                            const DualVec3& form_b, int facet_b,
                                            const Vec3& eu, const Vec3& ev) {
  DualVec3 eta = primitive(cross(eu, ev));
  int sa = sign(pairing(eta, apex_a));
  int sb = sign(pairing(eta, apex_b));
  if (sa * sb != -1) return std::nullopt;

  AdjacentAnPair pr;
  pr.n = n;
  const bool a_first = lex_cmp(apex_a, apex_b) < 0;
  pr.rho0 = a_first ? apex_a : apex_b;
  pr.rho1 = a_first ? apex_b : apex_a;
  pr.w0 = a_first ? form_a : form_b;
  pr.w1 = a_first ? form_b : form_a;
  pr.facet_ids = a_first ? std::make_pair(facet_a, facet_b)
                         : std::make_pair(facet_b, facet_a);
  const bool u_first = lex_cmp(eu, ev) < 0;
  pr.rho_u = u_first ? eu : ev;
  pr.rho_v = u_first ? ev : eu;
  pr.pairing = pairing(pr.w1, pr.rho0);
  if (pr.pairing != pairing(pr.w0, pr.rho1))
    throw std::logic_error("adjacent pair construction broke pairing symmetry");
  return pr;
}

}  // namespace

FacetClass classify_facet(const LatticePolytope& p, const Facet& f) {
  if (f.vertex_indices.size() != 3)
    return {FacetTag::Other, 0,
            "not a triangle (" + std::to_string(f.vertex_indices.size()) +
                " vertices)"};
  std::vector<Vec3> tri;
  for (int i : f.vertex_indices) tri.push_back(p.vertex(i));
  Mat3 m;
  m.col(0) = tri[0];
  m.col(1) = tri[1];
  m.col(2) = tri[2];
  Int d = det3(m);
  if (d == 1 || d == -1) return {FacetTag::Smooth, 0, ""};
  if (f.height != 1)
    return {FacetTag::Other, 0,
            "supporting plane has height " + int_str(f.height) + ", not 1"};
  return classify_height1_triangle(tri, f.support);
}

FacetClass classify_triangle(const std::array<Vec3, 3>& tri,
                             DualVec3* support_out) {
  Vec3 nrm = cross(tri[1] - tri[0], tri[2] - tri[0]);
  if (nrm == Vec3(Vec3::Zero()))
    throw std::invalid_argument("degenerate triangle");
  Int c = pairing(nrm, tri[0]);
  if (c == 0)
    return {FacetTag::Other, 0, "triangle plane passes through the origin"};
  DualVec3 w = primitive(nrm);
  Int h = div_exact(c, content(nrm));
  if (h < 0) {
    w = -w;
    h = -h;
  }
  if (support_out && h == 1) *support_out = w;

  Mat3 m;
  m.col(0) = tri[0];
  m.col(1) = tri[1];
  m.col(2) = tri[2];
  Int d = det3(m);
  if (d == 1 || d == -1) return {FacetTag::Smooth, 0, ""};
  if (h != 1)
    return {FacetTag::Other, 0,
            "supporting plane has height " + int_str(h) + ", not 1"};

  std::vector<Vec3> cyc(tri.begin(), tri.end());
  if (pairing(cross(cyc[1] - cyc[0], cyc[2] - cyc[0]), w) < 0)
    std::swap(cyc[1], cyc[2]);
  return classify_height1_triangle(cyc, w);
}

std::vector<AdjacentAnPair> find_adjacent_pairs(const LatticePolytope& p) {
  const auto& facets = p.facets();
  std::vector<FacetClass> cls;
  cls.reserve(facets.size());
  for (const Facet& f : facets) cls.push_back(classify_facet(p, f));

  std::vector<AdjacentAnPair> out;
  for (size_t i = 0; i < facets.size(); ++i) {
    if (cls[i].tag != FacetTag::AnTriangle) continue;
    for (size_t j = i + 1; j < facets.size(); ++j) {
      if (cls[j].tag != FacetTag::AnTriangle) continue;
      if (cls[i].n != cls[j].n) continue;
      const int n = cls[i].n;

      std::vector<int> vi = facets[i].vertex_indices;
      std::vector<int> vj = facets[j].vertex_indices;
      std::sort(vi.begin(), vi.end());
      std::sort(vj.begin(), vj.end());
      std::vector<int> shared;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::back_inserter(shared));
      if (shared.size() != 2) continue;
      Vec3 eu = p.vertex(shared[0]);
      Vec3 ev = p.vertex(shared[1]);
      // The shared edge must be the long edge of both triangles; pairs glued
      // along a length-1 edge do not qualify.
      if (lattice_length(Segment{eu, ev}) != n + 1) continue;

      auto apex_of = [&](const std::vector<int>& sorted_ids) {
        for (int id : sorted_ids)
          if (id != shared[0] && id != shared[1]) return id;
        throw std::logic_error("triangle facet without an apex");
      };
      Vec3 apex_i = p.vertex(apex_of(vi));
      Vec3 apex_j = p.vertex(apex_of(vj));

      auto pr = try_make_pair(n, apex_i, facets[i].support, static_cast<int>(i),
                              apex_j, facets[j].support, static_cast<int>(j),
                              eu, ev);
      if (pr) out.push_back(*pr);
    }
  }
  return out;
}

AdjacentAnPair adjacent_pair_from_triangles(const std::array<Vec3, 3>& t0,
                                            const std::array<Vec3, 3>& t1) {
  DualVec3 w0, w1;
  FacetClass c0 = classify_triangle(t0, &w0);
  if (c0.tag != FacetTag::AnTriangle)
    throw std::invalid_argument("first triangle is not an A_n-triangle: " +
                                (c0.witness.empty() ? "smooth" : c0.witness));
  FacetClass c1 = classify_triangle(t1, &w1);
  if (c1.tag != FacetTag::AnTriangle)
    throw std::invalid_argument("second triangle is not an A_n-triangle: " +
                                (c1.witness.empty() ? "smooth" : c1.witness));
  if (c0.n != c1.n)
    throw std::invalid_argument("triangles have different n");

  std::vector<Vec3> shared;
  Vec3 apex0, apex1;
  bool found0 = false;
  for (const Vec3& v : t0) {
    bool in_other = false;
    for (const Vec3& u : t1)
      if (v == u) in_other = true;
    if (in_other) {
      shared.push_back(v);
    } else {
      apex0 = v;
      found0 = true;
    }
  }
  if (!found0 || shared.size() != 2)
    throw std::invalid_argument("triangles do not share exactly one edge");
  bool found1 = false;
  for (const Vec3& v : t1) {
    if (v != shared[0] && v != shared[1]) {
      apex1 = v;
      found1 = true;
    }
  }
  if (!found1) throw std::invalid_argument("triangles coincide");
  if (lattice_length(Segment{shared[0], shared[1]}) != c0.n + 1)
    throw std::invalid_argument("shared edge is not the long edge");

  auto pr = try_make_pair(c0.n, apex0, w0, 0, apex1, w1, 1, shared[0], shared[1]);
  if (!pr)
    throw std::invalid_argument(
        "apexes are not in opposite half-spaces of the edge-origin plane");
  return *pr;
}

AdjacentAnPair swap_edge(AdjacentAnPair pr) {
  std::swap(pr.rho_u, pr.rho_v);
  return pr;
}

AdjacentAnPair swap_triangles(AdjacentAnPair pr) {
  std::swap(pr.rho0, pr.rho1);
  std::swap(pr.w0, pr.w1);
  std::swap(pr.facet_ids.first, pr.facet_ids.second);
  return pr;
}

Int pairing_value(const AdjacentAnPair& pr) {
  Int v = pairing(pr.w1, pr.rho0);
  if (v != pairing(pr.w0, pr.rho1))
    throw std::logic_error("pairing symmetry violated: <w1,rho0> != <w0,rho1>");
  return v;
}

NormalForm normal_form(const AdjacentAnPair& pr) {
  // rho_hat: the lattice point on the shared edge closest to rho_u.
  Vec3 rho_hat = pr.rho_u + primitive(Vec3(pr.rho_v - pr.rho_u));
  Mat3 basis;
  basis.col(0) = pr.rho_u;
  basis.col(1) = rho_hat;
  basis.col(2) = pr.rho1;
  Int d = det3(basis);
  if (d != 1 && d != -1)
    throw std::logic_error("adjacent pair basis (rho_u, rho_hat, rho1) is not unimodular");

  NormalForm nf;
  nf.U = inverse_unimodular(basis);
  nf.n = pr.n;

  Vec3 img0 = nf.U * pr.rho0;
  if (img0[2] != -1)
    throw std::logic_error("normal form: apex not at height -1 over the edge plane");
  nf.a = img0[0];
  nf.b = img0[1];

  Vec3 imgv = nf.U * pr.rho_v;
  if (imgv[0] != -nf.n || imgv[1] != nf.n + 1 || imgv[2] != 0)
    throw std::logic_error("normal form: rho_v does not map to (-n, n+1, 0)");

  nf.r = gcd(Int(nf.n + 1), nf.b);
  nf.p = div_exact(nf.b, nf.r);
  nf.q = div_exact(Int(nf.n + 1), nf.r);
  GcdExt bez = gcd_ext(nf.p, nf.q);
  if (bez.g != 1) throw std::logic_error("normal form: p and q are not coprime");
  nf.s = bez.s;
  nf.t = bez.t;

  nf.d_x = nf.b - Int(nf.n + 1) * (nf.a + nf.b);
  nf.d_y = -nf.b;
  nf.d_z = -(nf.a + nf.b);
  if (nf.a + nf.b - 1 != pr.pairing)
    throw std::logic_error("normal form: a + b - 1 disagrees with the pairing");
  return nf;
}

Mat34 ray_map(const NormalForm& nf) {
  Mat34 m;
  m << nf.a, 0, 1, -nf.n,
       nf.b, 0, 0, nf.n + 1,
       -1, 1, 0, 0;
  return m;
}

Vec4 ray_map_kernel(const NormalForm& nf) {
  Vec4 k;
  k << nf.q, nf.q, -Int(nf.n) * nf.p - nf.a * nf.q, -nf.p;
  return k;
}

ClassGroup class_group(const NormalForm& nf) {
  ClassGroup cg;
  cg.free_rank = 1;
  if (nf.r > 1) cg.torsion.push_back(nf.r);

  // Cross-check: the class group is the cokernel of the transpose of the ray
  // map, read off the Smith normal form of that transpose.
  MatX rt = ray_map(nf).transpose();
  SnfDecomposition snf = smith_normal_form(rt);
  ClassGroup check;
  int nonzero = 0;
  for (Eigen::Index i = 0; i < 3; ++i) {
    const Int& di = snf.S(i, i);
    if (di != 0) ++nonzero;
    if (di > 1) check.torsion.push_back(di);
  }
  check.free_rank = 4 - nonzero;
  if (!(check == cg))
    throw std::logic_error("class group: gcd formula disagrees with SNF cokernel");
  return cg;
}

std::tuple<Int, Int, Int> bundle_degrees(const NormalForm& nf) {
  return {nf.d_x, nf.d_y, nf.d_z};
}

ExtProfile ext_profile(int n, const Int& pairing) {
  if (n < 1) throw std::invalid_argument("ext_profile: n must be >= 1");
  ExtProfile ep;
  ep.degrees.reserve(static_cast<size_t>(n));
  for (int j = 2; j <= n + 1; ++j) ep.degrees.push_back(-Int(j) * (pairing + 1));
  return ep;
}

SmoothabilityVerdict verdict(const LatticePolytope& p) {
  SmoothabilityVerdict v;
  bool all_smooth = true;
  for (const Facet& f : p.facets())
    if (classify_facet(p, f).tag != FacetTag::Smooth) all_smooth = false;

  for (AdjacentAnPair& pr : find_adjacent_pairs(p))
    if (pr.pairing >= 0) v.witnesses.push_back(std::move(pr));

  if (!v.witnesses.empty())
    v.tag = VerdictTag::NotSmoothable;
  else if (all_smooth)
    v.tag = VerdictTag::AlreadySmooth;
  else
    v.tag = VerdictTag::NoObstructionFound;
  return v;
}

}  // namespace polyfan
