#pragma once

#include <Eigen/Core>

#include <stdexcept>

#include "polyfan/numeric.hpp"

namespace polyfan {

template <typename Scalar>
using Vec3T = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3T = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using MatXT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Elements of the lattice N = Z^3.
using Vec3 = Vec3T<Int>;
// Elements of the dual lattice M = Hom(N, Z); paired against Vec3 via dot.
using DualVec3 = Vec3T<Int>;
using Vec4 = Eigen::Matrix<Int, 4, 1>;
using Mat3 = Mat3T<Int>;
using Mat34 = Eigen::Matrix<Int, 3, 4>;
using MatX = MatXT<Int>;

// Duality pairing <w, v>.
template <typename DW, typename DV>
Int pairing(const Eigen::MatrixBase<DW>& w, const Eigen::MatrixBase<DV>& v) {
  return Int(w.dot(v));
}

template <typename DA, typename DB>
Vec3 cross(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Vec3 u = a;
  Vec3 v = b;
  Vec3 r;
  r[0] = u[1] * v[2] - u[2] * v[1];
  r[1] = u[2] * v[0] - u[0] * v[2];
  r[2] = u[0] * v[1] - u[1] * v[0];
  return r;
}

// gcd of all coordinates, >= 0.
template <typename D>
Int content(const Eigen::MatrixBase<D>& v) {
  typename D::PlainObject x = v;
  Int g = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) g = gcd(g, x(i));
  return g;
}

// v divided by the gcd of its coordinates; the positive primitive multiple.
template <typename D>
typename D::PlainObject primitive(const Eigen::MatrixBase<D>& v) {
  typename D::PlainObject x = v;
  Int g = content(x);
  if (g == 0) throw std::invalid_argument("no primitive direction");
  if (g != 1)
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = div_exact(x(i), g);
  return x;
}

Int det3(const Mat3& m);
Int det3(const MatX& m);  // throws unless 3x3

Mat3 adjugate(const Mat3& m);

// Integer inverse of a matrix with determinant +-1.
Mat3 inverse_unimodular(const Mat3& m);

// Exact determinant of a square integer matrix (Bareiss, fraction-free).
Int det_exact(MatX m);

// Three-way lexicographic comparison.
int lex_cmp(const Vec3& a, const Vec3& b);

struct Vec3Lex {
  bool operator()(const Vec3& a, const Vec3& b) const { return lex_cmp(a, b) < 0; }
};

// U*A*V == S with |det U| == |det V| == 1, S diagonal, entries >= 0,
// and each diagonal entry dividing the next.
struct SnfDecomposition {
  MatX U;
  MatX S;
  MatX V;
};

SnfDecomposition smith_normal_form(const MatX& a);

}  // namespace polyfan
