#include "polyfan/linalg.hpp"

#include <algorithm>

namespace polyfan {

Int det3(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Int det3(const MatX& m) {
  if (m.rows() != 3 || m.cols() != 3)
    throw std::invalid_argument("det3: matrix is not 3x3");
  Mat3 f = m;
  return det3(f);
}

Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

Mat3 inverse_unimodular(const Mat3& m) {
  Int d = det3(m);
  if (d != 1 && d != -1) throw std::invalid_argument("not unimodular");
  // inverse = adj / det and det is +-1
  Mat3 inv = adjugate(m);
  if (d == -1) inv = -inv;
  return inv;
}

Int det_exact(MatX m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det_exact: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Int sgn = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      m.row(k).swap(m.row(piv));
      sgn = -sgn;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = div_exact(t, prev);
      }
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

int lex_cmp(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

SnfDecomposition smith_normal_form(const MatX& a) {
  const Eigen::Index r = a.rows();
  const Eigen::Index c = a.cols();
  SnfDecomposition d;
  d.S = a;
  d.U = MatX::Identity(r, r);
  d.V = MatX::Identity(c, c);
  MatX& S = d.S;
  MatX& U = d.U;
  MatX& V = d.V;

  const Eigen::Index steps = std::min(r, c);
  for (Eigen::Index k = 0; k < steps; ++k) {
    bool exhausted = false;
    for (;;) {
      // Pivot: smallest nonzero absolute value, ties broken by lowest
      // row index, then lowest column index.
      Eigen::Index pi = -1, pj = -1;
      Int best;
      for (Eigen::Index i = k; i < r; ++i)
        for (Eigen::Index j = k; j < c; ++j)
          if (S(i, j) != 0) {
            Int v = abs(S(i, j));
            if (pi < 0 || v < best) {
              best = v;
              pi = i;
              pj = j;
            }
          }
      if (pi < 0) {
        exhausted = true;  // remaining block is zero
        break;
      }
      if (pi != k) {
        S.row(k).swap(S.row(pi));
        U.row(k).swap(U.row(pi));
      }
      if (pj != k) {
        S.col(k).swap(S.col(pj));
        V.col(k).swap(V.col(pj));
      }

      bool dirty = false;
      for (Eigen::Index i = k + 1; i < r; ++i)
        if (S(i, k) != 0) {
          Int q = div_trunc(S(i, k), S(k, k));
          if (q != 0) {
            S.row(i) -= q * S.row(k);
            U.row(i) -= q * U.row(k);
          }
          if (S(i, k) != 0) dirty = true;
        }
      for (Eigen::Index j = k + 1; j < c; ++j)
        if (S(k, j) != 0) {
          Int q = div_trunc(S(k, j), S(k, k));
          if (q != 0) {
            S.col(j) -= q * S.col(k);
            V.col(j) -= q * V.col(k);
          }
          if (S(k, j) != 0) dirty = true;
        }
      if (dirty) continue;

      // Row and column k are clear; force the pivot to divide the rest.
      Eigen::Index bi = -1;
      for (Eigen::Index i = k + 1; i < r && bi < 0; ++i)
        for (Eigen::Index j = k + 1; j < c; ++j)
          if (S(i, j) % S(k, k) != 0) {
            bi = i;
            break;
          }
      if (bi >= 0) {
        S.row(k) += S.row(bi);
        U.row(k) += U.row(bi);
        continue;
      }
      break;
    }
    if (exhausted) break;
    if (S(k, k) < 0) {
      S.row(k) = -S.row(k);
      U.row(k) = -U.row(k);
    }
  }
  return d;
}

}  // namespace polyfan
