// Valiant's divide-and-conquer transitive closure.
//
// closure(W) is the least C with C = W + C*C. Splitting W into
// (A, Y, B) gives C = (A+, V(A+, Y, B+), B+), where completion V(a, y, b)
// is the unique X with X = y + a*X + X*b.

#pragma once

#include "valiant/upper_tri.hpp"

namespace valiant {

namespace detail {

template <SemiNearRing S>
Mat<typename S::Elem> complete(const S& snr, const UpperTri<typename S::Elem>& a,
                               const Mat<typename S::Elem>& y,
                               const UpperTri<typename S::Elem>& b) {
  using M = Mat<typename S::Elem>;
  if (y.is_zero()) return y;
  const bool rows_leaf = a.is_leaf();
  const bool cols_leaf = b.is_leaf();
  if (rows_leaf && cols_leaf) return y;

  if (rows_leaf) {
    // 1 x (c1 + c2): x1 = V(a, y1, B11); x2 = V(a, y2 + x1 B12, B22).
    M x1 = complete(snr, a, y.block(0, 0), b.left());
    M x2 = complete(snr, a, add(snr, y.block(0, 1), mul(snr, x1, b.corner())),
                    b.right());
    return M::from_blocks(y.rows(), y.cols(), {std::move(x1), std::move(x2), M{}, M{}});
  }

  if (cols_leaf) {
    // (r1 + r2) x 1: x2 = V(A22, y2, b); x1 = V(A11, y1 + A12 x2, b).
    M x2 = complete(snr, a.right(), y.block(1, 0), b);
    M x1 = complete(snr, a.left(), add(snr, y.block(0, 0), mul(snr, a.corner(), x2)),
                    b);
    return M::from_blocks(y.rows(), y.cols(), {std::move(x1), M{}, std::move(x2), M{}});
  }

  const auto a11 = a.left();
  const auto a12 = a.corner();
  const auto a22 = a.right();
  const auto b11 = b.left();
  const auto b12 = b.corner();
  const auto b22 = b.right();

  M x21 = complete(snr, a22, y.block(1, 0), b11);
  M x11 = complete(snr, a11, add(snr, y.block(0, 0), mul(snr, a12, x21)), b11);
  M x22 = complete(snr, a22, add(snr, y.block(1, 1), mul(snr, x21, b12)), b22);
  M x12 = complete(
      snr, a11,
      add(snr, add(snr, y.block(0, 1), mul(snr, a12, x22)), mul(snr, x11, b12)),
      b22);
  return M::from_blocks(y.rows(), y.cols(),
                        {std::move(x11), std::move(x12), std::move(x21),
                         std::move(x22)});
}

template <SemiNearRing S>
UpperTri<typename S::Elem> close(const S& snr,
                                 const UpperTri<typename S::Elem>& w) {
  using T = UpperTri<typename S::Elem>;
  if (w.is_zero()) return w;
  T left = close(snr, w.left());
  T right = close(snr, w.right());
  auto corner = complete(snr, left, w.corner(), right);
  return T::bin(std::move(left), std::move(corner), std::move(right));
}

}  // namespace detail

/// Least solution C of C = w + C*C.
template <SemiNearRing S>
UpperTri<typename S::Elem> closure(const S& snr,
                                   const UpperTri<typename S::Elem>& w) {
  return detail::close(snr, w);
}

/// The unique X (shape a x b) with X = y + embed(a)*X + X*embed(b).
template <SemiNearRing S>
Mat<typename S::Elem> completion(const S& snr,
                                 const UpperTri<typename S::Elem>& a,
                                 const Mat<typename S::Elem>& y,
                                 const UpperTri<typename S::Elem>& b) {
  if (!(y.rows() == a.shape()) || !(y.cols() == b.shape()))
    throw ShapeMismatch("completion: corner shape does not match triangles");
  return detail::complete(snr, a, y, b);
}

/// c solves the quadratic closure equation w + c*c == c.
template <SemiNearRing S>
bool closure_equation_holds(const S& snr, const UpperTri<typename S::Elem>& w,
                            const UpperTri<typename S::Elem>& c) {
  return ut_eq(snr, ut_add(snr, w, ut_mul(snr, c, c)), c);
}

/// x solves the linear completion equation y + (a*x + x*b) == x.
template <SemiNearRing S>
bool linear_equation_holds(const S& snr, const UpperTri<typename S::Elem>& a,
                           const Mat<typename S::Elem>& y,
                           const UpperTri<typename S::Elem>& b,
                           const Mat<typename S::Elem>& x) {
  auto rhs = mat_add(snr, y,
                     mat_add(snr, mat_mul(snr, embed(a), x),
                             mat_mul(snr, x, embed(b))));
  return mat_eq(snr, rhs, x);
}

}  // namespace valiant
