// Strictly upper-triangular matrices.
//
// At a Leaf shape nothing is stored (the diagonal is implicitly zero). At
// Bin(l, r) a triangle is (left triangle over l, corner Mat l x r, right
// triangle over r), or the empty triangle when all three parts are zero.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "valiant/matrix.hpp"

namespace valiant {

template <class E>
class UpperTri {
 public:
  UpperTri() = default;  // Leaf

  static UpperTri zero(Shape shape) {
    UpperTri t;
    t.shape_ = std::move(shape);
    return t;
  }

  /// Collapses to the empty triangle when every part is zero.
  static UpperTri bin(UpperTri left, Mat<E> corner, UpperTri right) {
    if (!(corner.rows() == left.shape()) || !(corner.cols() == right.shape()))
      throw ShapeMismatch("UpperTri::bin: corner shape does not match halves");
    UpperTri t;
    t.shape_ = Shape::bin(left.shape(), right.shape());
    if (!left.is_zero() || !corner.is_zero() || !right.is_zero())
      t.node_ = std::make_shared<const Node>(
          Node{std::move(left), std::move(corner), std::move(right)});
    return t;
  }

  const Shape& shape() const { return shape_; }
  bool is_leaf() const { return shape_.is_leaf(); }
  /// Structurally empty. Leaf triangles are always empty.
  bool is_zero() const { return node_ == nullptr; }

  UpperTri left() const {
    return node_ ? node_->left : zero(shape_.left());
  }
  Mat<E> corner() const {
    return node_ ? node_->corner : Mat<E>::zero(shape_.left(), shape_.right());
  }
  UpperTri right() const {
    return node_ ? node_->right : zero(shape_.right());
  }

 private:
  struct Node;

  Shape shape_;
  std::shared_ptr<const Node> node_;
};

template <class E>
struct UpperTri<E>::Node {
  UpperTri<E> left;
  Mat<E> corner;
  UpperTri<E> right;
};

namespace detail {

template <class E>
void require_same_shape(const UpperTri<E>& x, const UpperTri<E>& y,
                        const char* op) {
  if (!(x.shape() == y.shape()))
    throw ShapeMismatch(std::string(op) + ": operand shapes differ");
}

template <SemiNearRing S>
UpperTri<typename S::Elem> add_tri(const S& snr,
                                  const UpperTri<typename S::Elem>& x,
                                  const UpperTri<typename S::Elem>& y) {
  using T = UpperTri<typename S::Elem>;
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return T::bin(add_tri(snr, x.left(), y.left()),
                add(snr, x.corner(), y.corner()),
                add_tri(snr, x.right(), y.right()));
}

template <class E>
Mat<E> embed_tri(const UpperTri<E>& x) {
  if (x.is_zero()) return Mat<E>::zero(x.shape(), x.shape());
  const Shape& s = x.shape();
  return Mat<E>::from_blocks(
      s, s, {embed_tri(x.left()), x.corner(), Mat<E>::zero(s.right(), s.left()),
             embed_tri(x.right())});
}

template <SemiNearRing S>
UpperTri<typename S::Elem> mul_tri(const S& snr,
                                  const UpperTri<typename S::Elem>& x,
                                  const UpperTri<typename S::Elem>& y) {
  using T = UpperTri<typename S::Elem>;
  if (x.is_zero() || y.is_zero()) return T::zero(x.shape());
  auto corner = add(snr, mul(snr, embed_tri(x.left()), y.corner()),
                    mul(snr, x.corner(), embed_tri(y.right())));
  return T::bin(mul_tri(snr, x.left(), y.left()), std::move(corner),
                mul_tri(snr, x.right(), y.right()));
}

template <SemiNearRing S>
bool eq_tri(const S& snr, const UpperTri<typename S::Elem>& x,
           const UpperTri<typename S::Elem>& y) {
  if (x.is_leaf()) return true;
  if (x.is_zero() && y.is_zero()) return true;
  return eq_tri(snr, x.left(), y.left()) && eq(snr, x.corner(), y.corner()) &&
         eq_tri(snr, x.right(), y.right());
}

template <class E>
void check_index(const UpperTri<E>& x, std::size_t i, std::size_t j) {
  if (i >= j)
    throw std::out_of_range("triangle index (" + std::to_string(i) + "," +
                            std::to_string(j) +
                            ") is on or below the diagonal");
  if (j >= x.shape().size())
    throw std::out_of_range("triangle index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside size " +
                            std::to_string(x.shape().size()));
}

template <SemiNearRing S>
typename S::Elem ut_get(const S& snr, const UpperTri<typename S::Elem>& x,
                        std::size_t i, std::size_t j) {
  if (x.is_zero()) return snr.zero();
  const std::size_t half = x.shape().left().size();
  if (j < half) return ut_get(snr, x.left(), i, j);
  if (i >= half) return ut_get(snr, x.right(), i - half, j - half);
  return get(snr, x.corner(), i, j - half);
}

template <SemiNearRing S>
UpperTri<typename S::Elem> ut_set(const S& snr,
                                  const UpperTri<typename S::Elem>& x,
                                  std::size_t i, std::size_t j,
                                  const typename S::Elem& v) {
  using T = UpperTri<typename S::Elem>;
  const std::size_t half = x.shape().left().size();
  if (j < half) return T::bin(ut_set(snr, x.left(), i, j, v), x.corner(), x.right());
  if (i >= half)
    return T::bin(x.left(), x.corner(), ut_set(snr, x.right(), i - half, j - half, v));
  return T::bin(x.left(), set(snr, x.corner(), i, j - half, v), x.right());
}

}  // namespace detail

template <SemiNearRing S>
UpperTri<typename S::Elem> ut_add(const S& snr,
                                  const UpperTri<typename S::Elem>& x,
                                  const UpperTri<typename S::Elem>& y) {
  detail::require_same_shape(x, y, "ut_add");
  return detail::add_tri(snr, x, y);
}

/// Triangular product; the corner is left*ym + xm*right computed on the
/// square embeddings of the diagonal triangles.
template <SemiNearRing S>
UpperTri<typename S::Elem> ut_mul(const S& snr,
                                  const UpperTri<typename S::Elem>& x,
                                  const UpperTri<typename S::Elem>& y) {
  detail::require_same_shape(x, y, "ut_mul");
  return detail::mul_tri(snr, x, y);
}

template <SemiNearRing S>
bool ut_eq(const S& snr, const UpperTri<typename S::Elem>& x,
           const UpperTri<typename S::Elem>& y) {
  detail::require_same_shape(x, y, "ut_eq");
  return detail::eq_tri(snr, x, y);
}

template <SemiNearRing S>
bool ut_leq(const S& snr, const UpperTri<typename S::Elem>& x,
            const UpperTri<typename S::Elem>& y) {
  return ut_eq(snr, ut_add(snr, x, y), y);
}

/// Square embedding with zeros on and below the diagonal.
template <class E>
Mat<E> embed(const UpperTri<E>& x) {
  return detail::embed_tri(x);
}

template <SemiNearRing S>
typename S::Elem get_cell(const S& snr, const UpperTri<typename S::Elem>& x,
                          std::size_t i, std::size_t j) {
  detail::check_index(x, i, j);
  return detail::ut_get(snr, x, i, j);
}

template <SemiNearRing S>
UpperTri<typename S::Elem> set_cell(const S& snr,
                                    const UpperTri<typename S::Elem>& x,
                                    std::size_t i, std::size_t j,
                                    const typename S::Elem& v) {
  detail::check_index(x, i, j);
  return detail::ut_set(snr, x, i, j, v);
}

/// Dense n x n view; cells on and below the diagonal are zero.
template <SemiNearRing S>
std::vector<std::vector<typename S::Elem>> to_dense(
    const S& snr, const UpperTri<typename S::Elem>& x) {
  return to_dense(snr, embed(x));
}

/// Builds a triangle from the strictly upper part of a dense square matrix.
/// Anything on or below the diagonal must be zero.
template <SemiNearRing S>
UpperTri<typename S::Elem> tri_from_dense(
    const S& snr, const std::vector<std::vector<typename S::Elem>>& d,
    const Shape& shape) {
  using T = UpperTri<typename S::Elem>;
  const std::size_t n = shape.size();
  if (d.size() != n) throw ShapeMismatch("tri_from_dense: size does not match shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) throw ShapeMismatch("tri_from_dense: matrix is not square");
    for (std::size_t j = 0; j <= i; ++j)
      if (!snr.eq(d[i][j], snr.zero()))
        throw std::invalid_argument("tri_from_dense: nonzero entry on or below the diagonal");
  }
  struct Build {
    const S& snr;
    const std::vector<std::vector<typename S::Elem>>& d;
    T operator()(const Shape& s, std::size_t off) const {
      if (s.is_leaf()) return T{};
      const std::size_t half = s.left().size();
      std::vector<std::vector<typename S::Elem>> corner(
          half, std::vector<typename S::Elem>(s.right().size()));
      for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < s.right().size(); ++j)
          corner[i][j] = d[off + i][off + half + j];
      return T::bin((*this)(s.left(), off),
                    from_dense(snr, corner, s.left(), s.right()),
                    (*this)(s.right(), off + half));
    }
  };
  return Build{snr, d}(shape, 0);
}

template <SemiNearRing S>
bool is_canonical(const S& snr, const UpperTri<typename S::Elem>& x) {
  if (x.is_zero()) return true;
  if (x.left().is_zero() && x.corner().is_zero() && x.right().is_zero())
    return false;
  return x.corner().rows() == x.shape().left() &&
         x.corner().cols() == x.shape().right() &&
         is_canonical(snr, x.left()) && is_canonical(snr, x.corner()) &&
         is_canonical(snr, x.right());
}

/// Strictly upper-triangular matrices of one shape form a semi-near-ring.
template <SemiNearRing S>
class TriangleSnr {
 public:
  using Elem = UpperTri<typename S::Elem>;

  TriangleSnr(S base, Shape shape)
      : base_(std::move(base)), shape_(std::move(shape)) {}

  Elem zero() const { return Elem::zero(shape_); }
  Elem add(const Elem& x, const Elem& y) const { return ut_add(base_, x, y); }
  Elem mul(const Elem& x, const Elem& y) const { return ut_mul(base_, x, y); }
  bool eq(const Elem& x, const Elem& y) const { return ut_eq(base_, x, y); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }

  /// Roughly half of the upper cells are nonzero.
  Elem sample(Rng& rng) const {
    const std::size_t n = shape_.size();
    std::vector<std::vector<typename S::Elem>> d(
        n, std::vector<typename S::Elem>(n, base_.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (draw_below(rng, 2) == 0) d[i][j] = base_.sample(rng);
    return tri_from_dense(base_, d, shape_);
  }

  std::string show(const Elem& x) const {
    return SquareMatrixSnr<S>(base_, shape_).show(embed(x));
  }

  const S& base() const { return base_; }
  const Shape& shape() const { return shape_; }

 private:
  S base_;
  Shape shape_;
};

}  // namespace valiant
