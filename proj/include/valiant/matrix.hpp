// Shape-indexed sparse block matrices.
//
// A Mat of shape rows x cols is one of
//   Zero               at any shape,
//   One(v)             at Leaf x Leaf,
//   Row(left, right)   at Leaf x Bin,
//   Col(top, bottom)   at Bin x Leaf,
//   Quad(m00..m11)     at Bin x Bin.
// Values are immutable and share structure. Every constructor below keeps the
// representation canonical: a node whose children are all Zero is Zero.

#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "valiant/algebra.hpp"
#include "valiant/shape.hpp"

namespace valiant {

enum class MatKind { zero, one, row, col, quad };

/// Half `part` (0 or 1) of a shape; a Leaf has only part 0, itself.
inline const Shape& shape_part(const Shape& s, int part) {
  if (s.is_leaf()) return s;
  return part == 0 ? s.left() : s.right();
}

inline int shape_parts(const Shape& s) { return s.is_leaf() ? 1 : 2; }

template <class E>
class Mat {
 public:
  Mat() = default;  // Zero, Leaf x Leaf

  static Mat zero(Shape rows, Shape cols) {
    Mat m;
    m.rows_ = std::move(rows);
    m.cols_ = std::move(cols);
    return m;
  }

  /// One(v). Does not consult any zero hint; see make_one().
  static Mat one(E value) {
    Mat m;
    m.node_ = std::make_shared<const Node>(Node{std::move(value)});
    return m;
  }

  static Mat row(Mat left, Mat right) {
    if (!left.rows().is_leaf() || !right.rows().is_leaf())
      throw ShapeMismatch("Row: children must have Leaf rows");
    Shape cols = Shape::bin(left.cols(), right.cols());
    return from_blocks(Shape::leaf(), std::move(cols),
                       {std::move(left), std::move(right), Mat{}, Mat{}});
  }

  static Mat col(Mat top, Mat bottom) {
    if (!top.cols().is_leaf() || !bottom.cols().is_leaf())
      throw ShapeMismatch("Col: children must have Leaf columns");
    Shape rows = Shape::bin(top.rows(), bottom.rows());
    return from_blocks(std::move(rows), Shape::leaf(),
                       {std::move(top), Mat{}, std::move(bottom), Mat{}});
  }

  static Mat quad(Mat m00, Mat m01, Mat m10, Mat m11) {
    if (!(m00.rows() == m01.rows()) || !(m10.rows() == m11.rows()) ||
        !(m00.cols() == m10.cols()) || !(m01.cols() == m11.cols()))
      throw ShapeMismatch("Quad: child shapes disagree");
    Shape rows = Shape::bin(m00.rows(), m10.rows());
    Shape cols = Shape::bin(m00.cols(), m01.cols());
    return from_blocks(std::move(rows), std::move(cols),
                       {std::move(m00), std::move(m01), std::move(m10),
                        std::move(m11)});
  }

  /// Assembles the blocks of a rows x cols matrix; block (bi, bj) sits at
  /// index 2*bi + bj and unused slots are ignored. Shapes are trusted.
  /// Collapses to Zero when every used block is Zero.
  static Mat from_blocks(Shape rows, Shape cols, std::array<Mat, 4> blocks) {
    const int rb = shape_parts(rows);
    const int cb = shape_parts(cols);
    if (rb == 1 && cb == 1)
      throw ShapeMismatch("from_blocks: a 1x1 matrix has no blocks");
    bool all_zero = true;
    for (int i = 0; i < rb; ++i)
      for (int j = 0; j < cb; ++j)
        all_zero = all_zero && blocks[2 * i + j].is_zero();
    Mat m;
    m.rows_ = std::move(rows);
    m.cols_ = std::move(cols);
    if (!all_zero)
      m.node_ = std::make_shared<const Node>(Node{std::move(blocks)});
    return m;
  }

  const Shape& rows() const { return rows_; }
  const Shape& cols() const { return cols_; }
  bool is_zero() const { return node_ == nullptr; }

  MatKind kind() const {
    if (!node_) return MatKind::zero;
    if (rows_.is_leaf()) return cols_.is_leaf() ? MatKind::one : MatKind::row;
    return cols_.is_leaf() ? MatKind::col : MatKind::quad;
  }

  const E& value() const {
    if (kind() != MatKind::one) throw std::logic_error("Mat::value: not One");
    return std::get<E>(node_->payload);
  }

  /// Block (bi, bj) with respect to the split of rows and cols. Leaf
  /// dimensions have a single block 0. Blocks of Zero are Zero; the only
  /// block of a 1x1 matrix is itself.
  Mat block(int bi, int bj) const {
    if (!node_) return zero(shape_part(rows_, bi), shape_part(cols_, bj));
    if (rows_.is_leaf() && cols_.is_leaf()) return *this;
    return std::get<1>(node_->payload)[2 * bi + bj];
  }

 private:
  struct Node;

  Shape rows_;
  Shape cols_;
  std::shared_ptr<const Node> node_;
};

template <class E>
struct Mat<E>::Node {
  std::variant<E, std::array<Mat<E>, 4>> payload;
};

/// One(v), or Zero if the instance recognises v as zero.
template <SemiNearRing S>
Mat<typename S::Elem> make_one(const S& snr, typename S::Elem v) {
  using M = Mat<typename S::Elem>;
  if (is_zero_hinted(snr, v)) return M::zero(Shape::leaf(), Shape::leaf());
  return M::one(std::move(v));
}

namespace detail {

template <class E>
void require_same_shape(const Mat<E>& x, const Mat<E>& y, const char* op) {
  if (!(x.rows() == y.rows()) || !(x.cols() == y.cols()))
    throw ShapeMismatch(std::string(op) + ": operand shapes differ");
}

template <SemiNearRing S>
Mat<typename S::Elem> add(const S& snr, const Mat<typename S::Elem>& x,
                          const Mat<typename S::Elem>& y) {
  using M = Mat<typename S::Elem>;
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.kind() == MatKind::one) return make_one(snr, snr.add(x.value(), y.value()));
  std::array<M, 4> parts;
  for (int i = 0; i < shape_parts(x.rows()); ++i)
    for (int j = 0; j < shape_parts(x.cols()); ++j)
      parts[2 * i + j] = add(snr, x.block(i, j), y.block(i, j));
  return M::from_blocks(x.rows(), x.cols(), std::move(parts));
}

template <SemiNearRing S>
Mat<typename S::Elem> mul(const S& snr, const Mat<typename S::Elem>& x,
                          const Mat<typename S::Elem>& y) {
  using M = Mat<typename S::Elem>;
  if (x.is_zero() || y.is_zero()) return M::zero(x.rows(), y.cols());
  const Shape& inner = x.cols();
  if (x.rows().is_leaf() && inner.is_leaf() && y.cols().is_leaf())
    return make_one(snr, snr.mul(x.value(), y.value()));
  std::array<M, 4> parts;
  for (int i = 0; i < shape_parts(x.rows()); ++i) {
    for (int j = 0; j < shape_parts(y.cols()); ++j) {
      M acc = M::zero(shape_part(x.rows(), i), shape_part(y.cols(), j));
      for (int k = 0; k < shape_parts(inner); ++k)
        acc = add(snr, acc, mul(snr, x.block(i, k), y.block(k, j)));
      parts[2 * i + j] = std::move(acc);
    }
  }
  // Row * Col: the single 1x1 block is the result.
  if (x.rows().is_leaf() && y.cols().is_leaf()) return std::move(parts[0]);
  return M::from_blocks(x.rows(), y.cols(), std::move(parts));
}

template <SemiNearRing S>
bool all_zero(const S& snr, const Mat<typename S::Elem>& x) {
  switch (x.kind()) {
    case MatKind::zero:
      return true;
    case MatKind::one:
      return snr.eq(x.value(), snr.zero());
    default:
      for (int i = 0; i < shape_parts(x.rows()); ++i)
        for (int j = 0; j < shape_parts(x.cols()); ++j)
          if (!all_zero(snr, x.block(i, j))) return false;
      return true;
  }
}

template <SemiNearRing S>
bool eq(const S& snr, const Mat<typename S::Elem>& x,
        const Mat<typename S::Elem>& y) {
  if (x.is_zero()) return all_zero(snr, y);
  if (y.is_zero()) return all_zero(snr, x);
  if (x.kind() == MatKind::one) return snr.eq(x.value(), y.value());
  for (int i = 0; i < shape_parts(x.rows()); ++i)
    for (int j = 0; j < shape_parts(x.cols()); ++j)
      if (!eq(snr, x.block(i, j), y.block(i, j))) return false;
  return true;
}

inline std::pair<int, std::size_t> locate(const Shape& s, std::size_t index) {
  if (s.is_leaf()) return {0, index};
  const std::size_t half = s.left().size();
  return index < half ? std::pair<int, std::size_t>{0, index}
                      : std::pair<int, std::size_t>{1, index - half};
}

template <class E>
void check_index(const Mat<E>& x, std::size_t i, std::size_t j) {
  if (i >= x.rows().size() || j >= x.cols().size())
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside " +
                            std::to_string(x.rows().size()) + "x" +
                            std::to_string(x.cols().size()));
}

template <SemiNearRing S>
typename S::Elem get(const S& snr, const Mat<typename S::Elem>& x,
                     std::size_t i, std::size_t j) {
  const Mat<typename S::Elem>* cur = &x;
  Mat<typename S::Elem> holder;
  while (true) {
    switch (cur->kind()) {
      case MatKind::zero:
        return snr.zero();
      case MatKind::one:
        return cur->value();
      default: {
        auto [bi, ri] = locate(cur->rows(), i);
        auto [bj, rj] = locate(cur->cols(), j);
        holder = cur->block(bi, bj);
        cur = &holder;
        i = ri;
        j = rj;
      }
    }
  }
}

template <SemiNearRing S>
Mat<typename S::Elem> set(const S& snr, const Mat<typename S::Elem>& x,
                          std::size_t i, std::size_t j,
                          const typename S::Elem& v) {
  using M = Mat<typename S::Elem>;
  if (x.rows().is_leaf() && x.cols().is_leaf()) return make_one(snr, v);
  auto [bi, ri] = locate(x.rows(), i);
  auto [bj, rj] = locate(x.cols(), j);
  std::array<M, 4> parts;
  for (int a = 0; a < shape_parts(x.rows()); ++a)
    for (int b = 0; b < shape_parts(x.cols()); ++b)
      parts[2 * a + b] = x.block(a, b);
  parts[2 * bi + bj] = set(snr, parts[2 * bi + bj], ri, rj, v);
  return M::from_blocks(x.rows(), x.cols(), std::move(parts));
}

template <SemiNearRing S>
void scatter(const S& snr, const Mat<typename S::Elem>& x, std::size_t r0,
             std::size_t c0, std::vector<std::vector<typename S::Elem>>& out) {
  switch (x.kind()) {
    case MatKind::zero:
      return;
    case MatKind::one:
      out[r0][c0] = x.value();
      return;
    default:
      for (int i = 0; i < shape_parts(x.rows()); ++i) {
        const std::size_t dr = i == 0 ? 0 : x.rows().left().size();
        for (int j = 0; j < shape_parts(x.cols()); ++j) {
          const std::size_t dc = j == 0 ? 0 : x.cols().left().size();
          scatter(snr, x.block(i, j), r0 + dr, c0 + dc, out);
        }
      }
  }
}

template <SemiNearRing S>
Mat<typename S::Elem> gather(const S& snr,
                             const std::vector<std::vector<typename S::Elem>>& d,
                             const Shape& rows, const Shape& cols,
                             std::size_t r0, std::size_t c0) {
  using M = Mat<typename S::Elem>;
  if (rows.is_leaf() && cols.is_leaf()) return make_one(snr, d[r0][c0]);
  std::array<M, 4> parts;
  for (int i = 0; i < shape_parts(rows); ++i) {
    const std::size_t dr = i == 0 ? 0 : rows.left().size();
    for (int j = 0; j < shape_parts(cols); ++j) {
      const std::size_t dc = j == 0 ? 0 : cols.left().size();
      parts[2 * i + j] = gather(snr, d, shape_part(rows, i), shape_part(cols, j),
                                r0 + dr, c0 + dc);
    }
  }
  return M::from_blocks(rows, cols, std::move(parts));
}

}  // namespace detail

template <SemiNearRing S>
Mat<typename S::Elem> mat_add(const S& snr, const Mat<typename S::Elem>& x,
                              const Mat<typename S::Elem>& y) {
  detail::require_same_shape(x, y, "mat_add");
  return detail::add(snr, x, y);
}

template <SemiNearRing S>
Mat<typename S::Elem> mat_mul(const S& snr, const Mat<typename S::Elem>& x,
                              const Mat<typename S::Elem>& y) {
  if (!(x.cols() == y.rows()))
    throw ShapeMismatch("mat_mul: inner shapes differ");
  return detail::mul(snr, x, y);
}

/// Extensional equality: Zero regions compare equal to explicit zeros.
template <SemiNearRing S>
bool mat_eq(const S& snr, const Mat<typename S::Elem>& x,
            const Mat<typename S::Elem>& y) {
  detail::require_same_shape(x, y, "mat_eq");
  return detail::eq(snr, x, y);
}

/// Pointwise order: x + y == y.
template <SemiNearRing S>
bool mat_leq(const S& snr, const Mat<typename S::Elem>& x,
             const Mat<typename S::Elem>& y) {
  return mat_eq(snr, mat_add(snr, x, y), y);
}

template <SemiNearRing S>
typename S::Elem get_cell(const S& snr, const Mat<typename S::Elem>& x,
                          std::size_t i, std::size_t j) {
  detail::check_index(x, i, j);
  return detail::get(snr, x, i, j);
}

/// Functional update; x itself is unchanged.
template <SemiNearRing S>
Mat<typename S::Elem> set_cell(const S& snr, const Mat<typename S::Elem>& x,
                               std::size_t i, std::size_t j,
                               const typename S::Elem& v) {
  detail::check_index(x, i, j);
  return detail::set(snr, x, i, j, v);
}

template <SemiNearRing S>
std::vector<std::vector<typename S::Elem>> to_dense(
    const S& snr, const Mat<typename S::Elem>& x) {
  std::vector<std::vector<typename S::Elem>> out(
      x.rows().size(),
      std::vector<typename S::Elem>(x.cols().size(), snr.zero()));
  detail::scatter(snr, x, 0, 0, out);
  return out;
}

template <SemiNearRing S>
Mat<typename S::Elem> from_dense(
    const S& snr, const std::vector<std::vector<typename S::Elem>>& rows,
    const Shape& row_shape, const Shape& col_shape) {
  if (rows.size() != row_shape.size())
    throw ShapeMismatch("from_dense: row count does not match shape");
  for (const auto& r : rows)
    if (r.size() != col_shape.size())
      throw ShapeMismatch("from_dense: column count does not match shape");
  return detail::gather(snr, rows, row_shape, col_shape, 0, 0);
}

/// Structural scan for the canonical-sparsity and shape-consistency
/// invariants.
template <SemiNearRing S>
bool is_canonical(const S& snr, const Mat<typename S::Elem>& x) {
  switch (x.kind()) {
    case MatKind::zero:
      return true;
    case MatKind::one:
      return !is_zero_hinted(snr, x.value());
    default: {
      bool any_nonzero = false;
      for (int i = 0; i < shape_parts(x.rows()); ++i) {
        for (int j = 0; j < shape_parts(x.cols()); ++j) {
          const auto b = x.block(i, j);
          if (!(b.rows() == shape_part(x.rows(), i)) ||
              !(b.cols() == shape_part(x.cols(), j)))
            return false;
          if (!b.is_zero()) any_nonzero = true;
          if (!is_canonical(snr, b)) return false;
        }
      }
      return any_nonzero;
    }
  }
}

/// Square matrices of a fixed shape over a semi-near-ring form a
/// semi-near-ring again. Used to run the law suite on lifted operations.
template <SemiNearRing S>
class SquareMatrixSnr {
 public:
  using Elem = Mat<typename S::Elem>;

  SquareMatrixSnr(S base, Shape shape)
      : base_(std::move(base)), shape_(std::move(shape)) {}

  Elem zero() const { return Elem::zero(shape_, shape_); }
  Elem add(const Elem& x, const Elem& y) const { return mat_add(base_, x, y); }
  Elem mul(const Elem& x, const Elem& y) const { return mat_mul(base_, x, y); }
  bool eq(const Elem& x, const Elem& y) const { return mat_eq(base_, x, y); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }

  /// Dense sample; roughly a third of the cells are zero.
  Elem sample(Rng& rng) const {
    const std::size_t n = shape_.size();
    std::vector<std::vector<typename S::Elem>> d(
        n, std::vector<typename S::Elem>(n, base_.zero()));
    for (auto& row : d)
      for (std::size_t j = 0; j < n; ++j)
        if (draw_below(rng, 3) != 0) row[j] = base_.sample(rng);
    return from_dense(base_, d, shape_, shape_);
  }

  std::string show(const Elem& x) const {
    std::string out = "[";
    const auto d = to_dense(base_, x);
    for (std::size_t i = 0; i < d.size(); ++i) {
      out += i ? "; " : "";
      for (std::size_t j = 0; j < d[i].size(); ++j)
        out += (j ? " " : "") + base_.show(d[i][j]);
    }
    return out + "]";
  }

  const S& base() const { return base_; }
  const Shape& shape() const { return shape_; }

 private:
  S base_;
  Shape shape_;
};

}  // namespace valiant
