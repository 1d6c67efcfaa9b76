#include "valiant/shape.hpp"

namespace valiant {

Shape Shape::bin(Shape left, Shape right) {
  Shape s;
  const std::size_t size = left.size() + right.size();
  s.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), size});
  return s;
}

const Shape& Shape::left() const {
  if (!node_) throw ShapeMismatch("Leaf shape has no left half");
  return node_->left;
}

const Shape& Shape::right() const {
  if (!node_) throw ShapeMismatch("Leaf shape has no right half");
  return node_->right;
}

bool operator==(const Shape& a, const Shape& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->size != b.node_->size) return false;
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

Shape shape_for(std::size_t n) {
  if (n == 0) throw std::invalid_argument("shape_for: size must be at least 1");
  if (n == 1) return Shape::leaf();
  return Shape::bin(shape_for((n + 1) / 2), shape_for(n / 2));
}

Shape skewed_shape(std::size_t n) {
  if (n == 0) throw std::invalid_argument("skewed_shape: size must be at least 1");
  Shape s = Shape::leaf();
  for (std::size_t k = 1; k < n; ++k) s = Shape::bin(Shape::leaf(), s);
  return s;
}

Shape left_skewed_shape(std::size_t n) {
  if (n == 0) throw std::invalid_argument("left_skewed_shape: size must be at least 1");
  Shape s = Shape::leaf();
  for (std::size_t k = 1; k < n; ++k) s = Shape::bin(s, Shape::leaf());
  return s;
}

std::string to_string(const Shape& shape) {
  if (shape.is_leaf()) return "Leaf";
  return "Bin(" + to_string(shape.left()) + "," + to_string(shape.right()) + ")";
}

}  // namespace valiant
