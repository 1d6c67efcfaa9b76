#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace valiant {

/// Thrown when operands disagree on their shapes.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix dimension together with the way it is split recursively:
/// either a single Leaf (size 1) or Bin(left, right) whose size is the sum
/// of both halves.
class Shape {
 public:
  Shape() = default;  // Leaf

  static Shape leaf() { return Shape(); }
  static Shape bin(Shape left, Shape right);

  bool is_leaf() const { return node_ == nullptr; }
  std::size_t size() const;
  const Shape& left() const;
  const Shape& right() const;

  friend bool operator==(const Shape& a, const Shape& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Shape::Node {
  Shape left;
  Shape right;
  std::size_t size;
};

inline std::size_t Shape::size() const { return node_ ? node_->size : 1; }

/// Balanced shape with n leaves; the left half gets the extra leaf.
Shape shape_for(std::size_t n);

/// Maximally right-leaning shape: Bin(Leaf, skewed(n-1)).
Shape skewed_shape(std::size_t n);

/// Maximally left-leaning shape: Bin(skewed_left(n-1), Leaf).
Shape left_skewed_shape(std::size_t n);

/// Writes Leaf / Bin(l,r).
std::string to_string(const Shape& shape);

}  // namespace valiant
