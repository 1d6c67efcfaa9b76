// JSON interchange for strictly upper-triangular matrices:
//
//   {"semiring":"minplus","size":3,"entries":[[0,1,1],[0,2,10],[1,2,2]]}
//
// Entry values are true/false for "bool" and a non-negative integer or
// "inf" for "minplus". On output entries are sorted by (i, j) and zero
// entries are omitted.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "valiant/algebra.hpp"
#include "valiant/upper_tri.hpp"

namespace valiant {

class MatrixFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SemiringKind { boolean, minplus };

SemiringKind semiring_from_name(std::string_view name);
std::string semiring_name(SemiringKind kind);

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  std::string value;  // "true"/"false", decimal digits, or "inf"

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

struct MatrixFile {
  SemiringKind semiring = SemiringKind::boolean;
  std::size_t size = 1;
  std::vector<MatrixEntry> entries;
};

/// Validates indices (0 <= i < j < size), value syntax and duplicates.
MatrixFile parse_matrix_file(std::string_view json_text);
MatrixFile read_matrix_file(const std::string& path);

/// Compact single-line JSON followed by a newline.
std::string write_matrix_file(const MatrixFile& file);

bool parse_bool_value(const std::string& text);
Cost parse_cost_value(const std::string& text);

template <SemiNearRing S>
typename S::Elem parse_value(const S&, const std::string& text);

template <>
inline bool parse_value(const BoolSnr&, const std::string& text) {
  return parse_bool_value(text);
}

template <>
inline Cost parse_value(const MinPlusSnr&, const std::string& text) {
  return parse_cost_value(text);
}

/// Chart of shape_for(size) holding the file's entries.
template <SemiNearRing S>
UpperTri<typename S::Elem> to_triangle(const S& snr, const MatrixFile& file) {
  auto tri = UpperTri<typename S::Elem>::zero(shape_for(file.size));
  for (const auto& e : file.entries)
    tri = set_cell(snr, tri, e.row, e.col, parse_value(snr, e.value));
  return tri;
}

template <SemiNearRing S>
MatrixFile from_triangle(const S& snr, SemiringKind kind,
                         const UpperTri<typename S::Elem>& tri) {
  MatrixFile out;
  out.semiring = kind;
  out.size = tri.shape().size();
  const auto dense = to_dense(snr, tri);
  for (std::size_t i = 0; i < out.size; ++i)
    for (std::size_t j = i + 1; j < out.size; ++j)
      if (!snr.eq(dense[i][j], snr.zero()))
        out.entries.push_back({i, j, snr.show(dense[i][j])});
  return out;
}

enum class ClosureMethod { valiant, kleene, cyk };

ClosureMethod closure_method_from_name(std::string_view name);

/// Closes the matrix with the chosen algorithm.
MatrixFile close_matrix_file(const MatrixFile& file, ClosureMethod method);

}  // namespace valiant
