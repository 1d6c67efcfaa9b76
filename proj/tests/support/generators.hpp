// Random inputs and fixtures shared by the unit and acceptance tests.

#pragma once

#include <string>
#include <vector>

#include "valiant/grammar.hpp"
#include "valiant/upper_tri.hpp"

namespace valiant::testing {

inline std::string data_path(const std::string& name) {
  return std::string(VALIANT_TEST_DATA) + "/" + name;
}

inline Grammar paren_grammar() { return load_grammar_file(data_path("paren.cnf")); }

/// Shape with n leaves and uniformly random split points.
inline Shape random_shape(std::size_t n, Rng& rng) {
  if (n == 1) return Shape::leaf();
  const std::size_t left = 1 + draw_below(rng, n - 1);
  return Shape::bin(random_shape(left, rng), random_shape(n - left, rng));
}

/// Balanced, right-skewed, left-skewed or random, chosen by `variant % 4`.
inline Shape shape_variant(std::size_t n, std::size_t variant, Rng& rng) {
  switch (variant % 4) {
    case 0:
      return shape_for(n);
    case 1:
      return skewed_shape(n);
    case 2:
      return left_skewed_shape(n);
    default:
      return random_shape(n, rng);
  }
}

/// Each cell is nonzero with probability num/den.
template <SemiNearRing S>
std::vector<std::vector<typename S::Elem>> random_dense(const S& snr, std::size_t rows,
                                                        std::size_t cols, Rng& rng,
                                                        std::uint64_t num = 1,
                                                        std::uint64_t den = 2) {
  std::vector<std::vector<typename S::Elem>> d(
      rows, std::vector<typename S::Elem>(cols, snr.zero()));
  for (auto& row : d)
    for (std::size_t j = 0; j < cols; ++j)
      if (draw_below(rng, den) < num) row[j] = snr.sample(rng);
  return d;
}

template <SemiNearRing S>
Mat<typename S::Elem> random_mat(const S& snr, const Shape& rows, const Shape& cols,
                                 Rng& rng, std::uint64_t num = 1, std::uint64_t den = 2) {
  return from_dense(snr, random_dense(snr, rows.size(), cols.size(), rng, num, den), rows,
                    cols);
}

template <SemiNearRing S>
UpperTri<typename S::Elem> random_tri(const S& snr, const Shape& shape, Rng& rng,
                                      std::uint64_t num = 1, std::uint64_t den = 2) {
  const std::size_t n = shape.size();
  auto d = random_dense(snr, n, n, rng, num, den);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) d[i][j] = snr.zero();
  return tri_from_dense(snr, d, shape);
}

/// x + (random delta), so the result is >= x.
template <SemiNearRing S>
Mat<typename S::Elem> enlarge(const S& snr, const Mat<typename S::Elem>& x, Rng& rng) {
  return mat_add(snr, x, random_mat(snr, x.rows(), x.cols(), rng, 1, 4));
}

template <SemiNearRing S>
UpperTri<typename S::Elem> enlarge(const S& snr, const UpperTri<typename S::Elem>& x,
                                   Rng& rng) {
  return ut_add(snr, x, random_tri(snr, x.shape(), rng, 1, 4));
}

/// Random CNF grammar: 2..max_nt nonterminals N0.. (start N0), 1..max_terms
/// terminals from "abc", 1..max_binary binary rules, and one unary rule per
/// terminal plus up to two extra.
inline Grammar random_cnf_grammar(std::uint64_t seed, std::size_t max_nt = 5,
                                  std::size_t max_binary = 8, std::size_t max_terms = 3) {
  Rng rng(seed);
  const std::size_t nts = 2 + draw_below(rng, max_nt - 1);
  const std::size_t terms = 1 + draw_below(rng, max_terms);
  const std::size_t binaries = 1 + draw_below(rng, max_binary);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nts; ++i) names.push_back("N" + std::to_string(i));
  std::vector<BinaryRule> binary;
  for (std::size_t r = 0; r < binaries; ++r)
    binary.push_back({draw_below(rng, nts), draw_below(rng, nts), draw_below(rng, nts)});
  std::vector<UnaryRule> unary;
  for (std::size_t t = 0; t < terms; ++t)
    unary.push_back({draw_below(rng, nts), std::string(1, static_cast<char>('a' + t))});
  const std::size_t extra = draw_below(rng, 3);
  for (std::size_t r = 0; r < extra; ++r)
    unary.push_back({draw_below(rng, nts),
                     std::string(1, static_cast<char>('a' + draw_below(rng, terms)))});
  return Grammar(names, binary, unary, 0);
}

/// All token sequences of length 1..max_len over the alphabet.
inline std::vector<std::vector<std::string>> all_strings(const std::vector<std::string>& alphabet,
                                                         std::size_t max_len) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::vector<std::string>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : layer)
      for (const auto& a : alphabet) {
        auto w = prefix;
        w.push_back(a);
        next.push_back(std::move(w));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace valiant::testing
