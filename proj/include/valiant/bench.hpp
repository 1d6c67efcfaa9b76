#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "valiant/grammar.hpp"

namespace valiant {

/// Balanced parentheses of even length n. The string is a concatenation of
/// blocks "(" inner ")" of random even lengths, and each inner part is
/// generated the same way, so inputs are nested and concatenated at every
/// level.
std::string hierarchical_parens(std::size_t n, std::uint64_t seed);

struct BenchRow {
  std::size_t n;
  double valiant_ms;
  double cyk_ms;
  double kleene_ms;
};

/// Times closure of the initial chart of hierarchical_parens(n) with each
/// algorithm; every time is the median of `reps` runs. Throws if the three
/// results disagree.
std::vector<BenchRow> run_bench(const Grammar& g, std::span<const std::size_t> sizes,
                                std::size_t reps, std::uint64_t seed);

/// n,valiant_ms,cyk_ms,kleene_ms
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace valiant
