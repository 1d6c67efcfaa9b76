#include "valiant/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "valiant/oracles.hpp"

namespace valiant {

namespace {

void append_parens(std::size_t len, Rng& rng, std::string& out) {
  std::size_t remaining = len;
  while (remaining > 0) {
    const std::size_t block = 2 * (1 + draw_below(rng, remaining / 2));
    out += '(';
    append_parens(block - 2, rng, out);
    out += ')';
    remaining -= block;
  }
}

template <class F>
double median_ms(std::size_t reps, F&& run) {
  std::vector<double> times;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

std::string hierarchical_parens(std::size_t n, std::uint64_t seed) {
  if (n % 2 != 0) throw std::invalid_argument("hierarchical_parens: length must be even");
  Rng rng(seed);
  std::string out;
  out.reserve(n);
  append_parens(n, rng, out);
  return out;
}

std::vector<BenchRow> run_bench(const Grammar& g, std::span<const std::size_t> sizes,
                                std::size_t reps, std::uint64_t seed) {
  if (reps == 0) throw std::invalid_argument("bench: reps must be at least 1");
  const GrammarSnr snr(g);
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    if (n == 0 || n % 2 != 0)
      throw std::invalid_argument("bench: sizes must be positive and even, got " +
                                  std::to_string(n));
    const auto tokens = tokenize(hierarchical_parens(n, seed + n), TokenMode::chars);
    const auto w = initial_chart(g, tokens);

    UpperTri<NTSet> by_valiant, by_cyk, by_kleene;
    BenchRow row{n, 0, 0, 0};
    row.valiant_ms = median_ms(reps, [&] { by_valiant = closure(snr, w); });
    row.cyk_ms = median_ms(reps, [&] { by_cyk = cyk_closure(snr, w); });
    row.kleene_ms = median_ms(reps, [&] { by_kleene = kleene_closure(snr, w); });
    if (!ut_eq(snr, by_valiant, by_cyk) || !ut_eq(snr, by_valiant, by_kleene))
      throw std::logic_error("bench: closure algorithms disagree at n=" + std::to_string(n));
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out = "n,valiant_ms,cyk_ms,kleene_ms\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.3f,%.3f,%.3f\n", r.n, r.valiant_ms, r.cyk_ms,
                  r.kleene_ms);
    out += buf;
  }
  return out;
}

}  // namespace valiant
