// Reference solvers that share no code path with closure()/completion(),
// plus the leastness and monotonicity checks built on top of them.

#pragma once

#include <stdexcept>
#include <string>

#include "valiant/closure.hpp"

namespace valiant {

/// A fixpoint iteration did not stabilise within its cap. Only happens for
/// instances that break the algebraic laws.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterates C <- w + C*C from C = w until stable; at most size(w) rounds.
template <SemiNearRing S>
UpperTri<typename S::Elem> kleene_closure(const S& snr,
                                          const UpperTri<typename S::Elem>& w) {
  auto current = w;
  const std::size_t cap = w.shape().size();
  for (std::size_t round = 0; round < cap; ++round) {
    auto next = ut_add(snr, w, ut_mul(snr, current, current));
    if (ut_eq(snr, next, current)) return next;
    current = std::move(next);
  }
  throw ConvergenceError("kleene_closure: no fixpoint after " +
                         std::to_string(cap) + " rounds");
}

/// Dense chart fill by increasing span:
/// C[i][j] = w[i][j] + sum over i<k<j of C[i][k] * C[k][j].
template <SemiNearRing S>
UpperTri<typename S::Elem> cyk_closure(const S& snr,
                                       const UpperTri<typename S::Elem>& w) {
  auto chart = to_dense(snr, w);
  const std::size_t n = chart.size();
  for (std::size_t span = 2; span < n; ++span) {
    for (std::size_t i = 0; i + span < n; ++i) {
      const std::size_t j = i + span;
      auto cell = chart[i][j];
      for (std::size_t k = i + 1; k < j; ++k)
        cell = snr.add(cell, snr.mul(chart[i][k], chart[k][j]));
      chart[i][j] = std::move(cell);
    }
  }
  return tri_from_dense(snr, chart, w.shape());
}

/// Iterates x <- y + (a*x + x*b) from x = y; at most size(a) + size(b)
/// rounds.
template <SemiNearRing S>
Mat<typename S::Elem> solve_linear_iterative(
    const S& snr, const UpperTri<typename S::Elem>& a,
    const Mat<typename S::Elem>& y, const UpperTri<typename S::Elem>& b) {
  if (!(y.rows() == a.shape()) || !(y.cols() == b.shape()))
    throw ShapeMismatch("solve_linear_iterative: corner shape does not match");
  const auto ea = embed(a);
  const auto eb = embed(b);
  auto x = y;
  const std::size_t cap = a.shape().size() + b.shape().size();
  for (std::size_t round = 0; round < cap; ++round) {
    auto next = mat_add(snr, y, mat_add(snr, mat_mul(snr, ea, x), mat_mul(snr, x, eb)));
    if (mat_eq(snr, next, x)) return next;
    x = std::move(next);
  }
  throw ConvergenceError("solve_linear_iterative: no fixpoint after " +
                         std::to_string(cap) + " rounds");
}

/// candidate solves the closure equation and coincides, in both directions
/// of the order, with the chart-filling least solution.
template <SemiNearRing S>
bool check_least(const S& snr, const UpperTri<typename S::Elem>& w,
                 const UpperTri<typename S::Elem>& candidate) {
  if (!closure_equation_holds(snr, w, candidate)) return false;
  const auto least = cyk_closure(snr, w);
  return ut_leq(snr, candidate, least) && ut_leq(snr, least, candidate);
}

/// Completion is monotone: inputs ordered pointwise give ordered outputs.
/// Throws std::invalid_argument unless a<=a2, y<=y2 and b<=b2.
template <SemiNearRing S>
bool check_completion_mono(const S& snr, const UpperTri<typename S::Elem>& a,
                           const UpperTri<typename S::Elem>& a2,
                           const Mat<typename S::Elem>& y,
                           const Mat<typename S::Elem>& y2,
                           const UpperTri<typename S::Elem>& b,
                           const UpperTri<typename S::Elem>& b2) {
  if (!ut_leq(snr, a, a2) || !mat_leq(snr, y, y2) || !ut_leq(snr, b, b2))
    throw std::invalid_argument("check_completion_mono: inputs are not ordered");
  return mat_leq(snr, completion(snr, a, y, b), completion(snr, a2, y2, b2));
}

}  // namespace valiant
