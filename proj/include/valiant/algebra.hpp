// Semi-near-ring contract, the order it induces, and the stock instances.
//
// A semi-near-ring is an idempotent commutative monoid (zero, add) together
// with a multiplication for which zero is absorbing and which distributes
// over add on both sides. Multiplication is neither associative nor unital.
// That is what lets a grammar's binary rules act as the multiplication.

#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace valiant {

/// Deterministic generator used for sampling everywhere in the library.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Avoids std::uniform_int_distribution so
/// that samples are identical across standard libraries.
inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

template <class S>
concept SemiNearRing = requires(const S& s, const typename S::Elem& x,
                                Rng& rng) {
  typename S::Elem;
  { s.zero() } -> std::convertible_to<typename S::Elem>;
  { s.add(x, x) } -> std::convertible_to<typename S::Elem>;
  { s.mul(x, x) } -> std::convertible_to<typename S::Elem>;
  { s.eq(x, x) } -> std::convertible_to<bool>;
  { s.sample(rng) } -> std::convertible_to<typename S::Elem>;
  { s.show(x) } -> std::convertible_to<std::string>;
};

/// Instances that can cheaply recognise their zero. Matrices use this to
/// collapse 1x1 cells holding zero into the sparse Zero node.
template <class S>
concept HasZeroHint = SemiNearRing<S> && requires(const S& s,
                                                  const typename S::Elem& x) {
  { s.is_zero(x) } -> std::convertible_to<bool>;
};

template <SemiNearRing S>
bool is_zero_hinted(const S& snr, const typename S::Elem& x) {
  if constexpr (HasZeroHint<S>) {
    return snr.is_zero(x);
  } else {
    return false;
  }
}

/// x <= y iff x + y == y.
template <SemiNearRing S>
bool leq(const S& snr, const typename S::Elem& x, const typename S::Elem& y) {
  return snr.eq(snr.add(x, y), y);
}

// ---------------------------------------------------------------------------
// Booleans: or / and.

struct BoolSnr {
  using Elem = bool;

  bool zero() const { return false; }
  bool add(bool x, bool y) const { return x || y; }
  bool mul(bool x, bool y) const { return x && y; }
  bool eq(bool x, bool y) const { return x == y; }
  bool is_zero(bool x) const { return !x; }
  bool sample(Rng& rng) const { return (rng() & 1U) != 0; }
  std::string show(bool x) const { return x ? "true" : "false"; }
};

// ---------------------------------------------------------------------------
// Min-plus over non-negative integers extended with infinity.

class Cost {
 public:
  static constexpr std::uint64_t kInfinity =
      std::numeric_limits<std::uint64_t>::max();

  constexpr Cost() = default;
  constexpr explicit Cost(std::uint64_t value) : value_(value) {}
  static constexpr Cost infinity() { return Cost(kInfinity); }

  constexpr bool is_infinite() const { return value_ == kInfinity; }
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(Cost, Cost) = default;
  friend constexpr auto operator<=>(Cost, Cost) = default;

 private:
  std::uint64_t value_ = kInfinity;
};

struct MinPlusSnr {
  using Elem = Cost;

  Cost zero() const { return Cost::infinity(); }
  Cost add(Cost x, Cost y) const { return x < y ? x : y; }
  Cost mul(Cost x, Cost y) const {
    if (x.is_infinite() || y.is_infinite()) return Cost::infinity();
    // Saturate instead of wrapping.
    if (x.value() > Cost::kInfinity - 1 - y.value()) return Cost::infinity();
    return Cost(x.value() + y.value());
  }
  bool eq(Cost x, Cost y) const { return x == y; }
  bool is_zero(Cost x) const { return x.is_infinite(); }
  /// Draws from {0..9, inf}.
  Cost sample(Rng& rng) const {
    auto v = draw_below(rng, 11);
    return v == 10 ? Cost::infinity() : Cost(v);
  }
  std::string show(Cost x) const {
    return x.is_infinite() ? "inf" : std::to_string(x.value());
  }
};

// ---------------------------------------------------------------------------
// Law suite.

struct LawResult {
  std::string law;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
  std::vector<std::string> failed_laws() const {
    std::vector<std::string> out;
    for (const auto& r : results)
      if (!r.passed) out.push_back(r.law);
    return out;
  }
};

/// Evaluates every semi-near-ring law on `samples` triples drawn from `seed`.
/// Each law appears exactly once in the report; the first counterexample
/// found is recorded.
template <SemiNearRing S>
LawReport check_laws(const S& snr, std::size_t samples, std::uint64_t seed) {
  using E = typename S::Elem;
  struct Law {
    const char* name;
    bool (*holds)(const S&, const E&, const E&, const E&);
  };
  static const Law kLaws[] = {
      {"add_identity",
       [](const S& s, const E& x, const E&, const E&) {
         return s.eq(s.add(x, s.zero()), x);
       }},
      {"add_commutative",
       [](const S& s, const E& x, const E& y, const E&) {
         return s.eq(s.add(x, y), s.add(y, x));
       }},
      {"add_associative",
       [](const S& s, const E& x, const E& y, const E& z) {
         return s.eq(s.add(x, s.add(y, z)), s.add(s.add(x, y), z));
       }},
      {"idempotence",
       [](const S& s, const E& x, const E&, const E&) {
         return s.eq(s.add(x, x), x);
       }},
      {"zero_absorbs_left",
       [](const S& s, const E& x, const E&, const E&) {
         return s.eq(s.mul(s.zero(), x), s.zero());
       }},
      {"zero_absorbs_right",
       [](const S& s, const E& x, const E&, const E&) {
         return s.eq(s.mul(x, s.zero()), s.zero());
       }},
      {"left_distributive",
       [](const S& s, const E& x, const E& y, const E& z) {
         return s.eq(s.mul(x, s.add(y, z)), s.add(s.mul(x, y), s.mul(x, z)));
       }},
      {"right_distributive",
       [](const S& s, const E& x, const E& y, const E& z) {
         return s.eq(s.mul(s.add(y, z), x), s.add(s.mul(y, x), s.mul(z, x)));
       }},
      {"zero_hint_sound",
       [](const S& s, const E& x, const E&, const E&) {
         return !is_zero_hinted(s, x) || s.eq(x, s.zero());
       }},
  };

  LawReport report;
  for (const auto& law : kLaws) report.results.push_back({law.name, true, {}});

  Rng rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    const E x = snr.sample(rng);
    const E y = snr.sample(rng);
    const E z = snr.sample(rng);
    for (std::size_t i = 0; i < std::size(kLaws); ++i) {
      auto& result = report.results[i];
      if (!result.passed) continue;
      if (!kLaws[i].holds(snr, x, y, z)) {
        result.passed = false;
        result.counterexample = "x=" + snr.show(x) + " y=" + snr.show(y) +
                                " z=" + snr.show(z);
      }
    }
  }
  return report;
}

}  // namespace valiant
