// CNF grammars, their nonterminal-set semi-near-ring, and chart parsing on
// top of closure().

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valiant/algebra.hpp"
#include "valiant/upper_tri.hpp"

namespace valiant {

inline constexpr std::size_t kMaxNonterminals = 64;

using NonTerminal = std::size_t;

/// Set of nonterminal indices below kMaxNonterminals; one chart cell.
class NTSet {
 public:
  constexpr NTSet() = default;
  constexpr explicit NTSet(std::uint64_t bits) : bits_(bits) {}
  NTSet(std::initializer_list<NonTerminal> members) {
    for (auto m : members) insert(m);
  }

  constexpr bool contains(NonTerminal n) const {
    return n < kMaxNonterminals && ((bits_ >> n) & 1U) != 0;
  }
  void insert(NonTerminal n) {
    if (n >= kMaxNonterminals) throw std::out_of_range("NTSet: index too large");
    bits_ |= std::uint64_t{1} << n;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  friend constexpr NTSet operator|(NTSet a, NTSet b) { return NTSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(NTSet, NTSet) = default;

  /// Calls f(n) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      f(static_cast<NonTerminal>(std::countr_zero(rest)));
  }

 private:
  std::uint64_t bits_ = 0;
};

struct BinaryRule {
  NonTerminal lhs;
  NonTerminal left;
  NonTerminal right;
};

struct UnaryRule {
  NonTerminal lhs;
  std::string terminal;
};

/// Grammar text could not be loaded. line/column are 1-based, 0 if unknown.
class GrammarError : public std::runtime_error {
 public:
  GrammarError(const std::string& message, std::size_t line = 0,
               std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A grammar in Chomsky normal form without the empty-string rule.
class Grammar {
 public:
  /// Validates rule indices, the start symbol and the nonterminal cap.
  Grammar(std::vector<std::string> nonterminals, std::vector<BinaryRule> binary,
          std::vector<UnaryRule> unary, NonTerminal start);

  const std::vector<std::string>& nonterminals() const { return nonterminals_; }
  std::size_t nonterminal_count() const { return nonterminals_.size(); }
  const std::string& name(NonTerminal n) const { return nonterminals_.at(n); }
  std::optional<NonTerminal> find(std::string_view name) const;

  /// Sorted, duplicate-free.
  const std::vector<std::string>& terminals() const { return terminals_; }
  const std::vector<BinaryRule>& binary_rules() const { return binary_; }
  const std::vector<UnaryRule>& unary_rules() const { return unary_; }
  NonTerminal start() const { return start_; }

  /// Left-hand sides of the unary rules producing `token`.
  NTSet sing(std::string_view token) const;

 private:
  std::vector<std::string> nonterminals_;
  std::vector<std::string> terminals_;
  std::vector<BinaryRule> binary_;
  std::vector<UnaryRule> unary_;
  NonTerminal start_;
  std::map<std::string, NTSet, std::less<>> sing_;
};

/// Parses the text grammar format:
///   start: S
///   S -> L R
///   L -> '('
/// `#` starts a comment; quotes inside terminals are written \'.
Grammar load_grammar(std::string_view text);
Grammar load_grammar_file(const std::filesystem::path& path);

/// Writes a grammar back in the text format accepted by load_grammar.
std::string to_text(const Grammar& g);

/// Nonterminal sets under union and rule-filtered product.
class GrammarSnr {
 public:
  using Elem = NTSet;

  explicit GrammarSnr(const Grammar& g);

  NTSet zero() const { return NTSet{}; }
  NTSet add(NTSet x, NTSet y) const { return x | y; }
  NTSet mul(NTSet x, NTSet y) const;
  bool eq(NTSet x, NTSet y) const { return x == y; }
  bool is_zero(NTSet x) const { return x.empty(); }
  /// Uniform subset of the declared nonterminals.
  NTSet sample(Rng& rng) const;
  std::string show(NTSet x) const;

 private:
  struct Pairing {
    NonTerminal right;
    std::uint64_t lhs;
  };
  std::vector<std::string> names_;
  std::vector<std::vector<Pairing>> by_left_;
};

/// Free-function spelling of Grammar::sing.
inline NTSet sing(const Grammar& g, std::string_view token) { return g.sing(token); }

enum class ChartShape { balanced, skewed };

/// Strictly upper (n+1)x(n+1) chart with cell (i, i+1) = sing(tokens[i]).
UpperTri<NTSet> initial_chart(const Grammar& g, std::span<const std::string> tokens,
                              ChartShape shape = ChartShape::balanced);

/// closure(initial_chart(...)); cell (i, j) holds the nonterminals deriving
/// tokens[i..j).
UpperTri<NTSet> complete_chart(const Grammar& g, std::span<const std::string> tokens,
                               ChartShape shape = ChartShape::balanced);

bool recognize(const Grammar& g, std::span<const std::string> tokens,
               ChartShape shape = ChartShape::balanced);

/// A derivation tree. Leaves cite a unary rule, branches a binary rule;
/// [begin, end) is the token span the node covers.
struct ParseTree {
  enum class Kind { leaf, branch };

  Kind kind = Kind::leaf;
  std::size_t rule = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<ParseTree> children;  // empty for leaves, two for branches
};

/// One derivation of the input rooted at the start symbol, if any. Ties are
/// broken by the smallest split point, then by rule declaration order.
std::optional<ParseTree> parse(const Grammar& g, std::span<const std::string> tokens);

/// Checks spans, rule references, leaf tokens and the root.
bool validate_tree(const Grammar& g, std::span<const std::string> tokens,
                   const ParseTree& tree);

/// (S (L "(") (R ")"))
std::string to_sexpr(const Grammar& g, const ParseTree& tree);

/// Reads the output of to_sexpr back; spans are recomputed from the leaves.
/// Throws std::invalid_argument on malformed text or unknown rules.
ParseTree tree_from_sexpr(const Grammar& g, std::string_view text);

std::vector<std::string> tree_yield(const Grammar& g, const ParseTree& tree);

inline constexpr std::size_t kMaxEnumerationLength = 10;

/// Every token sequence of length <= max_len derivable from the start
/// symbol, by breadth-first leftmost expansion of sentential forms.
std::set<std::vector<std::string>> enumerate_language(const Grammar& g,
                                                      std::size_t max_len);

enum class TokenMode { chars, whitespace };

std::vector<std::string> tokenize(std::string_view input, TokenMode mode);

}  // namespace valiant
