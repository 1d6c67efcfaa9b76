#include "valiant/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>

#include "valiant/closure.hpp"

namespace valiant {

GrammarError::GrammarError(const std::string& message, std::size_t line,
                           std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Grammar

Grammar::Grammar(std::vector<std::string> nonterminals, std::vector<BinaryRule> binary,
                 std::vector<UnaryRule> unary, NonTerminal start)
    : nonterminals_(std::move(nonterminals)),
      binary_(std::move(binary)),
      unary_(std::move(unary)),
      start_(start) {
  const std::size_t n = nonterminals_.size();
  if (n == 0) throw GrammarError("grammar declares no nonterminals");
  if (n > kMaxNonterminals)
    throw GrammarError("grammar has " + std::to_string(n) +
                       " nonterminals; at most 64 are supported");
  if (start_ >= n) throw GrammarError("start symbol is not a declared nonterminal");
  for (const auto& r : binary_)
    if (r.lhs >= n || r.left >= n || r.right >= n)
      throw GrammarError("binary rule refers to an undeclared nonterminal");
  std::set<std::string> terms;
  for (const auto& r : unary_) {
    if (r.lhs >= n) throw GrammarError("unary rule refers to an undeclared nonterminal");
    if (r.terminal.empty()) throw GrammarError("empty terminal");
    terms.insert(r.terminal);
    auto it = sing_.find(r.terminal);
    if (it == sing_.end()) it = sing_.emplace(r.terminal, NTSet{}).first;
    it->second.insert(r.lhs);
  }
  terminals_.assign(terms.begin(), terms.end());
}

std::optional<NonTerminal> Grammar::find(std::string_view name) const {
  for (std::size_t i = 0; i < nonterminals_.size(); ++i)
    if (nonterminals_[i] == name) return i;
  return std::nullopt;
}

NTSet Grammar::sing(std::string_view token) const {
  auto it = sing_.find(token);
  return it == sing_.end() ? NTSet{} : it->second;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Lexeme {
  enum class Kind { name, arrow, colon, quoted };
  Kind kind;
  std::string text;
  std::size_t column;
};

bool is_name_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c >= 0x80;
}

std::vector<Lexeme> lex_line(std::string_view line, std::size_t lineno) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (std::isspace(c) != 0) {
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Lexeme::Kind::arrow, "->", col});
      i += 2;
    } else if (c == ':') {
      out.push_back({Lexeme::Kind::colon, ":", col});
      ++i;
    } else if (c == '\'') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '\\' && i + 1 < line.size() &&
            (line[i + 1] == '\'' || line[i + 1] == '\\')) {
          text.push_back(line[i + 1]);
          i += 2;
        } else if (line[i] == '\'') {
          closed = true;
          ++i;
          break;
        } else {
          text.push_back(line[i++]);
        }
      }
      if (!closed) throw GrammarError("unterminated terminal", lineno, col);
      if (text.empty()) throw GrammarError("empty terminal", lineno, col);
      out.push_back({Lexeme::Kind::quoted, std::move(text), col});
    } else if (is_name_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_name_char(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Lexeme::Kind::name, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      throw GrammarError(std::string("unexpected character '") + line[i] + "'",
                         lineno, col);
    }
  }
  return out;
}

class GrammarBuilder {
 public:
  NonTerminal intern(const Lexeme& lx, std::size_t lineno) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == lx.text) return i;
    if (names_.size() == kMaxNonterminals)
      throw GrammarError("more than 64 nonterminals", lineno, lx.column);
    names_.push_back(lx.text);
    return names_.size() - 1;
  }

  void line(std::string_view text, std::size_t lineno) {
    const auto lx = lex_line(text, lineno);
    if (lx.empty()) return;
    using K = Lexeme::Kind;

    if (lx[0].kind == K::name && lx[0].text == "start" && lx.size() >= 2 &&
        lx[1].kind == K::colon) {
      if (start_) throw GrammarError("duplicate start line", lineno, lx[0].column);
      if (lx.size() != 3 || lx[2].kind != K::name)
        throw GrammarError("expected `start: <nonterminal>`", lineno, lx[0].column);
      start_ = intern(lx[2], lineno);
      start_pos_ = {lineno, lx[2].column};
      return;
    }

    if (lx[0].kind == K::quoted)
      throw GrammarError("terminal on the left-hand side", lineno, lx[0].column);
    if (lx[0].kind != K::name)
      throw GrammarError("expected a nonterminal", lineno, lx[0].column);
    if (lx.size() < 2 || lx[1].kind != K::arrow)
      throw GrammarError("expected `->`", lineno,
                         lx.size() < 2 ? text.size() + 1 : lx[1].column);
    if (lx.size() == 2)
      throw GrammarError("nullary rule (empty right-hand side) is not allowed",
                         lineno, lx[1].column);

    const NonTerminal lhs = intern(lx[0], lineno);
    if (lx.size() == 3 && lx[2].kind == K::quoted) {
      unary_.push_back({lhs, lx[2].text});
    } else if (lx.size() == 4 && lx[2].kind == K::name && lx[3].kind == K::name) {
      const NonTerminal left = intern(lx[2], lineno);
      const NonTerminal right = intern(lx[3], lineno);
      binary_.push_back({lhs, left, right});
    } else {
      throw GrammarError(
          "right-hand side must be `NT NT` or a single quoted terminal", lineno,
          lx[2].column);
    }
    used_.insert(lhs);
    for (const auto& l : lx)
      if (l.kind == K::name) used_.insert(*find(l.text));
  }

  Grammar finish() {
    if (!start_) throw GrammarError("missing `start:` line");
    if (!used_.contains(*start_))
      throw GrammarError("unknown start symbol '" + names_[*start_] + "'",
                         start_pos_.first, start_pos_.second);
    return Grammar(names_, binary_, unary_, *start_);
  }

 private:
  std::optional<NonTerminal> find(const std::string& s) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == s) return i;
    return std::nullopt;
  }

  std::vector<std::string> names_;
  std::vector<BinaryRule> binary_;
  std::vector<UnaryRule> unary_;
  std::optional<NonTerminal> start_;
  std::pair<std::size_t, std::size_t> start_pos_{0, 0};
  std::set<NonTerminal> used_;
};

std::string quote_terminal(const std::string& t) {
  std::string out = "'";
  for (char c : t) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "'";
}

}  // namespace

Grammar load_grammar(std::string_view text) {
  GrammarBuilder builder;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    builder.line(line, ++lineno);
    pos = nl + 1;
  }
  return builder.finish();
}

Grammar load_grammar_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GrammarError("cannot open grammar file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_grammar(buf.str());
}

std::string to_text(const Grammar& g) {
  std::string out = "start: " + g.name(g.start()) + "\n";
  for (const auto& r : g.binary_rules())
    out += g.name(r.lhs) + " -> " + g.name(r.left) + " " + g.name(r.right) + "\n";
  for (const auto& r : g.unary_rules())
    out += g.name(r.lhs) + " -> " + quote_terminal(r.terminal) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Semi-near-ring on nonterminal sets

GrammarSnr::GrammarSnr(const Grammar& g)
    : names_(g.nonterminals()), by_left_(g.nonterminal_count()) {
  for (const auto& r : g.binary_rules()) {
    auto& row = by_left_[r.left];
    auto it = std::find_if(row.begin(), row.end(),
                           [&](const Pairing& p) { return p.right == r.right; });
    if (it == row.end()) it = row.insert(row.end(), Pairing{r.right, 0});
    it->lhs |= std::uint64_t{1} << r.lhs;
  }
}

NTSet GrammarSnr::mul(NTSet x, NTSet y) const {
  std::uint64_t out = 0;
  x.for_each([&](NonTerminal b) {
    for (const auto& p : by_left_[b])
      if (y.contains(p.right)) out |= p.lhs;
  });
  return NTSet(out);
}

NTSet GrammarSnr::sample(Rng& rng) const {
  const std::size_t n = names_.size();
  const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return NTSet(rng() & mask);
}

std::string GrammarSnr::show(NTSet x) const {
  std::string out = "{";
  bool first = true;
  x.for_each([&](NonTerminal n) {
    out += (first ? "" : ",") + (n < names_.size() ? names_[n] : std::to_string(n));
    first = false;
  });
  return out + "}";
}

// ---------------------------------------------------------------------------
// Charts

UpperTri<NTSet> initial_chart(const Grammar& g, std::span<const std::string> tokens,
                              ChartShape shape) {
  if (tokens.empty()) throw std::invalid_argument("empty input: the empty string is not parsed");
  const GrammarSnr snr(g);
  const std::size_t n = tokens.size() + 1;
  const Shape s = shape == ChartShape::balanced ? shape_for(n) : skewed_shape(n);
  auto chart = UpperTri<NTSet>::zero(s);
  for (std::size_t i = 0; i < tokens.size(); ++i)
    chart = set_cell(snr, chart, i, i + 1, g.sing(tokens[i]));
  return chart;
}

UpperTri<NTSet> complete_chart(const Grammar& g, std::span<const std::string> tokens,
                               ChartShape shape) {
  return closure(GrammarSnr(g), initial_chart(g, tokens, shape));
}

bool recognize(const Grammar& g, std::span<const std::string> tokens, ChartShape shape) {
  const auto chart = complete_chart(g, tokens, shape);
  return get_cell(GrammarSnr(g), chart, 0, tokens.size()).contains(g.start());
}

namespace {

using DenseChart = std::vector<std::vector<NTSet>>;

ParseTree extract(const Grammar& g, std::span<const std::string> tokens,
                  const DenseChart& chart, NonTerminal target, std::size_t i,
                  std::size_t j) {
  ParseTree node;
  node.begin = i;
  node.end = j;
  if (j == i + 1) {
    const auto& rules = g.unary_rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (rules[r].lhs == target && rules[r].terminal == tokens[i]) {
        node.kind = ParseTree::Kind::leaf;
        node.rule = r;
        return node;
      }
    }
    throw std::logic_error("parse: chart cell has no matching unary rule");
  }
  const auto& rules = g.binary_rules();
  for (std::size_t k = i + 1; k < j; ++k) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto& rule = rules[r];
      if (rule.lhs == target && chart[i][k].contains(rule.left) &&
          chart[k][j].contains(rule.right)) {
        node.kind = ParseTree::Kind::branch;
        node.rule = r;
        node.children.push_back(extract(g, tokens, chart, rule.left, i, k));
        node.children.push_back(extract(g, tokens, chart, rule.right, k, j));
        return node;
      }
    }
  }
  throw std::logic_error("parse: chart cell has no matching binary rule");
}

NonTerminal root_symbol(const Grammar& g, const ParseTree& t) {
  return t.kind == ParseTree::Kind::leaf ? g.unary_rules()[t.rule].lhs
                                         : g.binary_rules()[t.rule].lhs;
}

bool valid_node(const Grammar& g, std::span<const std::string> tokens,
                const ParseTree& t) {
  if (t.begin >= t.end || t.end > tokens.size()) return false;
  if (t.kind == ParseTree::Kind::leaf) {
    return t.children.empty() && t.rule < g.unary_rules().size() &&
           t.end == t.begin + 1 && g.unary_rules()[t.rule].terminal == tokens[t.begin];
  }
  if (t.rule >= g.binary_rules().size() || t.children.size() != 2) return false;
  const auto& rule = g.binary_rules()[t.rule];
  const auto& l = t.children[0];
  const auto& r = t.children[1];
  if (l.begin != t.begin || l.end != r.begin || r.end != t.end) return false;
  if (!valid_node(g, tokens, l) || !valid_node(g, tokens, r)) return false;
  return root_symbol(g, l) == rule.left && root_symbol(g, r) == rule.right;
}

}  // namespace

std::optional<ParseTree> parse(const Grammar& g, std::span<const std::string> tokens) {
  const GrammarSnr snr(g);
  const auto chart = to_dense(snr, complete_chart(g, tokens));
  if (!chart[0][tokens.size()].contains(g.start())) return std::nullopt;
  return extract(g, tokens, chart, g.start(), 0, tokens.size());
}

bool validate_tree(const Grammar& g, std::span<const std::string> tokens,
                   const ParseTree& tree) {
  if (tokens.empty() || tree.begin != 0 || tree.end != tokens.size()) return false;
  if (!valid_node(g, tokens, tree)) return false;
  return root_symbol(g, tree) == g.start();
}

std::vector<std::string> tree_yield(const Grammar& g, const ParseTree& tree) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const ParseTree& t) -> void {
    if (t.kind == ParseTree::Kind::leaf) {
      out.push_back(g.unary_rules().at(t.rule).terminal);
      return;
    }
    for (const auto& c : t.children) self(self, c);
  };
  walk(walk, tree);
  return out;
}

// ---------------------------------------------------------------------------
// S-expressions

namespace {

void write_sexpr(const Grammar& g, const ParseTree& t, std::string& out) {
  out += '(';
  if (t.kind == ParseTree::Kind::leaf) {
    const auto& rule = g.unary_rules().at(t.rule);
    out += g.name(rule.lhs);
    out += " \"";
    for (char c : rule.terminal) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
  } else {
    out += g.name(g.binary_rules().at(t.rule).lhs);
    for (const auto& c : t.children) {
      out += ' ';
      write_sexpr(g, c, out);
    }
  }
  out += ')';
}

class SexprReader {
 public:
  SexprReader(const Grammar& g, std::string_view text) : g_(g), text_(text) {}

  ParseTree read_all() {
    std::size_t next = 0;
    ParseTree t = node(next);
    skip_space();
    if (pos_ != text_.size()) fail("trailing text");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string symbol() {
    skip_space();
    const std::size_t b = pos_;
    while (pos_ < text_.size() && is_name_char(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (b == pos_) fail("expected a nonterminal");
    return std::string(text_.substr(b, pos_ - b));
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    expect('"');
    return out;
  }

  NonTerminal lookup(const std::string& name) {
    auto n = g_.find(name);
    if (!n) fail("unknown nonterminal '" + name + "'");
    return *n;
  }

  ParseTree node(std::size_t& next_token) {
    expect('(');
    const NonTerminal lhs = lookup(symbol());
    skip_space();
    ParseTree t;
    t.begin = next_token;
    if (pos_ < text_.size() && text_[pos_] == '"') {
      const std::string term = quoted();
      const auto& rules = g_.unary_rules();
      auto it = std::find_if(rules.begin(), rules.end(), [&](const UnaryRule& r) {
        return r.lhs == lhs && r.terminal == term;
      });
      if (it == rules.end()) fail("no unary rule " + g_.name(lhs) + " -> '" + term + "'");
      t.kind = ParseTree::Kind::leaf;
      t.rule = static_cast<std::size_t>(it - rules.begin());
      t.end = ++next_token;
    } else {
      ParseTree left = node(next_token);
      ParseTree right = node(next_token);
      const NonTerminal l = root_symbol(g_, left);
      const NonTerminal r = root_symbol(g_, right);
      const auto& rules = g_.binary_rules();
      auto it = std::find_if(rules.begin(), rules.end(), [&](const BinaryRule& br) {
        return br.lhs == lhs && br.left == l && br.right == r;
      });
      if (it == rules.end())
        fail("no binary rule " + g_.name(lhs) + " -> " + g_.name(l) + " " + g_.name(r));
      t.kind = ParseTree::Kind::branch;
      t.rule = static_cast<std::size_t>(it - rules.begin());
      t.end = next_token;
      t.children.push_back(std::move(left));
      t.children.push_back(std::move(right));
    }
    expect(')');
    return t;
  }

  const Grammar& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const Grammar& g, const ParseTree& tree) {
  std::string out;
  write_sexpr(g, tree, out);
  return out;
}

ParseTree tree_from_sexpr(const Grammar& g, std::string_view text) {
  return SexprReader(g, text).read_all();
}

// ---------------------------------------------------------------------------
// Language enumeration

std::set<std::vector<std::string>> enumerate_language(const Grammar& g,
                                                      std::size_t max_len) {
  if (max_len > kMaxEnumerationLength)
    throw std::invalid_argument("enumerate_language: max_len above " +
                                std::to_string(kMaxEnumerationLength));
  // Symbols: >= 0 is a terminal index, < 0 is nonterminal -(n + 1).
  using Form = std::vector<int>;
  const auto& terms = g.terminals();
  auto term_index = [&](const std::string& t) {
    return static_cast<int>(std::lower_bound(terms.begin(), terms.end(), t) - terms.begin());
  };

  std::set<std::vector<std::string>> language;
  if (max_len == 0) return language;

  std::set<Form> seen;
  std::deque<Form> queue;
  Form root{-static_cast<int>(g.start()) - 1};
  seen.insert(root);
  queue.push_back(root);

  while (!queue.empty()) {
    Form form = std::move(queue.front());
    queue.pop_front();
    auto first_nt = std::find_if(form.begin(), form.end(), [](int s) { return s < 0; });
    if (first_nt == form.end()) {
      std::vector<std::string> words;
      for (int s : form) words.push_back(terms[static_cast<std::size_t>(s)]);
      language.insert(std::move(words));
      continue;
    }
    const auto pos = static_cast<std::size_t>(first_nt - form.begin());
    const auto nt = static_cast<NonTerminal>(-*first_nt - 1);

    auto push = [&](Form next) {
      // Every symbol yields at least one terminal.
      if (next.size() > max_len) return;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    };
    for (const auto& r : g.unary_rules()) {
      if (r.lhs != nt) continue;
      Form next = form;
      next[pos] = term_index(r.terminal);
      push(std::move(next));
    }
    for (const auto& r : g.binary_rules()) {
      if (r.lhs != nt) continue;
      Form next;
      next.reserve(form.size() + 1);
      next.insert(next.end(), form.begin(), form.begin() + static_cast<std::ptrdiff_t>(pos));
      next.push_back(-static_cast<int>(r.left) - 1);
      next.push_back(-static_cast<int>(r.right) - 1);
      next.insert(next.end(), form.begin() + static_cast<std::ptrdiff_t>(pos) + 1, form.end());
      push(std::move(next));
    }
  }
  return language;
}

// ---------------------------------------------------------------------------

std::vector<std::string> tokenize(std::string_view input, TokenMode mode) {
  std::vector<std::string> out;
  if (mode == TokenMode::chars) {
    for (char c : input) out.emplace_back(1, c);
    return out;
  }
  std::size_t i = 0;
  while (i < input.size()) {
    while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
    const std::size_t b = i;
    while (i < input.size() && !std::isspace(static_cast<unsigned char>(input[i]))) ++i;
    if (b < i) out.emplace_back(input.substr(b, i - b));
  }
  return out;
}

}  // namespace valiant
