#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/generators.hpp"
#include "valiant/closure.hpp"
#include "valiant/grammar.hpp"
#include "valiant/oracles.hpp"

using namespace valiant;

namespace {

using Tokens = std::vector<std::string>;

Tokens chars(const std::string& s) { return tokenize(s, TokenMode::chars); }

std::string error_of(const std::string& text) {
  try {
    load_grammar(text);
  } catch (const GrammarError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("loading the paren fixture") {
  const Grammar g = testing::paren_grammar();
  CHECK(g.nonterminals() == std::vector<std::string>{"S", "L", "R", "X"});
  CHECK(g.binary_rules().size() == 4);
  CHECK(g.unary_rules().size() == 2);
  CHECK(g.terminals() == std::vector<std::string>{"(", ")"});
  CHECK(g.name(g.start()) == "S");
  CHECK(load_grammar(to_text(g)).nonterminals() == g.nonterminals());
  CHECK(to_text(load_grammar(to_text(g))) == to_text(g));
}

TEST_CASE("grammar format details") {
  const Grammar g = load_grammar(
      "# comment\n\nstart: Expr   # trailing\nExpr -> Term Term\nTerm -> 'it\\'s'\n"
      "Term -> '\\\\'\n");
  CHECK(g.terminals() == std::vector<std::string>{"\\", "it's"});
  CHECK(load_grammar(to_text(g)).terminals() == g.terminals());
}

TEST_CASE("grammar errors") {
  CHECK(error_of("start: S\nS ->\n").find("nullary rule") != std::string::npos);
  CHECK(error_of("S -> 'a'\n").find("missing `start:`") != std::string::npos);
  CHECK(error_of("start: T\nS -> 'a'\n").find("unknown start") != std::string::npos);
  CHECK(error_of("start: S\nstart: S\nS -> 'a'\n").find("duplicate start") != std::string::npos);
  CHECK(error_of("start: S\n'a' -> S S\n").find("terminal on the left") != std::string::npos);
  CHECK(error_of("start: S\nS -> 'a\n").find("unterminated") != std::string::npos);
  CHECK(error_of("start: S\nS => 'a'\n") != "");
  CHECK_FALSE(error_of("start: S\nS -> A B C\nA -> 'a'\n").empty());

  std::string many = "start: N0\n";
  for (int i = 0; i < 65; ++i)
    many += "N" + std::to_string(i) + " -> 'x'\n";
  CHECK(error_of(many).find("more than 64") != std::string::npos);

  try {
    load_grammar("start: S\nS -> L ?\n");
    FAIL("expected an error");
  } catch (const GrammarError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(load_grammar_file("/nonexistent/grammar.cnf"), GrammarError);
}

TEST_CASE("sing") {
  const Grammar g = testing::paren_grammar();
  CHECK(sing(g, "(") == NTSet{*g.find("L")});
  CHECK(sing(g, "z").empty());
  const Grammar amb = load_grammar_file(testing::data_path("ambiguous_open.cnf"));
  CHECK(sing(amb, "(") == NTSet{*amb.find("L"), *amb.find("Q")});
}

TEST_CASE("initial chart") {
  const Grammar g = testing::paren_grammar();
  GrammarSnr s(g);
  const auto c = initial_chart(g, chars("()"));
  CHECK(c.shape().size() == 3);
  CHECK(get_cell(s, c, 0, 1) == NTSet{*g.find("L")});
  CHECK(get_cell(s, c, 1, 2) == NTSet{*g.find("R")});
  CHECK(get_cell(s, c, 0, 2).empty());
  CHECK(initial_chart(g, chars("(")).shape().size() == 2);
  CHECK_THROWS_AS(initial_chart(g, Tokens{}), std::invalid_argument);
  CHECK_THROWS_AS(recognize(g, Tokens{}), std::invalid_argument);
}

TEST_CASE("recognize") {
  const Grammar g = testing::paren_grammar();
  CHECK(recognize(g, chars("()")));
  CHECK(recognize(g, chars("(())")));
  CHECK(recognize(g, chars("()(())")));
  CHECK_FALSE(recognize(g, chars("(")));
  CHECK_FALSE(recognize(g, chars(")(")));
  CHECK_FALSE(recognize(g, chars("(()")));

  GrammarSnr s(g);
  const auto chart = complete_chart(g, chars("(())"));
  CHECK(get_cell(s, chart, 1, 3).contains(*g.find("S")));
  CHECK(get_cell(s, chart, 1, 4).contains(*g.find("X")));
  CHECK(get_cell(s, chart, 0, 4).contains(*g.find("S")));
}

TEST_CASE("parse") {
  const Grammar g = testing::paren_grammar();
  const auto t1 = parse(g, chars("()"));
  REQUIRE(t1);
  CHECK(t1->kind == ParseTree::Kind::branch);
  CHECK(t1->rule == 0);
  CHECK(t1->children[0].begin == 0);
  CHECK(t1->children[1].begin == 1);
  CHECK(to_sexpr(g, *t1) == "(S (L \"(\") (R \")\"))");

  const auto t2 = parse(g, chars("(())"));
  REQUIRE(t2);
  CHECK(to_sexpr(g, *t2) == "(S (L \"(\") (X (S (L \"(\") (R \")\")) (R \")\")))");
  CHECK(validate_tree(g, chars("(())"), *t2));
  CHECK_FALSE(parse(g, chars("())")));
}

TEST_CASE("validate_tree rejects broken trees") {
  const Grammar g = testing::paren_grammar();
  const auto tokens = chars("()");
  const auto tree = *parse(g, tokens);
  REQUIRE(validate_tree(g, tokens, tree));

  auto swapped = tree;
  std::swap(swapped.children[0], swapped.children[1]);
  CHECK_FALSE(validate_tree(g, tokens, swapped));

  auto wrong_rule = tree;
  wrong_rule.rule = 2;  // X -> S R
  CHECK_FALSE(validate_tree(g, tokens, wrong_rule));

  auto bad_span = tree;
  bad_span.children[1].end = 3;
  CHECK_FALSE(validate_tree(g, tokens, bad_span));

  CHECK_FALSE(validate_tree(g, chars("(("), tree));
  CHECK_FALSE(validate_tree(g, chars("()()"), tree));

  CHECK_THROWS_AS(tree_from_sexpr(g, "(S (L \"(\")"), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_sexpr(g, "(S (Q \"(\") (R \")\"))"), std::invalid_argument);
}

TEST_CASE("enumerate_language") {
  const Grammar g = testing::paren_grammar();
  CHECK(enumerate_language(g, 4) ==
        std::set<Tokens>{chars("()"), chars("()()"), chars("(())")});
  CHECK(enumerate_language(load_grammar("start: S\nS -> S S\nS -> A A\nA -> S S\n"), 6).empty());
  CHECK(enumerate_language(load_grammar("start: S\nS -> 'a'\n"), 1) == std::set<Tokens>{{"a"}});
  CHECK_THROWS_AS(enumerate_language(g, 11), std::invalid_argument);
}

TEST_CASE("recognize agrees with enumeration on random grammars") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CAPTURE(seed);
    const Grammar g = testing::random_cnf_grammar(seed);
    const auto lang = enumerate_language(g, 5);
    for (const auto& w : testing::all_strings(g.terminals(), 5)) {
      const bool in = lang.count(w) > 0;
      REQUIRE(recognize(g, w) == in);
      REQUIRE(recognize(g, w, ChartShape::skewed) == in);
      const auto tree = parse(g, w);
      REQUIRE(tree.has_value() == in);
      if (tree) {
        REQUIRE(validate_tree(g, w, *tree));
        REQUIRE(tree_yield(g, *tree) == w);
        REQUIRE(validate_tree(g, w, tree_from_sexpr(g, to_sexpr(g, *tree))));
      }
    }
  }
}

TEST_CASE("complete chart equals the CYK chart") {
  const Grammar g = testing::paren_grammar();
  GrammarSnr s(g);
  for (const char* w : {"()", "(()())", "((()))()", "())(()"}) {
    CHECK(ut_eq(s, complete_chart(g, chars(w)), cyk_closure(s, initial_chart(g, chars(w)))));
    CHECK(to_dense(s, complete_chart(g, chars(w))) ==
          to_dense(s, complete_chart(g, chars(w), ChartShape::skewed)));
  }
}

TEST_CASE("tokenize") {
  CHECK(tokenize("(()", TokenMode::chars) == Tokens{"(", "(", ")"});
  CHECK(tokenize("  if  x then\ty\n", TokenMode::whitespace) == Tokens{"if", "x", "then", "y"});
  CHECK(tokenize("", TokenMode::chars).empty());
}
