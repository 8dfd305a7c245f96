#include "intramorph/ast.hpp"
#include "intramorph/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace intramorph;

namespace {

Expr v(const char* name) { return make_variable(name); }
Expr c(std::uint64_t value) { return make_constant(value); }
Expr add(Expr l, Expr r) { return make_operation('+', std::move(l), std::move(r)); }
Expr mul(Expr l, Expr r) { return make_operation('*', std::move(l), std::move(r)); }

// Token multiset read off the tree itself, independent of any printer.
void collect(const Expr& e, std::vector<std::string>& out) {
  if (const auto* op = std::get_if<Operation>(&e.node)) {
    out.emplace_back(1, op->op);
    collect(*op->left, out);
    collect(*op->right, out);
  } else if (const auto* var = std::get_if<Variable>(&e.node)) {
    out.push_back(var->name);
  } else {
    out.push_back(std::to_string(std::get<Constant>(e.node).value));
  }
}

std::vector<std::string> tree_tokens(const Expr& e) {
  std::vector<std::string> out;
  collect(e, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(Ast, CanonicalGoldenStrings) {
  const Expr e = mul(add(v("a"), c(3)), c(2));
  EXPECT_EQ(as_string_infix(e), "(a + 3) * 2");
  EXPECT_EQ(as_string_prefix(e), "* + a 3 2");
  EXPECT_EQ(as_string_postfix(e), "a 3 + 2 *");
}

TEST(Ast, InfixParenthesizesOnlyAdditionUnderMultiplication) {
  EXPECT_EQ(as_string_infix(add(v("a"), mul(v("b"), c(1)))), "a + b * 1");
  EXPECT_EQ(as_string_infix(mul(v("a"), add(v("b"), c(1)))), "a * (b + 1)");
  EXPECT_EQ(as_string_infix(mul(add(v("a"), v("b")), add(v("c"), c(1)))), "(a + b) * (c + 1)");
  EXPECT_EQ(as_string_infix(mul(mul(v("a"), v("b")), v("c"))), "a * b * c");
  EXPECT_EQ(as_string_infix(add(add(v("a"), v("b")), v("c"))), "a + b + c");
  EXPECT_EQ(as_string_infix(c(7)), "7");
}

TEST(Ast, Leaves) {
  EXPECT_EQ(as_string_prefix(v("x")), "x");
  EXPECT_EQ(as_string_postfix(c(0)), "0");
  EXPECT_EQ(node_count(v("x")), 1u);
  EXPECT_EQ(depth(v("x")), 0u);
}

TEST(Ast, ConstructionAndMeasures) {
  const Expr e = mul(add(v("a"), c(3)), c(2));
  EXPECT_EQ(node_count(e), 5u);
  EXPECT_EQ(depth(e), 2u);
  EXPECT_TRUE(contains_operator(e, '+'));
  EXPECT_FALSE(contains_operator(add(v("a"), v("b")), '*'));
  EXPECT_THROW(make_operation('-', v("a"), v("b")), std::invalid_argument);
  EXPECT_TRUE(e == mul(add(v("a"), c(3)), c(2)));
  EXPECT_FALSE(e == mul(add(v("a"), c(4)), c(2)));
  EXPECT_EQ(render(mul(v("a"), c(3))), "Operation('*', Variable('a'), Constant(3))");
}

TEST(Ast, SortedTokens) {
  EXPECT_EQ(sorted_tokens("(a + 3) * 2", true), (std::vector<std::string>{"*", "+", "2", "3", "a"}));
  EXPECT_EQ(sorted_tokens("* + a 3 2", false), (std::vector<std::string>{"*", "+", "2", "3", "a"}));
  EXPECT_TRUE(same_tokens("(a + 3) * 2", "* + a 3 2", "a 3 + 2 *"));
  EXPECT_FALSE(same_tokens("(a + a) * 2", "* + a 3 2", "a 3 + 2 *"));
}

TEST(Ast, PrintersAgreeWithTreeTokensOnRandomTrees) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    SeededSource src(split_seed(42, i));
    const Expr e = random_tree(src);
    const auto expected = tree_tokens(e);
    ASSERT_EQ(sorted_tokens(as_string_infix(e), true), expected);
    ASSERT_EQ(sorted_tokens(as_string_prefix(e), false), expected);
    ASSERT_EQ(sorted_tokens(as_string_postfix(e), false), expected);
    ASSERT_TRUE(token_multiset_relation(e));
  }
}

TEST(Ast, ParenLeftAsRightTrace) {
  const auto printer = inject_ast_mutant("paren-left-as-right");
  const Expr e = mul(v("a"), add(v("b"), c(1)));
  EXPECT_EQ(printer(e), "a * (a)");
  EXPECT_FALSE(token_multiset_relation(e, printer));
  // Untouched when no addition sits on the right of a multiplication.
  EXPECT_EQ(printer(mul(add(v("a"), c(3)), c(2))), "(a + 3) * 2");
}

TEST(Ast, DropRightOperandBreaksTokens) {
  const auto printer = inject_ast_mutant("drop-right-operand");
  EXPECT_FALSE(token_multiset_relation(add(v("a"), v("b")), printer));
}

TEST(Ast, ParenMissingIsInvisibleToTokenRelation) {
  const auto printer = inject_ast_mutant("paren-missing");
  const Expr e = mul(add(v("a"), c(3)), c(2));
  EXPECT_EQ(printer(e), "a + 3 * 2");
  for (std::uint64_t i = 0; i < 2000; ++i) {
    SeededSource src(split_seed(7, i));
    ASSERT_TRUE(token_multiset_relation(random_tree(src), printer));
  }
}

TEST(Ast, CatalogueBlindSpots) {
  std::map<std::string, bool> blind;
  for (const auto& m : ast_mutants()) {
    blind[m.name] = m.blind_spot;
  }
  EXPECT_EQ(blind, (std::map<std::string, bool>{
                       {"paren-left-as-right", false}, {"drop-right-operand", false}, {"paren-missing", true}}));
  EXPECT_THROW(inject_ast_mutant("nope"), ConfigurationError);
}

TEST(Ast, PrinterPairOutputs) {
  const Expr e = mul(add(v("a"), c(3)), c(2));
  const auto pair = printer_pair();
  EXPECT_EQ(pair.original(e), (std::vector<std::string>{"(a + 3) * 2"}));
  EXPECT_EQ(pair.variant(e), (std::vector<std::string>{"* + a 3 2", "a 3 + 2 *"}));
  EXPECT_TRUE(evaluate_pair(pair, token_relation(), e).holds());
  EXPECT_EQ(pair.descriptor.granularity, Granularity::function_added);
}
