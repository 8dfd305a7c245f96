#pragma once

#include "intramorph/core.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace intramorph {

struct Expr;

/// Binary operation; `op` is '+' or '*'. Children are immutable and shared.
struct Operation {
  char op = '+';
  std::shared_ptr<const Expr> left;
  std::shared_ptr<const Expr> right;
};

struct Variable {
  std::string name;
};

struct Constant {
  std::uint64_t value = 0;
};

struct Expr {
  std::variant<Operation, Variable, Constant> node;
};

Expr make_operation(char op, Expr left, Expr right);
Expr make_variable(std::string name);
Expr make_constant(std::uint64_t value);

bool operator==(const Expr& a, const Expr& b);

std::size_t node_count(const Expr& e);
/// A leaf has depth 0.
std::size_t depth(const Expr& e);
bool contains_operator(const Expr& e, char op);

/// "LEFT op RIGHT" with single spaces; an addition operand of a
/// multiplication is wrapped as "(...)". No other parentheses are emitted.
std::string as_string_infix(const Expr& e);
std::string as_string_prefix(const Expr& e);
std::string as_string_postfix(const Expr& e);

using InfixPrinter = std::function<std::string(const Expr&)>;

/// Splits on single spaces and sorts. Parentheses are removed first when
/// `strip_parentheses` is set.
std::vector<std::string> sorted_tokens(std::string_view text, bool strip_parentheses);

/// The three renderings contain the same multiset of tokens once the
/// parentheses are removed from the infix text.
bool same_tokens(std::string_view infix, std::string_view prefix, std::string_view postfix);

bool token_multiset_relation(const Expr& tree, const InfixPrinter& infix = as_string_infix);

/// Catalogue: paren-left-as-right, drop-right-operand, paren-missing
/// (blind spot of the token relation).
const std::vector<MutantSpec>& ast_mutants();

/// Infix printer with the named fault. Throws ConfigurationError for
/// unknown names.
InfixPrinter inject_ast_mutant(std::string_view name);

/// original: tree -> [infix]; variant: tree -> [prefix, postfix].
ProgramPair<Expr, std::vector<std::string>> printer_pair(InfixPrinter infix = as_string_infix);
IntramorphicRelation<std::vector<std::string>> token_relation();

std::string render(const Expr& e);

} // namespace intramorph
