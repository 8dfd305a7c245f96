#include "intramorph/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace intramorph {

namespace {

enum class InfixFault { none, paren_left_as_right, drop_right_operand, paren_missing };

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_addition(const Expr& e) {
  const auto* operation = std::get_if<Operation>(&e.node);
  return operation != nullptr && operation->op == '+';
}

std::string leaf_text(const Expr& e) {
  if (const auto* v = std::get_if<Variable>(&e.node)) {
    return v->name;
  }
  return std::to_string(std::get<Constant>(e.node).value);
}

std::string infix(const Expr& e, InfixFault fault) {
  const auto* operation = std::get_if<Operation>(&e.node);
  if (operation == nullptr) {
    return leaf_text(e);
  }
  std::string left = infix(*operation->left, fault);
  std::string right = infix(*operation->right, fault);
  if (operation->op == '*' && fault != InfixFault::paren_missing) {
    if (is_addition(*operation->left)) {
      left = '(' + left + ')';
    }
    if (is_addition(*operation->right)) {
      right = fault == InfixFault::paren_left_as_right ? '(' + left + ')' : '(' + right + ')';
    }
  }
  if (fault == InfixFault::drop_right_operand) {
    return left + ' ' + operation->op;
  }
  return left + ' ' + operation->op + ' ' + right;
}

std::string polish(const Expr& e, bool operator_first) {
  const auto* operation = std::get_if<Operation>(&e.node);
  if (operation == nullptr) {
    return leaf_text(e);
  }
  const std::string left = polish(*operation->left, operator_first);
  const std::string right = polish(*operation->right, operator_first);
  if (operator_first) {
    return std::string(1, operation->op) + ' ' + left + ' ' + right;
  }
  return left + ' ' + right + ' ' + operation->op;
}

} // namespace

Expr make_operation(char op, Expr left, Expr right) {
  if (op != '+' && op != '*') {
    throw std::invalid_argument(std::string("unsupported operator: ") + op);
  }
  return Expr{Operation{op, std::make_shared<const Expr>(std::move(left)),
                        std::make_shared<const Expr>(std::move(right))}};
}

Expr make_variable(std::string name) { return Expr{Variable{std::move(name)}}; }

Expr make_constant(std::uint64_t value) { return Expr{Constant{value}}; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) {
    return false;
  }
  return std::visit(overloaded{
                        [&](const Operation& x) {
                          const auto& y = std::get<Operation>(b.node);
                          return x.op == y.op && *x.left == *y.left && *x.right == *y.right;
                        },
                        [&](const Variable& x) { return x.name == std::get<Variable>(b.node).name; },
                        [&](const Constant& x) { return x.value == std::get<Constant>(b.node).value; },
                    },
                    a.node);
}

std::size_t node_count(const Expr& e) {
  const auto* operation = std::get_if<Operation>(&e.node);
  return operation == nullptr ? 1 : 1 + node_count(*operation->left) + node_count(*operation->right);
}

std::size_t depth(const Expr& e) {
  const auto* operation = std::get_if<Operation>(&e.node);
  return operation == nullptr ? 0 : 1 + std::max(depth(*operation->left), depth(*operation->right));
}

bool contains_operator(const Expr& e, char op) {
  const auto* operation = std::get_if<Operation>(&e.node);
  return operation != nullptr &&
         (operation->op == op || contains_operator(*operation->left, op) ||
          contains_operator(*operation->right, op));
}

std::string as_string_infix(const Expr& e) { return infix(e, InfixFault::none); }

std::string as_string_prefix(const Expr& e) { return polish(e, true); }

std::string as_string_postfix(const Expr& e) { return polish(e, false); }

std::vector<std::string> sorted_tokens(std::string_view text, bool strip_parentheses) {
  std::string cleaned(text);
  if (strip_parentheses) {
    std::erase_if(cleaned, [](char c) { return c == '(' || c == ')'; });
  }
  std::vector<std::string> tokens;
  std::size_t start = 0;
  for (;;) {
    const std::size_t space = cleaned.find(' ', start);
    tokens.push_back(cleaned.substr(start, space - start));
    if (space == std::string::npos) {
      break;
    }
    start = space + 1;
  }
  std::sort(tokens.begin(), tokens.end());
  return tokens;
}

bool same_tokens(std::string_view infix_text, std::string_view prefix, std::string_view postfix) {
  const auto infix_tokens = sorted_tokens(infix_text, true);
  return infix_tokens == sorted_tokens(prefix, false) && infix_tokens == sorted_tokens(postfix, false);
}

bool token_multiset_relation(const Expr& tree, const InfixPrinter& infix_printer) {
  return same_tokens(infix_printer(tree), as_string_prefix(tree), as_string_postfix(tree));
}

const std::vector<MutantSpec>& ast_mutants() {
  static const std::vector<MutantSpec> catalog{
      {"paren-left-as-right", "parenthesized right operand is built from the left operand", false},
      {"drop-right-operand", "infix printer omits the right operand", false},
      {"paren-missing", "infix printer never adds parentheses (invisible once parentheses are stripped)", true},
  };
  return catalog;
}

InfixPrinter inject_ast_mutant(std::string_view name) {
  InfixFault fault;
  if (name == "paren-left-as-right") {
    fault = InfixFault::paren_left_as_right;
  } else if (name == "drop-right-operand") {
    fault = InfixFault::drop_right_operand;
  } else if (name == "paren-missing") {
    fault = InfixFault::paren_missing;
  } else {
    throw ConfigurationError("unknown ast mutant: " + std::string(name));
  }
  return [fault](const Expr& e) { return infix(e, fault); };
}

ProgramPair<Expr, std::vector<std::string>> printer_pair(InfixPrinter infix_printer) {
  return {
      [infix_printer = std::move(infix_printer)](Expr tree) {
        return std::vector<std::string>{infix_printer(tree)};
      },
      [](Expr tree) {
        return std::vector<std::string>{as_string_prefix(tree), as_string_postfix(tree)};
      },
      {Granularity::function_added, ApplicationMode::added_alongside, Automation::manual, true, false},
  };
}

IntramorphicRelation<std::vector<std::string>> token_relation() {
  return {[](const std::vector<std::string>& original, const std::vector<std::string>& variant) {
            return original.size() == 1 && variant.size() == 2 &&
                   same_tokens(original[0], variant[0], variant[1]);
          },
          std::nullopt};
}

std::string render(const Expr& e) {
  return std::visit(overloaded{
                        [](const Operation& x) {
                          return std::string("Operation('") + x.op + "', " + render(*x.left) + ", " +
                                 render(*x.right) + ")";
                        },
                        [](const Variable& x) { return "Variable('" + x.name + "')"; },
                        [](const Constant& x) { return "Constant(" + std::to_string(x.value) + ")"; },
                    },
                    e.node);
}

} // namespace intramorph
