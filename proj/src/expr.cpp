#include "lipopt/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

#include "lipopt/errors.hpp"

namespace lipopt {

enum class FnKind { Sin, Cos, Tan, Exp, Log, Abs, Sqrt };

struct ExprAst::Node {
  enum class Kind { Constant, Var, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
  double value = 0.0;  // Constant
  FnKind fn = FnKind::Sin;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using Node = ExprAst::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_const(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Constant;
  n->value = v;
  return n;
}

NodePtr make_node(Node::Kind kind, NodePtr a, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_call(FnKind fn, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Call;
  n->fn = fn;
  n->a = std::move(arg);
  return n;
}

double eval_node(const Node& n, double x) {
  switch (n.kind) {
    case Node::Kind::Constant: return n.value;
    case Node::Kind::Var: return x;
    case Node::Kind::Neg: return -eval_node(*n.a, x);
    case Node::Kind::Add: return eval_node(*n.a, x) + eval_node(*n.b, x);
    case Node::Kind::Sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
    case Node::Kind::Mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
    case Node::Kind::Div: return eval_node(*n.a, x) / eval_node(*n.b, x);
    case Node::Kind::Pow: return std::pow(eval_node(*n.a, x), eval_node(*n.b, x));
    case Node::Kind::Call: {
      const double v = eval_node(*n.a, x);
      switch (n.fn) {
        case FnKind::Sin: return std::sin(v);
        case FnKind::Cos: return std::cos(v);
        case FnKind::Tan: return std::tan(v);
        case FnKind::Exp: return std::exp(v);
        case FnKind::Log: return std::log(v);
        case FnKind::Abs: return std::fabs(v);
        case FnKind::Sqrt: return std::sqrt(v);
      }
      return std::numeric_limits<double>::quiet_NaN();
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("operator or end of input");
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos_, expected,
                      "syntax error at offset " + std::to_string(pos_) + ": expected " + expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept('+')) lhs = make_node(Node::Kind::Add, lhs, term());
      else if (accept('-')) lhs = make_node(Node::Kind::Sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      if (accept('*')) lhs = make_node(Node::Kind::Mul, lhs, factor());
      else if (accept('/')) lhs = make_node(Node::Kind::Div, lhs, factor());
      else return lhs;
    }
  }

  NodePtr factor() {
    if (accept('-')) return make_node(Node::Kind::Neg, power());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) return make_node(Node::Kind::Pow, base, factor());
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("number, 'x', function call, or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("number, 'x', function call, or '('");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
      pos_ = start;
      fail("number");
    }
    // exponent is only consumed when a digit actually follows, so "2e"
    // falls through as number 2 followed by the identifier e
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        ++p;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        pos_ = p;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc()) {
      pos_ = start;
      fail("number");
    }
    return make_const(value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "x") {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Var;
      return n;
    }
    if (name == "pi") return make_const(3.14159265358979323846);
    if (name == "e") return make_const(2.71828182845904523536);

    FnKind fn;
    if (name == "sin") fn = FnKind::Sin;
    else if (name == "cos") fn = FnKind::Cos;
    else if (name == "tan") fn = FnKind::Tan;
    else if (name == "exp") fn = FnKind::Exp;
    else if (name == "log") fn = FnKind::Log;
    else if (name == "abs") fn = FnKind::Abs;
    else if (name == "sqrt") fn = FnKind::Sqrt;
    else
      throw UnknownIdentifierError(start, "unknown identifier '" + name + "' at offset " +
                                              std::to_string(start));
    if (!accept('(')) fail("'(' after function name");
    NodePtr arg = expr();
    if (!accept(')')) fail("')'");
    return make_call(fn, arg);
  }
};

}  // namespace

double ExprAst::eval(double x) const { return eval_node(*root_, x); }

Objective ExprAst::to_objective() const {
  auto root = root_;
  return Objective(source_, [root](double x) { return eval_node(*root, x); });
}

ExprAst parse_expression(std::string_view text) {
  ExprAst ast;
  ast.root_ = Parser(text).parse();
  ast.source_.assign(text);
  return ast;
}

}  // namespace lipopt
