#include "ifns/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace ifns {

SyntaxError::SyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : InputError(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

EvalError::EvalError(const std::string& what, std::size_t component)
    : std::runtime_error(what + " in component " + std::to_string(component)), component_(component) {}

std::string_view to_string(Func f) noexcept {
  switch (f) {
    case Func::abs:
      return "abs";
    case Func::sqrt:
      return "sqrt";
    case Func::min:
      return "min";
    case Func::max:
      return "max";
    case Func::sin:
      return "sin";
    case Func::cos:
      return "cos";
    case Func::exp:
      return "exp";
    case Func::log:
      return "log";
  }
  return "?";
}

std::size_t arity(Func f) noexcept { return (f == Func::min || f == Func::max) ? 2 : 1; }

namespace {

ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

/// Recursive-descent parser. Grammar, loosest to tightest binding:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?          (right-associative)
///   primary := number | xN | func '(' args ')' | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view src, std::size_t dimension, std::size_t line, std::size_t column)
      : src_(src), dim_(dimension), line_(line), col_(column) {}

  ExprPtr parse_all() {
    skip_ws();
    if (at_end()) fail("empty expression");
    auto e = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  ExprPtr expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = make(BinaryNode{Arith::add, lhs, term()});
      } else if (accept('-')) {
        lhs = make(BinaryNode{Arith::sub, lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        lhs = make(BinaryNode{Arith::mul, lhs, unary()});
      } else if (accept('/')) {
        lhs = make(BinaryNode{Arith::div, lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    skip_ws();
    if (accept('-')) return make(NegateNode{unary()});
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    skip_ws();
    if (accept('^')) return make(BinaryNode{Arith::pow, base, unary()});
    return base;
  }

  ExprPtr primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (accept('(')) {
      auto e = expr();
      skip_ws();
      expect(')');
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) advance();
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        while (pos_ < look) advance();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
    }
    const auto text = src_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) fail_at(start_col_of(start), "malformed number");
    return make(ConstantNode{value});
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    const std::size_t start_col = col_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) advance();
    const std::string name(src_.substr(start, pos_ - start));

    if (name.size() >= 2 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos && name[1] != '0' && name.size() <= 10) {
      const std::size_t index = std::stoul(name.substr(1));
      if (index >= 1 && index <= dim_) return make(VariableNode{index - 1});
      fail_at(start_col, "unknown identifier '" + name + "' (dimension is " + std::to_string(dim_) + ")");
    }

    static constexpr Func kFuncs[] = {Func::abs, Func::sqrt, Func::min, Func::max,
                                      Func::sin, Func::cos,  Func::exp, Func::log};
    for (Func f : kFuncs) {
      if (name != to_string(f)) continue;
      skip_ws();
      expect('(');
      std::vector<ExprPtr> args;
      skip_ws();
      if (!accept(')')) {
        args.push_back(expr());
        skip_ws();
        while (accept(',')) {
          args.push_back(expr());
          skip_ws();
        }
        expect(')');
      }
      if (args.size() != arity(f)) {
        fail_at(start_col, name + " expects " + std::to_string(arity(f)) + " argument(s), got " +
                               std::to_string(args.size()));
      }
      return make(CallNode{f, std::move(args)});
    }
    fail_at(start_col, "unknown identifier '" + name + "'");
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of expression");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
  }

  // Numbers never span lines, so the start column is recoverable.
  std::size_t start_col_of(std::size_t start) const { return col_ - (pos_ - start); }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& msg) const { throw SyntaxError(msg, line_, col); }

  std::string_view src_;
  std::size_t dim_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_;
};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

char arith_symbol(Arith op) {
  switch (op) {
    case Arith::add:
      return '+';
    case Arith::sub:
      return '-';
    case Arith::mul:
      return '*';
    case Arith::div:
      return '/';
    case Arith::pow:
      return '^';
  }
  return '?';
}

}  // namespace

ExprPtr parse_expr(std::string_view source, std::size_t dimension, std::size_t line, std::size_t column) {
  return Parser(source, dimension, line, column).parse_all();
}

ExprPtr parse_expr(std::string_view source, std::size_t dimension) { return parse_expr(source, dimension, 1, 1); }

std::string print_expr(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstantNode>) {
          return format_number(n.value);
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return "x" + std::to_string(n.index + 1);
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          return "(-" + print_expr(*n.operand) + ")";
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return "(" + print_expr(*n.lhs) + " " + arith_symbol(n.op) + " " + print_expr(*n.rhs) + ")";
        } else {
          std::string out(to_string(n.func));
          out += "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ", ";
            out += print_expr(*n.args[i]);
          }
          return out + ")";
        }
      },
      e.node);
}

bool same_structure(const Expr& a, const Expr& b) noexcept {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        const auto& m = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, ConstantNode>) {
          return n.value == m.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return n.index == m.index;
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          return same_structure(*n.operand, *m.operand);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return n.op == m.op && same_structure(*n.lhs, *m.lhs) && same_structure(*n.rhs, *m.rhs);
        } else {
          if (n.func != m.func || n.args.size() != m.args.size()) return false;
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (!same_structure(*n.args[i], *m.args[i])) return false;
          }
          return true;
        }
      },
      a.node);
}

namespace {

double eval_node(const Expr& e, const Vector& x, bool& nonfinite) {
  const double v = std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstantNode>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return x(static_cast<Eigen::Index>(n.index));
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          return -eval_node(*n.operand, x, nonfinite);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          const double l = eval_node(*n.lhs, x, nonfinite);
          const double r = eval_node(*n.rhs, x, nonfinite);
          switch (n.op) {
            case Arith::add:
              return l + r;
            case Arith::sub:
              return l - r;
            case Arith::mul:
              return l * r;
            case Arith::div:
              return l / r;
            case Arith::pow:
              return std::pow(l, r);
          }
          return 0.0;
        } else {
          const double a0 = eval_node(*n.args[0], x, nonfinite);
          switch (n.func) {
            case Func::abs:
              return std::abs(a0);
            case Func::sqrt:
              return std::sqrt(a0);
            case Func::min:
              return std::min(a0, eval_node(*n.args[1], x, nonfinite));
            case Func::max:
              return std::max(a0, eval_node(*n.args[1], x, nonfinite));
            case Func::sin:
              return std::sin(a0);
            case Func::cos:
              return std::cos(a0);
            case Func::exp:
              return std::exp(a0);
            case Func::log:
              return std::log(a0);
          }
          return 0.0;
        }
      },
      e.node);
  if (!std::isfinite(v)) nonfinite = true;
  return v;
}

}  // namespace

double eval_expr(const Expr& e, const Vector& x, bool* nonfinite_seen) {
  bool nonfinite = false;
  const double v = eval_node(e, x, nonfinite);
  if (nonfinite_seen) *nonfinite_seen = nonfinite;
  return v;
}

}  // namespace ifns
