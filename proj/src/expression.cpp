#include "nambu/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "nambu/errors.hpp"

namespace nambu {

namespace expr {

namespace {

struct FunctionInfo {
  Function function;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FunctionInfo, 9> kFunctions{{
    {Function::Sin, "sin", 1},
    {Function::Cos, "cos", 1},
    {Function::Tan, "tan", 1},
    {Function::Sqrt, "sqrt", 1},
    {Function::Abs, "abs", 1},
    {Function::Exp, "exp", 1},
    {Function::Log, "log", 1},
    {Function::Atan2, "atan2", 2},
    {Function::Pow, "pow", 2},
}};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& info : kFunctions) {
    if (info.name == name) return info.function;
  }
  return std::nullopt;
}

}  // namespace

std::string_view function_name(Function f) {
  return kFunctions[static_cast<std::size_t>(f)].name;
}

std::size_t function_arity(Function f) {
  return kFunctions[static_cast<std::size_t>(f)].arity;
}

bool equivalent(const Node& a, const Node& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.value);
        if constexpr (std::is_same_v<T, Literal>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Coordinate>) {
          return lhs.index == rhs.index;
        } else if constexpr (std::is_same_v<T, Parameter>) {
          return lhs.name == rhs.name && lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return equivalent(*lhs.operand, *rhs.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return lhs.op == rhs.op && equivalent(*lhs.lhs, *rhs.lhs) &&
                 equivalent(*lhs.rhs, *rhs.rhs);
        } else {
          if (lhs.function != rhs.function) return false;
          for (std::size_t i = 0; i < lhs.args.size(); ++i) {
            if (!equivalent(*lhs.args[i], *rhs.args[i])) return false;
          }
          return true;
        }
      },
      a.value);
}

}  // namespace expr

namespace {

using namespace expr;

NodePtr make(auto value) {
  return std::make_shared<const Node>(Node{std::move(value)});
}

enum class TokenKind { End, Number, Identifier, Op, LParen, RParen, Comma };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t position;
  double number = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const noexcept { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      current_ = {TokenKind::End, {}, pos_};
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number(start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      current_ = {TokenKind::Identifier, text_.substr(start, pos_ - start),
                  start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '^':
        current_ = {TokenKind::Op, text_.substr(start, 1), start};
        return;
      case '(':
        current_ = {TokenKind::LParen, text_.substr(start, 1), start};
        return;
      case ')':
        current_ = {TokenKind::RParen, text_.substr(start, 1), start};
        return;
      case ',':
        current_ = {TokenKind::Comma, text_.substr(start, 1), start};
        return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
  }

  void lex_number(std::size_t start) {
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        ++pos_;
      }
      if (digits() == 0) throw ParseError("malformed exponent", start);
    }
    const std::string_view lexeme = text_.substr(start, pos_ - start);
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
    if (ec != std::errc() || ptr != lexeme.data() + lexeme.size()) {
      throw ParseError("malformed number", start);
    }
    current_ = {TokenKind::Number, lexeme, start, value};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{TokenKind::End, {}, 0};
};

class Parser {
 public:
  Parser(std::string_view text, const PhaseSpace& space,
         const ParameterMap& params)
      : lexer_(text), space_(space), params_(params) {}

  NodePtr parse() {
    NodePtr root = expression();
    if (lexer_.peek().kind != TokenKind::End) {
      throw ParseError("unexpected '" + std::string(lexer_.peek().text) + "'",
                       lexer_.peek().position);
    }
    return root;
  }

 private:
  bool at_op(char op) const {
    const Token& t = lexer_.peek();
    return t.kind == TokenKind::Op && t.text[0] == op;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    while (at_op('+') || at_op('-')) {
      const char op = lexer_.take().text[0];
      lhs = make(Binary{op, lhs, term()});
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (at_op('*') || at_op('/')) {
      const char op = lexer_.take().text[0];
      lhs = make(Binary{op, lhs, unary()});
    }
    return lhs;
  }

  NodePtr unary() {
    if (at_op('-')) {
      lexer_.take();
      return make(Negate{unary()});
    }
    if (at_op('+')) {
      lexer_.take();
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (at_op('^')) {
      lexer_.take();
      return make(Binary{'^', base, unary()});
    }
    return base;
  }

  NodePtr primary() {
    Token t = lexer_.take();
    switch (t.kind) {
      case TokenKind::Number:
        return make(Literal{t.number});
      case TokenKind::Identifier:
        return identifier(t);
      case TokenKind::LParen: {
        NodePtr inner = expression();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::End:
        throw ParseError("unexpected end of expression", t.position);
      default:
        throw ParseError("unexpected '" + std::string(t.text) + "'",
                         t.position);
    }
  }

  NodePtr identifier(const Token& t) {
    const std::string name(t.text);
    if (lexer_.peek().kind == TokenKind::LParen) {
      auto fn = lookup_function(name);
      if (!fn) throw ParseError("unknown function '" + name + "'", t.position);
      lexer_.take();
      std::vector<NodePtr> args;
      if (lexer_.peek().kind != TokenKind::RParen) {
        args.push_back(expression());
        while (lexer_.peek().kind == TokenKind::Comma) {
          lexer_.take();
          args.push_back(expression());
        }
      }
      expect(TokenKind::RParen, "')'");
      if (args.size() != function_arity(*fn)) {
        throw ParseError(name + " expects " +
                             std::to_string(function_arity(*fn)) +
                             " argument(s), got " + std::to_string(args.size()),
                         t.position);
      }
      return make(Call{*fn, std::move(args)});
    }
    if (auto index = space_.index_of(name)) {
      return make(Coordinate{*index, name});
    }
    if (auto it = params_.find(name); it != params_.end()) {
      return make(Parameter{name, it->second});
    }
    if (name == "pi") return make(Parameter{name, std::numbers::pi});
    if (lookup_function(name)) {
      throw ParseError("function '" + name + "' used without arguments",
                       t.position);
    }
    throw ParseError("unknown identifier '" + name + "'", t.position);
  }

  void expect(TokenKind kind, const char* what) {
    const Token& t = lexer_.peek();
    if (t.kind != kind) {
      throw ParseError(std::string("expected ") + what, t.position);
    }
    lexer_.take();
  }

  Lexer lexer_;
  const PhaseSpace& space_;
  const ParameterMap& params_;
};

double eval_node(const Node& node, PointView x) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Coordinate>) {
          return x[n.index];
        } else if constexpr (std::is_same_v<T, Parameter>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -eval_node(*n.operand, x);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const double a = eval_node(*n.lhs, x);
          const double b = eval_node(*n.rhs, x);
          switch (n.op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            case '/': return a / b;
            default: return std::pow(a, b);
          }
        } else {
          const double a = eval_node(*n.args[0], x);
          switch (n.function) {
            case Function::Sin: return std::sin(a);
            case Function::Cos: return std::cos(a);
            case Function::Tan: return std::tan(a);
            case Function::Sqrt: return std::sqrt(a);
            case Function::Abs: return std::abs(a);
            case Function::Exp: return std::exp(a);
            // log(0) is -inf and log(<0) is NaN; both surface as singular.
            case Function::Log: return std::log(a);
            case Function::Atan2: return std::atan2(a, eval_node(*n.args[1], x));
            case Function::Pow: return std::pow(a, eval_node(*n.args[1], x));
          }
          return 0.0;
        }
      },
      node.value);
}

// Binding strength used by the printer.
enum Precedence { kAdditive = 1, kMultiplicative = 2, kUnary = 3, kPower = 4,
                  kPrimary = 5 };

int precedence(const Node& node) {
  if (const auto* b = std::get_if<Binary>(&node.value)) {
    switch (b->op) {
      case '+':
      case '-': return kAdditive;
      case '*':
      case '/': return kMultiplicative;
      default: return kPower;
    }
  }
  if (std::holds_alternative<Negate>(node.value)) return kUnary;
  return kPrimary;
}

std::string render(const Node& node);

std::string wrap_unless(const Node& node, bool bare) {
  return bare ? render(node) : "(" + render(node) + ")";
}

std::string render(const Node& node) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Literal>) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", n.value);
          return buf;
        } else if constexpr (std::is_same_v<T, Coordinate>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Parameter>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "-" + wrap_unless(*n.operand, precedence(*n.operand) >= kUnary);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int p = precedence(node);
          std::string lhs, rhs;
          if (n.op == '^') {
            lhs = wrap_unless(*n.lhs, precedence(*n.lhs) == kPrimary);
            rhs = wrap_unless(*n.rhs, precedence(*n.rhs) >= kUnary);
          } else {
            lhs = wrap_unless(*n.lhs, precedence(*n.lhs) >= p);
            rhs = wrap_unless(*n.rhs, precedence(*n.rhs) > p);
          }
          return lhs + n.op + rhs;
        } else {
          std::string out(function_name(n.function));
          out += '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ',';
            out += render(*n.args[i]);
          }
          return out + ')';
        }
      },
      node.value);
}

}  // namespace

double Expression::evaluate(PointView x) const { return eval_node(*root_, x); }

std::string Expression::to_string() const { return render(*root_); }

Expression parse_expression(std::string_view text, const PhaseSpace& space,
                            const ParameterMap& params) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw ParseError("empty expression", 0);
  }
  Parser parser(text, space, params);
  return Expression(space, parser.parse());
}

}  // namespace nambu
