#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nambu/phase_space.hpp"

namespace nambu {

// Abstract syntax tree for the field expression language. Grammar (EBNF):
//
//   expression = term , { ( "+" | "-" ) , term } ;
//   term       = unary , { ( "*" | "/" ) , unary } ;
//   unary      = ( "-" | "+" ) , unary | power ;
//   power      = primary , [ "^" , unary ] ;          (* right-assoc *)
//   primary    = number | identifier | call | "(" , expression , ")" ;
//   call       = function , "(" , expression , { "," , expression } , ")" ;
//   function   = "sin" | "cos" | "tan" | "sqrt" | "abs" | "exp" | "log"
//              | "atan2" | "pow" ;
//   number     = digits , [ "." , [ digits ] ] , [ exponent ]
//              | "." , digits , [ exponent ] ;
//   exponent   = ( "e" | "E" ) , [ "+" | "-" ] , digits ;
//
// An identifier resolves, in order, to a coordinate of the phase space, a
// named parameter, or the constant `pi`. Parameters bind their value at parse
// time.
namespace expr {

enum class Function { Sin, Cos, Tan, Sqrt, Abs, Exp, Log, Atan2, Pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Literal {
  double value;
};
struct Coordinate {
  std::size_t index;
  std::string name;
};
struct Parameter {
  std::string name;
  double value;
};
struct Negate {
  NodePtr operand;
};
struct Binary {
  char op;  // one of + - * / ^
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Function function;
  std::vector<NodePtr> args;
};

struct Node {
  std::variant<Literal, Coordinate, Parameter, Negate, Binary, Call> value;
};

std::string_view function_name(Function f);
std::size_t function_arity(Function f);

bool equivalent(const Node& a, const Node& b);

}  // namespace expr

using ParameterMap = std::map<std::string, double, std::less<>>;

class Expression {
 public:
  const PhaseSpace& space() const noexcept { return space_; }
  const expr::Node& root() const noexcept { return *root_; }

  // Raw evaluation; non-finite results are returned as-is.
  double evaluate(PointView x) const;

  // Minimal-parenthesis rendering that parses back to an equivalent tree
  // given the same parameter map.
  std::string to_string() const;

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.space_ == b.space_ && expr::equivalent(*a.root_, *b.root_);
  }

 private:
  friend Expression parse_expression(std::string_view, const PhaseSpace&,
                                     const ParameterMap&);
  Expression(PhaseSpace space, expr::NodePtr root)
      : space_(std::move(space)), root_(std::move(root)) {}

  PhaseSpace space_;
  expr::NodePtr root_;
};

// Throws ParseError on syntax errors, unknown identifiers and arity mismatch.
Expression parse_expression(std::string_view text, const PhaseSpace& space,
                            const ParameterMap& params = {});

}  // namespace nambu
