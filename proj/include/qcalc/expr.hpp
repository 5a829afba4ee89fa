#pragma once

#include "qcalc/scalar.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qcalc {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax tree for the plain-text expression language shared by scalars,
// algebra elements, fixtures and the CLI:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= integer | '-' integer | '(' integer ('/' integer)? ')' | '(-' ... ')'
//   primary := number | symbol | symbol '(' expr (',' expr)* ')' | '(' expr ')'
//   symbol  := ident ('[' integer (',' integer)* ']')?
struct Expr {
  enum class Kind { Number, Symbol, Call, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  Rational number;            // Number
  Rational exponent;          // Pow
  std::string name;           // Symbol / Call
  std::vector<int> indices;   // Symbol subscripts, e.g. u[1,2]
  std::vector<std::shared_ptr<const Expr>> args;

  std::string symbol_key() const;  // "u[1,2]" style canonical name
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view text);

// Evaluates scalar-only expressions: numbers, q, v, lambda, lambdap and any
// names supplied by `extra`.
Scalar eval_scalar(const Expr& e, const PowerBasis& pb,
                   const std::function<std::optional<Scalar>(const Expr&)>& extra = {});

// Evaluates an expression into an algebra T. Scalar sub-expressions are folded
// exactly; symbols that are not scalars are looked up with `symbol`, function
// calls with `call`. T must provide +, -, *, unary -, and Scalar * T, and be
// constructible from a Scalar via `from_scalar`.
template <class T>
class ExprEvaluator {
public:
  using Value = std::variant<Scalar, T>;

  PowerBasis pb;
  std::function<std::optional<Scalar>(const Expr&)> scalar_symbol;
  std::function<T(const Expr&)> symbol;
  std::function<T(const std::string&, const std::vector<T>&)> call;
  std::function<T(const Scalar&)> from_scalar;
  std::function<T(const T&)> normalize;
  // Optional: the inverse of a non-scalar base, used for negative powers.
  std::function<std::optional<T>(const Expr&)> inverse;

  T operator()(const Expr& e) const { return as_algebra(eval(e)); }

  Value eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Number:
        return Scalar(e.number);
      case Expr::Kind::Symbol: {
        if (auto s = lookup_scalar(e)) return *s;
        if (!symbol) throw ParseError("unknown symbol '" + e.symbol_key() + "'");
        return symbol(e);
      }
      case Expr::Kind::Call: {
        if (!call) throw ParseError("function calls not supported here: " + e.name);
        std::vector<T> vals;
        for (const auto& a : e.args) vals.push_back(as_algebra(eval(*a)));
        return call(e.name, vals);
      }
      case Expr::Kind::Neg: {
        Value v = eval(*e.args[0]);
        if (auto* s = std::get_if<Scalar>(&v)) return -*s;
        return -std::get<T>(v);
      }
      case Expr::Kind::Add:
      case Expr::Kind::Sub: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        bool sub = e.kind == Expr::Kind::Sub;
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
          return sub ? std::get<Scalar>(a) - std::get<Scalar>(b)
                     : std::get<Scalar>(a) + std::get<Scalar>(b);
        }
        T ta = as_algebra(a);
        T tb = as_algebra(b);
        return fix(sub ? ta - tb : ta + tb);
      }
      case Expr::Kind::Mul: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        auto* sa = std::get_if<Scalar>(&a);
        auto* sb = std::get_if<Scalar>(&b);
        if (sa && sb) return *sa * *sb;
        if (sa) return fix(*sa * std::get<T>(b));
        if (sb) return fix(*sb * std::get<T>(a));
        return fix(std::get<T>(a) * std::get<T>(b));
      }
      case Expr::Kind::Div: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        auto* sb = std::get_if<Scalar>(&b);
        if (!sb) throw ParseError("division by a non-scalar expression");
        if (sb->is_zero()) throw ScalarError("division by zero in expression");
        if (auto* sa = std::get_if<Scalar>(&a)) return *sa / *sb;
        return fix(sb->inverse() * std::get<T>(a));
      }
      case Expr::Kind::Pow: {
        const Expr& base = *e.args[0];
        if (e.exponent.get_den() != 1) {
          if (base.kind == Expr::Kind::Symbol && base.name == "q" && base.indices.empty()) {
            return pb.q_pow(e.exponent.get_num().get_si(), e.exponent.get_den().get_si());
          }
          throw ParseError("fractional exponent only allowed on q");
        }
        long k = e.exponent.get_num().get_si();
        if (base.kind == Expr::Kind::Symbol && base.name == "q" && base.indices.empty() &&
            !lookup_override(base)) {
          return pb.q_pow(k);
        }
        Value b = eval(base);
        if (auto* s = std::get_if<Scalar>(&b)) return s->pow(static_cast<int>(k));
        T unit = std::get<T>(b);
        if (k < 0) {
          std::optional<T> inv = inverse ? inverse(base) : std::nullopt;
          if (!inv) throw ParseError("negative power of a non-scalar expression");
          unit = *inv;
          k = -k;
        }
        T acc = from_scalar(Scalar(1));
        for (long i = 0; i < k; ++i) acc = fix(acc * unit);
        return acc;
      }
    }
    throw ParseError("malformed expression");
  }

private:
  bool lookup_override(const Expr& e) const {
    return scalar_symbol && scalar_symbol(e).has_value();
  }
  std::optional<Scalar> lookup_scalar(const Expr& e) const {
    if (scalar_symbol) {
      if (auto s = scalar_symbol(e)) return s;
    }
    if (!e.indices.empty()) return std::nullopt;
    if (e.name == "q") return pb.q();
    if (e.name == "v") return Scalar::v_power(1);
    if (e.name == "lambda") return pb.lambda();
    if (e.name == "lambdap") return pb.lambda_plus();
    return std::nullopt;
  }
  T as_algebra(const Value& v) const {
    if (auto* s = std::get_if<Scalar>(&v)) return from_scalar(*s);
    return std::get<T>(v);
  }
  T fix(T t) const { return normalize ? normalize(t) : t; }
};

}  // namespace qcalc
