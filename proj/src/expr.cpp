#include "qcalc/expr.hpp"

#include <cctype>

namespace qcalc {

std::string Expr::symbol_key() const {
  if (indices.empty()) return name;
  std::string s = name + "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + "]";
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = {std::move(a), std::move(b)};
    return e;
  }

  ExprPtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Expr::Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Expr::Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Neg;
      e->args = {unary()};
      return e;
    }
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (accept('^')) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Pow;
      e->args = {base};
      e->exponent = exponent();
      return e;
    }
    return base;
  }

  Rational exponent() {
    if (accept('(')) {
      Rational r = signed_integer();
      if (accept('/')) {
        Rational d = signed_integer();
        if (d == 0) fail("zero denominator in exponent");
        r /= d;
      }
      expect(')');
      r.canonicalize();
      return r;
    }
    return signed_integer();
  }

  Rational signed_integer() {
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    Rational r(std::string(s_.substr(start, pos_ - start)));
    return neg ? Rational(-r) : r;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->number = Rational(std::string(s_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      auto e = std::make_shared<Expr>();
      e->name = std::string(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == '[') {
        ++pos_;
        do {
          Rational r = signed_integer();
          e->indices.push_back(static_cast<int>(r.get_num().get_si()));
        } while (accept(','));
        expect(']');
      }
      if (accept('(')) {
        e->kind = Expr::Kind::Call;
        if (!peek(')')) {
          do {
            e->args.push_back(expr());
          } while (accept(','));
        }
        expect(')');
      } else {
        e->kind = Expr::Kind::Symbol;
      }
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

Scalar eval_scalar(const Expr& e, const PowerBasis& pb,
                   const std::function<std::optional<Scalar>(const Expr&)>& extra) {
  auto rec = [&](const Expr& x) { return eval_scalar(x, pb, extra); };
  switch (e.kind) {
    case Expr::Kind::Number:
      return Scalar(e.number);
    case Expr::Kind::Symbol: {
      if (extra) {
        if (auto s = extra(e)) return *s;
      }
      if (e.indices.empty()) {
        if (e.name == "q") return pb.q();
        if (e.name == "v") return Scalar::v_power(1);
        if (e.name == "lambda") return pb.lambda();
        if (e.name == "lambdap") return pb.lambda_plus();
      }
      throw ParseError("unknown scalar symbol '" + e.symbol_key() + "'");
    }
    case Expr::Kind::Call:
      throw ParseError("function call in scalar expression: " + e.name);
    case Expr::Kind::Neg:
      return -rec(*e.args[0]);
    case Expr::Kind::Add:
      return rec(*e.args[0]) + rec(*e.args[1]);
    case Expr::Kind::Sub:
      return rec(*e.args[0]) - rec(*e.args[1]);
    case Expr::Kind::Mul:
      return rec(*e.args[0]) * rec(*e.args[1]);
    case Expr::Kind::Div: {
      Scalar d = rec(*e.args[1]);
      if (d.is_zero()) throw ScalarError("division by zero in expression");
      return rec(*e.args[0]) / d;
    }
    case Expr::Kind::Pow: {
      const Expr& base = *e.args[0];
      bool is_q = base.kind == Expr::Kind::Symbol && base.name == "q" && base.indices.empty();
      if (e.exponent.get_den() != 1) {
        if (!is_q) throw ParseError("fractional exponent only allowed on q");
        return pb.q_pow(e.exponent.get_num().get_si(), e.exponent.get_den().get_si());
      }
      return rec(base).pow(static_cast<int>(e.exponent.get_num().get_si()));
    }
  }
  throw ParseError("malformed expression");
}

}  // namespace qcalc
