#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcalc {

using Rational = mpq_class;

// Raised for undefined field operations (division by zero, evaluation at a pole).
class ScalarError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Dense univariate polynomial in v with rational coefficients, stored low to
// high with no trailing zero coefficient. The zero polynomial is empty.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  // Number of leading zero coefficients at the low end (the v-adic valuation).
  std::size_t low_order() const;
  Poly shifted_down(std::size_t k) const;
  Poly shifted_up(std::size_t k) const;
  Poly reversed() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;

  // Euclidean division; throws on a zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  // Monic greatest common divisor (zero if both inputs are zero).
  static Poly gcd(Poly a, Poly b);
  Poly monic() const;

  Rational eval(const Rational& x) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;
  std::strong_ordering compare(const Poly& other) const;

private:
  void trim();
  std::vector<Rational> c_;
};

// Element of Q(v) held in canonical form  v^e * num(v) / den(v)  with
// num(0) != 0, den(0) != 0, den monic and gcd(num, den) = 1. Zero has an
// empty numerator, e = 0 and den = 1, so equality is syntactic.
class Scalar {
public:
  Scalar() : den_(Poly::constant(1)) {}
  Scalar(long n);                    // NOLINT: implicit from integers
  Scalar(const Rational& r);         // NOLINT
  static Scalar from_parts(int v_exp, Poly num, Poly den);

  // v^k
  static Scalar v_power(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return exp_ == 0 && num_.degree() <= 0 && den_.degree() == 0; }
  // True if the value is c * v^k for rational c.
  bool is_monomial() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // True if the denominator is a power of v (Laurent polynomial).
  bool is_laurent() const { return den_.degree() == 0; }
  Rational rational_value() const;

  int v_exponent() const { return exp_; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(int k) const;

  // The field automorphism v -> 1/v.
  Scalar invert_variable() const;

  // Exact value at v = v0; throws ScalarError at a pole or for v0 = 0 with
  // a negative v-exponent.
  Rational specialize(const Rational& v0) const;
  // True if specialize(v0) is defined.
  bool regular_at(const Rational& v0) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::strong_ordering compare(const Scalar& other) const;
  std::size_t hash() const;

  // Raw rendering in the variable v (for diagnostics).
  std::string to_v_string() const;

private:
  void normalize();

  int exp_ = 0;
  Poly num_;
  Poly den_;
};

// q = v^L. L must be even so that q^(1/2) exists; for root-of-q
// constructions with parameter N, L must also be divisible by 2N.
class PowerBasis {
public:
  explicit PowerBasis(int L = 2);

  int L() const { return L_; }
  // q^(num/den); throws if L*num/den is not an integer.
  Scalar q_pow(long num, long den = 1) const;
  Scalar q() const { return q_pow(1); }
  Scalar q_half() const { return q_pow(1, 2); }
  // lambda = q - q^-1
  Scalar lambda() const;
  // lambda_+ = q + q^-1
  Scalar lambda_plus() const;
  // p = q^(1/N), requires L divisible by N.
  Scalar root(int N) const;
  bool has_root(int N) const { return N > 0 && L_ % N == 0; }

  // Renders a scalar in terms of q (fractional powers as q^(a/b)),
  // preferring lambda / lambda_+ factors when that shortens the text.
  std::string format(const Scalar& s) const;
  // Renders a scalar as a factor suitable for juxtaposition with a monomial;
  // returns "" for 1 and "-" for -1.
  std::string format_coefficient(const Scalar& s) const;

  // Parses integers, q, q^(a/b), lambda, lambdap, v and + - * / ^ ( ).
  Scalar parse(std::string_view text) const;

  friend bool operator==(const PowerBasis&, const PowerBasis&) = default;

private:
  std::string format_laurent(const Scalar& s) const;
  std::string format_plain(const Scalar& s) const;
  int L_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qcalc

template <>
struct std::hash<qcalc::Scalar> {
  std::size_t operator()(const qcalc::Scalar& s) const noexcept { return s.hash(); }
};
