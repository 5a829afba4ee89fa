#include "qcalc/scalar.hpp"

#include "qcalc/expr.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qcalc {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

Poly Poly::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return {};
  return Poly(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Poly Poly::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  Poly p;
  p.c_ = std::move(v);
  return p;
}

Poly Poly::reversed() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  const Poly& big = a.size() >= b.size() ? a : b;
  const Poly& small = a.size() >= b.size() ? b : a;
  std::vector<Rational> v = big.c_;
  for (std::size_t i = 0; i < small.size(); ++i) v[i] += small.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly p = *this;
  for (auto& x : p.c_) x *= c;
  return p;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw ScalarError("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  int db = b.degree();
  if (a.degree() < db) {
    quot = {};
    rem = a;
    return;
  }
  std::vector<Rational> qv(static_cast<std::size_t>(a.degree() - db + 1));
  Rational inv_lead = 1 / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = r[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    qv[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  quot = Poly(std::move(qv));
  rem = Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead());
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::strong_ordering Poly::compare(const Poly& other) const {
  if (c_.size() != other.c_.size()) return c_.size() <=> other.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;) {
    int s = cmp(c_[i], other.c_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long n) : num_(Poly::constant(n)), den_(Poly::constant(1)) {}

Scalar::Scalar(const Rational& r) : num_(Poly::constant(r)), den_(Poly::constant(1)) {}

Scalar Scalar::from_parts(int v_exp, Poly num, Poly den) {
  if (den.is_zero()) throw ScalarError("zero denominator");
  Scalar s;
  s.exp_ = v_exp;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

Scalar Scalar::v_power(int k) {
  Scalar s(1);
  s.exp_ = k;
  return s;
}

bool Scalar::is_one() const { return exp_ == 0 && num_.is_one() && den_.is_one(); }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw ScalarError("scalar is not a rational constant: " + to_v_string());
  return is_zero() ? Rational(0) : num_[0];
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    den_ = Poly::constant(1);
    return;
  }
  std::size_t k = num_.low_order();
  if (k) {
    num_ = num_.shifted_down(k);
    exp_ += static_cast<int>(k);
  }
  std::size_t kd = den_.low_order();
  if (kd) {
    den_ = den_.shifted_down(kd);
    exp_ -= static_cast<int>(kd);
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      Poly q, r;
      Poly::divmod(num_, g, q, r);
      num_ = q;
      Poly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  if (den_.lead() != 1) {
    Rational c = den_.lead();
    num_ = num_.scaled(1 / c);
    den_ = den_.scaled(1 / c);
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  int e = std::min(exp_, b.exp_);
  auto sa = static_cast<std::size_t>(exp_ - e);
  auto sb = static_cast<std::size_t>(b.exp_ - e);
  if (den_ == b.den_) {
    num_ = num_.shifted_up(sa) + b.num_.shifted_up(sb);
  } else {
    num_ = (num_ * b.den_).shifted_up(sa) + (b.num_ * den_).shifted_up(sb);
    den_ = den_ * b.den_;
  }
  exp_ = e;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
  if (is_zero() || b.is_zero()) return *this = Scalar();
  exp_ += b.exp_;
  if (den_.is_one() && b.den_.is_one()) {
    num_ = num_ * b.num_;
    return *this;
  }
  // cross-cancel before multiplying to keep degrees small
  Poly n1 = num_, d1 = den_, n2 = b.num_, d2 = b.den_;
  auto cancel = [](Poly& n, Poly& d) {
    if (n.degree() <= 0 || d.degree() <= 0) return;
    Poly g = Poly::gcd(n, d);
    if (g.degree() <= 0) return;
    Poly q, r;
    Poly::divmod(n, g, q, r);
    n = q;
    Poly::divmod(d, g, q, r);
    d = q;
  };
  cancel(n1, d2);
  cancel(n2, d1);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (den_.lead() != 1) {
    Rational c = den_.lead();
    num_ = num_.scaled(1 / c);
    den_ = den_.scaled(1 / c);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) { return *this *= b.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  Scalar s;
  s.exp_ = -exp_;
  s.num_ = den_;
  s.den_ = num_;
  Rational c = s.den_.lead();
  if (c != 1) {
    s.num_ = s.num_.scaled(1 / c);
    s.den_ = s.den_.scaled(1 / c);
  }
  return s;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Scalar Scalar::invert_variable() const {
  if (is_zero()) return {};
  // v^e n(1/v)/d(1/v) = v^(e - deg n + deg d) rev(n)/rev(d)
  return from_parts(-exp_ - num_.degree() + den_.degree(), num_.reversed(), den_.reversed());
}

bool Scalar::regular_at(const Rational& v0) const {
  if (is_zero()) return true;
  if (v0 == 0) return exp_ >= 0;
  return den_.eval(v0) != 0;
}

Rational Scalar::specialize(const Rational& v0) const {
  if (is_zero()) return 0;
  if (v0 == 0) {
    if (exp_ < 0) throw ScalarError("pole at v=0 (factor v^" + std::to_string(exp_) + ")");
    return exp_ == 0 ? Rational(num_[0] / den_[0]) : Rational(0);
  }
  Rational d = den_.eval(v0);
  if (d == 0) {
    // name the vanishing factor: the part of den divisible by (v - v0)
    throw ScalarError("pole at v=" + v0.get_str() + ": denominator " +
                      Scalar::from_parts(0, den_, Poly::constant(1)).to_v_string() + " vanishes");
  }
  Rational p = 1;
  Rational base = exp_ >= 0 ? v0 : Rational(1 / v0);
  for (int i = 0; i < std::abs(exp_); ++i) p *= base;
  return p * num_.eval(v0) / d;
}

std::strong_ordering Scalar::compare(const Scalar& other) const {
  if (auto c = exp_ <=> other.exp_; c != 0) return c;
  if (auto c = num_.compare(other.num_); c != 0) return c;
  return den_.compare(other.den_);
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<int>()(exp_);
  auto mix = [&h](const Poly& p) {
    for (const auto& c : p.coeffs()) {
      h = h * 1000003u ^ std::hash<std::string>()(c.get_str());
    }
    h = h * 31u + p.size();
  };
  mix(num_);
  mix(den_);
  return h;
}

namespace {

std::string poly_v_string(const Poly& p, int shift) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    int e = static_cast<int>(i) + shift;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::string exponent_text(const Rational& e) {
  if (e.get_den() == 1) return e.get_str();
  return "(" + e.get_str() + ")";
}

}  // namespace

std::string Scalar::to_v_string() const {
  if (is_zero()) return "0";
  std::string n = poly_v_string(num_, exp_);
  if (den_.is_one()) return n;
  return "(" + n + ")/(" + poly_v_string(den_, 0) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_v_string(); }

// ---------------------------------------------------------------- PowerBasis

PowerBasis::PowerBasis(int L) : L_(L) {
  if (L <= 0 || L % 2 != 0) throw ScalarError("PowerBasis requires a positive even L, got " + std::to_string(L));
}

Scalar PowerBasis::q_pow(long num, long den) const {
  if (den == 0) throw ScalarError("zero denominator in q exponent");
  long top = static_cast<long>(L_) * num;
  if (top % den != 0) {
    throw ScalarError("q^(" + std::to_string(num) + "/" + std::to_string(den) +
                      ") is not representable with q = v^" + std::to_string(L_));
  }
  return Scalar::v_power(static_cast<int>(top / den));
}

Scalar PowerBasis::lambda() const { return q() - q_pow(-1); }

Scalar PowerBasis::lambda_plus() const { return q() + q_pow(-1); }

Scalar PowerBasis::root(int N) const {
  if (!has_root(N)) {
    throw ScalarError("q^(1/" + std::to_string(N) + ") needs L divisible by " + std::to_string(N) +
                      " (have L=" + std::to_string(L_) + ")");
  }
  return q_pow(1, N);
}

std::string PowerBasis::format_laurent(const Scalar& s) const {
  // s is v^e * num with den = 1; render as a sum of c*q^(k/L) terms, ascending
  const Poly& p = s.numerator();
  std::ostringstream os;
  bool first = true;
  int terms = 0;
  for (std::size_t i = 0; i < p.size(); ++i) terms += p[i] != 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    Rational e(static_cast<long>(i) + s.v_exponent(), L_);
    e.canonicalize();
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << exponent_text(e);
    }
    first = false;
  }
  (void)terms;
  return first ? "0" : os.str();
}

std::string PowerBasis::format_plain(const Scalar& s) const {
  if (s.is_laurent()) return format_laurent(s);
  Scalar n = Scalar::from_parts(s.v_exponent(), s.numerator(), Poly::constant(1));
  Scalar d = Scalar::from_parts(0, s.denominator(), Poly::constant(1));
  auto wrap = [](const std::string& t, const Scalar& x) {
    int terms = 0;
    for (const auto& c : x.numerator().coeffs()) terms += c != 0;
    return terms > 1 ? "(" + t + ")" : t;
  };
  return wrap(format_laurent(n), n) + "/" + wrap(format_laurent(d), d);
}

std::string PowerBasis::format(const Scalar& s) const {
  std::string best = format_plain(s);
  if (s.is_zero() || s.is_monomial()) return best;
  Scalar lam = lambda(), lap = lambda_plus();
  for (int a = -2; a <= 3; ++a) {
    for (int b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      Scalar rest = s / (lam.pow(a) * lap.pow(b));
      if (!rest.is_laurent()) continue;
      std::string factor;
      auto put = [&factor](const char* name, int k) {
        if (k == 0) return;
        if (!factor.empty()) factor += "*";
        factor += name;
        if (k != 1) factor += "^" + std::to_string(k);
      };
      put("lambda", a);
      put("lambdap", b);
      std::string text;
      if (rest.is_one()) {
        text = factor;
      } else if (rest == Scalar(-1)) {
        text = "-" + factor;
      } else {
        int terms = 0;
        for (const auto& c : rest.numerator().coeffs()) terms += c != 0;
        std::string r = format_laurent(rest);
        text = terms > 1 ? "(" + r + ")*" + factor : r + "*" + factor;
      }
      if (text.size() < best.size()) best = text;
    }
  }
  return best;
}

std::string PowerBasis::format_coefficient(const Scalar& s) const {
  if (s.is_one()) return "";
  if (s == Scalar(-1)) return "-";
  std::string t = format(s);
  bool compound = false;
  int depth = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && i > 0 && (c == '+' || (c == '-' && t[i - 1] == ' ') || c == '/')) compound = true;
  }
  return compound ? "(" + t + ")" : t;
}

Scalar PowerBasis::parse(std::string_view text) const { return eval_scalar(*parse_expr(text), *this); }

}  // namespace qcalc
