#include "doctest.h"
#include "qcalc/scalar.hpp"

#include <random>

using namespace qcalc;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), sh(-4, 4);
  auto poly = [&] {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
  };
  return Scalar::from_parts(sh(rng), poly(), poly());
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  PowerBasis pb(2);
  Scalar q = pb.q(), lam = pb.lambda();
  CHECK(((q - q.inverse()) * lam.inverse()).is_one());
  CHECK(pb.q_half() * pb.q_half() == q);
  Scalar lhs = (Scalar(1) - q.pow(4)) / (q - q.inverse());
  CHECK(lhs == -q * (Scalar(1) + q * q));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ScalarError);
  CHECK(pb.format(lhs) == "-q - q^3");
  CHECK(pb.format(lam.inverse()) == "lambda^-1");
}

TEST_CASE("scalar specialize") {
  PowerBasis pb(2);
  CHECK(pb.lambda().specialize(1) == 0);
  CHECK(pb.q_half().specialize(3) == 3);
  CHECK_THROWS_AS(pb.lambda().inverse().specialize(1), ScalarError);
  CHECK_FALSE(pb.lambda().inverse().regular_at(1));
}

TEST_CASE("scalar parse and power basis") {
  PowerBasis pb(4);
  CHECK(pb.parse("q^(1/2)*q^(1/2)") == pb.q());
  CHECK(pb.parse("(q-q^-1)/lambda").is_one());
  CHECK(pb.parse("q^(1/4)") == Scalar::v_power(1));
  CHECK_THROWS(PowerBasis(3));
  CHECK_THROWS(pb.q_pow(1, 8));
  CHECK(PowerBasis(6).has_root(3));
}

TEST_CASE("scalar field axioms on samples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    Scalar n = a;
    CHECK(Scalar::from_parts(n.v_exponent(), n.numerator(), n.denominator()) == a);
    for (int v0 : {2, -3}) {
      if (a.regular_at(v0) && b.regular_at(v0)) {
        CHECK((a * b).specialize(v0) == a.specialize(v0) * b.specialize(v0));
      }
    }
    CHECK(a.invert_variable().invert_variable() == a);
  }
}
