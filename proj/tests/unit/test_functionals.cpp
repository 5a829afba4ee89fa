#include "doctest.h"
#include "qcalc/functionals.hpp"

#include <random>

using namespace qcalc;

TEST_CASE("R-matrix checks") {
  for (int N : {2, 3, 4}) {
    PowerBasis pb(2);
    RMatrix R = rmatrix(N, pb);
    CHECK(R.inverse_ok());
    CHECK(R.braid_ok());
    CHECK(R.hecke_ok(pb));
  }
}

TEST_CASE("U_q pairing") {
  PowerBasis pb;
  auto S = FunctionalSpace::uq(2, pb);
  const CoordAlgebra& A = S->coord();
  CHECK(S->eval(S->parse("k"), A.parse("a")) == pb.q_half());
  NCPoly X0 = S->parse("q^(-1/2)*e*kinv");
  CHECK(S->eval(X0, A.parse("b")).is_one());
  NCPoly X1 = S->parse("q*lambda^-1*(1 - k^-4)");
  CHECK(S->eval(X1, A.parse("q^-2*a + q^-4*d")).is_zero());
  CHECK(S->eval(X1, A.parse("d")) == pb.parse("-q^2"));
  CHECK(S->convolve(X1, A.parse("a")) == A.parse("a"));
  CHECK(S->convolve(X0, A.parse("a")).is_zero());
  CHECK(S->convolve(S->parse("q^(1/2)*f*kinv"), A.parse("a")) == A.parse("b"));
  CHECK(S->convolve(S->one(), A.parse("a*b + c")) == A.parse("a*b + c"));
}

TEST_CASE("pairing is well defined and multiplicative") {
  PowerBasis pb;
  std::mt19937 rng(5);
  for (int N : {2, 3}) {
    auto S = FunctionalSpace::uq(N, pb);
    const CoordAlgebra& A = S->coord();
    const UqAlgebra& U = *S->uq_algebra();
    std::vector<NCPoly> fs;
    for (int l = 0; l < static_cast<int>(U.alphabet()->size()); ++l) fs.push_back(S->letter(l));
    const std::size_t n0 = fs.size();
    for (std::size_t a = 0; a < n0; ++a) {
      for (std::size_t b = 0; b < n0; ++b) fs.push_back(fs[a] * fs[b]);
    }
    for (const auto& F : fs) {
      for (const auto& r : A.relations()) CHECK(S->eval(F, r).is_zero());
    }
    // U_q relations pair to zero with every coordinate word of length <= 3
    for (const auto& r : U.relations()) {
      for (int n = 0; n <= 3; ++n) CHECK(S->matrix(r, n).is_zero());
    }
    // <X, x y> = sum <X_(1), x><X_(2), y>
    std::uniform_int_distribution<int> let(0, static_cast<int>(A.alphabet()->size()) - 1);
    for (int t = 0; t < 10; ++t) {
      const NCPoly& F = fs[static_cast<std::size_t>(t * 7 % fs.size())];
      Word x{let(rng)}, y{let(rng), let(rng)};
      Word xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      Scalar lhs = S->eval_word(F, xy);
      Scalar rhs;
      NCTensor d = U.coproduct(F);
      for (const auto& [k, c] : d.terms()) {
        rhs += c * S->eval_word(NCPoly::monomial(U.alphabet(), k.first), x) *
               S->eval_word(NCPoly::monomial(U.alphabet(), k.second), y);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("L functionals") {
  CHECK_THROWS_AS(FunctionalSpace::lfun(3, PowerBasis(2)), ScalarError);
  PowerBasis pb(4);
  auto S = FunctionalSpace::lfun(2, pb);
  const CoordAlgebra& A = S->coord();
  Scalar p = pb.root(2);
  CHECK(S->eval(S->letter(S->lm(1, 1)), A.parse("a")) == p * pb.q().inverse());
  NCPoly X12 = S->parse("lambda^-1*kappa(lm[2,1])*lm[1,1]");
  CHECK(S->eval(X12, A.parse("b")).is_one());
  for (int N : {2, 3, 4}) {
    PowerBasis pbn(2 * N);
    auto L = FunctionalSpace::lfun(N, pbn);
    for (const auto& r : L->coord().relations()) {
      for (int l = 0; l < static_cast<int>(L->alphabet()->size()); ++l) CHECK(L->eval(L->letter(l), r).is_zero());
    }
    // kappa twist agrees with composing with the antipode on words of length 2
    const CoordAlgebra& B = L->coord();
    NCPoly K = L->letter(L->kappa_of(L->lp(1, 2)));
    NCPoly P = L->letter(L->lp(1, 2));
    for (int a = 0; a < static_cast<int>(B.alphabet()->size()); a += 3) {
      for (int b = 0; b < static_cast<int>(B.alphabet()->size()); b += 2) {
        NCPoly w = NCPoly::monomial(B.alphabet(), {a, b});
        CHECK(L->eval(K, w) == L->eval(P, B.antipode(w)));
      }
    }
  }
}
