#include "doctest.h"
#include "qcalc/exterior.hpp"

using namespace qcalc;

namespace {

struct Built {
  CalculusPtr C;
  TensorSpace S;
};

Built build(CalculusPtr C) {
  auto cl = closure(*C, symmetric_span_kernel(*C, 2));
  return {C, cl.space};
}

SVec word2(int n, int i, int j, const Scalar& c = Scalar(1)) { return SVec{{i * n + j, c}}; }

// d w(u^i_j) = - sum_p w(u^i_p) ^ w(u^p_j)
void check_maurer_cartan(const ExteriorAlgebra& E) {
  const Calculus& C = E.calculus();
  const CoordAlgebra& A = C.coord();
  const int N = C.N();
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      Form lhs = E.d(omega(C, A.u(i, j)));
      Form rhs = C.zero_form();
      for (int p = 1; p <= N; ++p) rhs -= E.wedge(omega(C, A.u(i, p)), omega(C, A.u(p, j)));
      CHECK_MESSAGE(lhs == rhs, C.name() << " u" << i << j);
    }
  }
}

void check_d_squared(const ExteriorAlgebra& E) {
  const Calculus& C = E.calculus();
  const CoordAlgebra& A = C.coord();
  int G = static_cast<int>(A.alphabet()->size());
  for (int g = 0; g < G; ++g) {
    Form dd = E.d(E.d(NCPoly::letter(A.alphabet(), g)));
    CHECK_MESSAGE(dd.is_zero(), C.name() << " dd " << A.alphabet()->letter(g));
  }
  for (int i = 0; i < C.size(); ++i) CHECK(E.d(E.maurer_cartan(i)).is_zero());
}

}  // namespace

TEST_CASE("S(R) on SL_q(2)") {
  PowerBasis pb;
  const std::size_t expect[4] = {6, 6, 6, 7};
  for (int r = 1; r <= 4; ++r) {
    auto B = build(sl2_calculus(r, pb));
    CHECK(B.S.dim() == expect[r - 1]);
    CHECK(B.S.contains(word2(3, 0, 2)) == (r == 4));
    // one more round adds nothing
    auto again = closure(*B.C, B.S);
    CHECK(again.space.dim() == B.S.dim());
    CHECK(again.rounds == 1);
  }
}

TEST_CASE("right action on invariant tensors") {
  PowerBasis pb;
  auto C = sl2_calculus(2, pb);
  Scalar q = pb.q();
  Form z = symmetric(*C, C->parse_coord("a*b - b"));
  CHECK(z == C->omega_word({0, 1}, q * q) + C->omega_word({1, 0}, q.pow(-2)));
  const int G = static_cast<int>(C->coord().alphabet()->size());
  for (int g = 0; g < G; ++g) {
    NCPoly u = NCPoly::letter(C->coord().alphabet(), g);
    CHECK(p_inv_right(*C, z.to_vector(3), g) == p_inv(*C, right_mul(*C, z, u)).to_vector(3));
  }
  Form y = symmetric(*C, C->parse_coord("(a*b - b)*c"));
  Form expect = (q.pow(-2) - 1) * (C->omega_word({0, 2}, q.pow(3)) + C->omega_word({2, 0}, q.pow(-3)));
  CHECK(y == expect);
  CHECK(p_inv(*C, right_mul(*C, z, C->parse_coord("c"))) == expect);
}

TEST_CASE("higher order calculus on SL_q(2)") {
  PowerBasis pb;
  for (int r = 1; r <= 4; ++r) {
    auto B = build(sl2_calculus(r, pb));
    ExteriorAlgebra E(B.C, B.S, 5);
    std::vector<std::uint64_t> d = E.dims(4);
    if (r < 4) {
      CHECK(d == std::vector<std::uint64_t>{1, 3, 3, 1, 0});
      CHECK_FALSE(E.maurer_cartan(1).is_zero());
    } else {
      CHECK(d == std::vector<std::uint64_t>{1, 3, 2, 0, 0});
      CHECK(E.maurer_cartan(1).is_zero());
    }
    check_maurer_cartan(E);
    check_d_squared(E);
  }
}

TEST_CASE("graded Leibniz rule") {
  PowerBasis pb;
  auto B = build(sl2_calculus(1, pb));
  ExteriorAlgebra E(B.C, B.S, 5);
  const Calculus& C = *B.C;
  Form eta = C.parse_form("a*w0 + b*w1");
  Form zeta = C.parse_form("c*w2 - d*w1");
  Form lhs = E.d(E.wedge(eta, zeta));
  Form rhs = E.wedge(E.d(eta), zeta) - E.wedge(eta, E.d(zeta));
  CHECK(lhs == rhs);
  Form f = C.zero_form();
  f.add({}, C.parse_coord("a*b"));
  CHECK(E.d(E.wedge(f, zeta)) == E.wedge(E.d(f), zeta) + E.wedge(f, E.d(zeta)));
}

TEST_CASE("exterior algebra of the SL_q(3) calculi") {
  PowerBasis pb;
  for (int g : {1, 2}) {
    auto B = build(sl3_gamma(g, pb));
    CHECK(B.S.dim() == 36);
    ExteriorAlgebra E(B.C, B.S, 4);
    CHECK(E.groebner().ok);
    CHECK(E.dims(9) == std::vector<std::uint64_t>{1, 8, 28, 56, 70, 56, 28, 8, 1, 0});
    // normal words strictly decrease in the index order
    for (const auto& w : E.basis_words(3)) CHECK((w[0] > w[1] && w[1] > w[2]));
    check_maurer_cartan(E);
    check_d_squared(E);
    const Calculus& C = *B.C;
    Form dw2 = C.parse_form("-w[13]*w[31] - w[23]*w[32]");
    CHECK(E.maurer_cartan(C.index("2")) == E.reduce(dw2));
  }
}

TEST_CASE("sigma on the SL_q(3) calculi") {
  PowerBasis pb;
  Scalar q = pb.q(), lam = pb.lambda();
  for (int g : {1, 2}) {
    auto B = build(sl3_gamma(g, pb));
    const Calculus& C = *B.C;
    auto sb = shaped_basis(B.S);
    REQUIRE(sb.ok);
    Sigma s = build_sigma(8, sb.elements);
    REQUIRE(s.ok);
    auto rep = sigma_report(s, B.S);
    CHECK(rep.involution);
    CHECK(rep.rank_minus == 28);
    CHECK(rep.rank_plus == 36);
    CHECK(rep.spans_S);
    if (g != 1) continue;
    int i1 = C.index("1"), i23 = C.index("23"), i13 = C.index("13"), i21 = C.index("21");
    auto w3 = [](int a, int b, int c) { return a * 64 + b * 8 + c; };
    SVec v{{w3(i1, i23, i13), Scalar(1)}};
    SVec lhs = s.apply_triple(s.apply_triple(s.apply_triple(v, 0), 1), 0);
    SVec rhs = s.apply_triple(s.apply_triple(s.apply_triple(v, 1), 0), 1);
    CHECK(lhs == SVec{{w3(i13, i23, i1), q}, {w3(i13, i21, i13), -q.pow(-2) * lam}});
    CHECK(rhs == SVec{{w3(i13, i23, i1), q}, {w3(i13, i21, i13), -lam}});
  }
}

TEST_CASE("sigma needs the two and three term shape") {
  PowerBasis pb;
  CHECK(shaped_basis(build(sl2_calculus(1, pb)).S).ok);
  // r = 4 contains w0 w2 and w2 w0 separately
  auto sb = shaped_basis(build(sl2_calculus(4, pb)).S);
  CHECK_FALSE(sb.ok);
  CHECK(sb.failure == "both orders of (0,2) in S");
}

TEST_CASE("quantum Lie relations read off sigma") {
  PowerBasis pb;
  auto B = build(sl3_gamma(1, pb));
  const Calculus& C = *B.C;
  Sigma s = build_sigma(8, shaped_basis(B.S).elements);
  int outside = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (i == j) continue;
      std::string mode;
      auto c = lie_structure(C, s, i, j, &mode);
      if (!c) ++outside;
      CHECK(mode == "exact");
    }
  }
  CHECK(outside == 0);
  // X_13 X_32 - q X_32 X_13 = X_12
  auto c = lie_structure(C, s, C.index("13"), C.index("32"));
  REQUIRE(c);
  std::vector<Scalar> e(8);
  e[static_cast<std::size_t>(C.index("12"))] = Scalar(1);
  CHECK(*c == e);
}
