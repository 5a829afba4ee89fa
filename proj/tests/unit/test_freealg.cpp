#include "doctest.h"
#include "qcalc/freealg.hpp"
#include "qcalc/ncgb.hpp"

using namespace qcalc;

namespace {

AlphabetPtr abc() { return std::make_shared<Alphabet>("t", std::vector<std::string>{"a", "b", "c"}); }

}  // namespace

TEST_CASE("free products") {
  PowerBasis pb;
  auto al = abc();
  NCPoly a = NCPoly::letter(al, 0), b = NCPoly::letter(al, 1), c = NCPoly::letter(al, 2);
  NCPoly one = NCPoly::constant(al, 1);
  CHECK((a + b) * one == a + b);
  CHECK(((a * b) * c).coeff({0, 1, 2}).is_one());
  NCPoly sq = (a - one) * (a - one);
  CHECK(sq == a * a - Scalar(2) * a + one);
  CHECK(sq.to_string(pb) == "1 - 2*a + a^2");
  CHECK(parse_ncpoly("(a-1)^2", al, pb) == sq);
  CHECK(parse_ncpoly("q^-1*b*c + 1", al, pb).to_string(pb) == "1 + q^-1*b*c");
  auto other = std::make_shared<Alphabet>("u", std::vector<std::string>{"x"});
  CHECK_THROWS_AS(a * NCPoly::letter(other, 0), AlgebraError);
}

TEST_CASE("rewrite normal form") {
  PowerBasis pb;
  auto al = abc();
  RewriteSystem rs(al);
  // ba -> q ab, ca -> ac, cb -> bc
  rs.add_relation(parse_ncpoly("b*a - q*a*b", al, pb));
  rs.add_relation(parse_ncpoly("c*a - a*c", al, pb));
  rs.add_relation(parse_ncpoly("c*b - b*c", al, pb));
  NCPoly p = parse_ncpoly("c*b*a", al, pb);
  NCPoly n = rs.normal_form(p);
  CHECK(n == parse_ncpoly("q*a*b*c", al, pb));
  CHECK(rs.normal_form(n) == n);
  CHECK(rs.normal_form(p, 64, Strategy::Rightmost) == n);
  CHECK_THROWS_AS(rs.normal_form(parse_ncpoly("c^5", al, pb) * p, 3), AlgebraError);
}

TEST_CASE("completion and dims") {
  PowerBasis pb;
  auto xy = std::make_shared<Alphabet>("p", std::vector<std::string>{"x", "y"});
  RewriteSystem rs = complete({parse_ncpoly("x*y - y*x", xy, pb)}, xy, 4);
  REQUIRE(rs.size() == 1);
  CHECK(rs.rules()[0].lead == Word{1, 0});
  CHECK(check_overlaps(rs, 4).ok);
  auto dims = graded_dims(rs, 4);
  CHECK(dims == std::vector<std::uint64_t>{1, 2, 3, 4, 5});

  CHECK(is_groebner({}, xy, 4).ok);
  RewriteSystem free_rs(abc());
  CHECK(graded_dims(free_rs, 3) == std::vector<std::uint64_t>{1, 3, 9, 27});

  auto al = abc();
  std::vector<NCPoly> rels{parse_ncpoly("b*a - a*b", al, pb), parse_ncpoly("c*b - b*c", al, pb),
                           parse_ncpoly("c*a - a*c", al, pb)};
  CHECK(is_groebner(rels, al, 4).ok);
  rels.pop_back();
  // without ca = ac the overlap cba is stuck on bca vs cab
  auto rep2 = is_groebner(rels, al, 4);
  CHECK_FALSE(rep2.ok);
  REQUIRE_FALSE(rep2.failures.empty());
  CHECK(rep2.failures[0].overlap == Word{2, 1, 0});
  CompletionStats st;
  RewriteSystem done = complete(rels, al, 4, &st);
  CHECK(st.rules_added > 0);
  CHECK(check_overlaps(done, 4).ok);
  for (const auto& r : rels) CHECK(done.normal_form(r).is_zero());
}
