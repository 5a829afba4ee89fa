#include "doctest.h"
#include "qcalc/fixtures.hpp"
#include "qcalc/report.hpp"

#include <algorithm>

using namespace qcalc;

TEST_CASE("text report has one line per claim") {
  Report r("t");
  r.check(true, "a", "x/a", "exact");
  r.check(false, "b", "x/b", "evidential(3)", "witness");
  r.add({"c", "x/c", Status::Refused, "specialized v=1", "guard", nullptr});
  std::string t = emit(r, Format::Text);
  CHECK(std::count(t.begin(), t.end(), '\n') == 3);
  CHECK(t.find("fail [evidential(3)] b (x/b): witness\n") != std::string::npos);
  CHECK_FALSE(r.ok());
  CHECK(r.refused());
  CHECK(r.count(Status::Pass) == 1);
}

TEST_CASE("json report") {
  Report r("t");
  r.check(true, "sl2/commutation r=1 w0*a", "sl2/commutation", "exact");
  auto j = nlohmann::json::parse(emit(r, Format::Json));
  CHECK(j["schema"] == kReportSchema);
  const auto& c = j["claims"][0];
  CHECK(c["claim"] == "sl2/commutation r=1 w0*a");
  CHECK(c["status"] == "pass");
  CHECK(c["mode"] == "exact");
  CHECK(c["anchor"] == "sl2/commutation");
  CHECK_FALSE(c.contains("detail"));
  // key order is fixed
  std::string s = emit(r, Format::Json);
  CHECK(s.find("\"claim\"") < s.find("\"status\""));
  CHECK(s.find("\"status\"") < s.find("\"mode\""));
}

TEST_CASE("latex report renders tables") {
  Report r("t");
  r.add_table({"commutation", {"", "a"}, {{"w0", "q a w0"}}, {}});
  r.check(true, "x", "y", "exact");
  std::string s = emit(r, Format::Latex);
  CHECK(s.find("\\begin{tabular}") != std::string::npos);
  CHECK(emit(r, Format::Latex) == s);
  CHECK_THROWS(parse_format("yaml"));
}

TEST_CASE("appending keeps order") {
  Report a("a"), b("b");
  a.check(true, "1", "", "exact");
  b.check(true, "2", "", "exact");
  a.append(b);
  REQUIRE(a.claims().size() == 2);
  CHECK(a.claims()[1].id == "2");
}

TEST_CASE("fixtures") {
  CHECK(fixture_at("sl3", "dims/values").size() == 10);
  CHECK_THROWS_AS(fixture_at("sl3", "no/such/key"), FixtureError);
  CHECK_THROWS_AS(fixture("missing"), FixtureError);
  CHECK(fixture("acceptance")["criteria"].size() == 10);
}
