#include "qcalc/fixtures.hpp"
#include "qcalc/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace qcalc;

namespace {

struct Global {
  int L = 2;
  std::string format = "text";
  std::string output;
  std::string specialize;
  int bound = 4;
  int degree = 3;
  std::string fixtures;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_v0(const std::string& s) {
  Rational v;
  if (v.set_str(s, 10) != 0) throw ConfigError("--specialize expects a rational, got '" + s + "'");
  v.canonicalize();
  return v;
}

SuiteOptions options(const Global& g) {
  SuiteOptions o;
  o.pb = PowerBasis(g.L);
  if (!g.specialize.empty()) o.v0 = parse_v0(g.specialize);
  o.bound = g.bound;
  o.degree = g.degree;
  return o;
}

int finish(const Report& r, const Global& g) {
  Format f = parse_format(g.format);
  std::string out = emit(r, f);
  if (g.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream os(g.output, std::ios::binary);
    if (!os) throw ConfigError("cannot write " + g.output);
    os << out;
  }
  if (r.refused()) return 2;
  return r.ok() ? 0 : 1;
}

struct CalcArgs {
  std::string name = "sl2";
  int r = 1, n = 2, gamma = 0;
  std::string alpha, beta;
};

void add_calc_flags(CLI::App* s, CalcArgs& c) {
  s->add_option("--calculus", c.name, "sl2, sl2-sudbery, sl3 or sln")->capture_default_str();
  s->add_option("--r", c.r, "calculus number")->capture_default_str();
  s->add_option("--n", c.n, "N for sln")->capture_default_str();
  s->add_option("--gamma", c.gamma, "sl3 calculus 1 or 2");
  s->add_option("--alpha", c.alpha, "sl3 parameter");
  s->add_option("--beta", c.beta, "sl3 parameter");
}

CalculusPtr make_calc(const CalcArgs& c, const PowerBasis& pb) {
  CatalogParams p;
  p.r = c.r;
  p.N = c.n;
  p.gamma = c.gamma;
  if (!c.alpha.empty()) p.alpha = pb.parse(c.alpha);
  if (!c.beta.empty()) p.beta = pb.parse(c.beta);
  return catalog(c.name, p, pb);
}

struct Exterior {
  CalculusPtr C;
  TensorSpace S;
  std::shared_ptr<const ExteriorAlgebra> E;
};

Exterior build_exterior(const CalcArgs& c, const SuiteOptions& o) {
  if (c.name == "sl2") {
    const Built& B = built_sl2(c.r, o.pb, o.bound);
    return {B.C, B.S, B.E};
  }
  if (c.name == "sl3" && c.gamma != 0) {
    const Built& B = built_sl3(c.gamma, o.pb, o.bound);
    return {B.C, B.S, B.E};
  }
  auto C = make_calc(c, o.pb);
  auto cl = closure(*C, symmetric_span_kernel(*C, 2));
  return {C, cl.space, std::make_shared<ExteriorAlgebra>(C, cl.space, o.bound)};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Report exterior_report(const Exterior& x, const SuiteOptions& o) {
  const Calculus& C = *x.C;
  Report rep("exterior algebra of " + C.name());
  rep.check(true, C.name() + " dim S(R)", "exterior/closure", "exact", std::to_string(x.S.dim()));
  // without a Groebner basis the completion is only good up to the bound
  const auto& gb = x.E->groebner();
  int top = gb.ok ? C.size() + 1 : o.bound;
  rep.check(true, C.name() + " rewrite system", "exterior/groebner", "exact",
            gb.ok ? "quadratic relations form a Groebner basis (overlaps up to degree " + std::to_string(std::max(o.bound, 3)) + ")"
                  : std::to_string(gb.failures.size()) + " unresolved overlaps; completed through degree " + std::to_string(o.bound));
  rep.check(true, C.name() + " dims", "exterior/dims", "exact", join(x.E->dims(top)));
  for (int i = 0; i < C.size(); ++i) {
    rep.check(true, C.name() + " d w" + C.label(i), "exterior/maurer-cartan", "exact", x.E->maurer_cartan(i).to_string(o.pb));
  }
  return rep;
}

Report sigma_report_of(const Exterior& x) {
  const Calculus& C = *x.C;
  Report rep("sigma on " + C.name());
  auto sb = shaped_basis(x.S);
  rep.check(sb.ok, C.name() + " shaped basis", "sigma/shape", "exact", sb.failure);
  if (!sb.ok) return rep;
  Sigma s = build_sigma(C.size(), sb.elements);
  rep.check(s.ok, C.name() + " sigma", "sigma/construction", "exact", s.failure);
  if (!s.ok) return rep;
  auto sr = sigma_report(s, x.S);
  const int n = C.size();
  rep.check(sr.involution, C.name() + " sigma^2 = id", "sigma/involution", "exact");
  rep.check(true, C.name() + " rank(sigma - id)", "sigma/rank", "exact", std::to_string(sr.rank_minus));
  rep.check(true, C.name() + " rank(sigma + id)", "sigma/rank", "exact", std::to_string(sr.rank_plus));
  rep.check(sr.spans_S, C.name() + " (1 + sigma) spans S(R)", "sigma/span", "exact");
  Table t{"sigma(w_i w_j), i < j", {"ij", "image"}, {}, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SVec img = s.apply(SVec{{i * n + j, Scalar(1)}});
      Form f = Form::from_vector(C.coord().alphabet(), C.omega_alphabet(), img, n, 2);
      t.rows.push_back({C.label(i) + "," + C.label(j), f.to_string(C.pb())});
    }
  }
  rep.add_table(std::move(t));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcalc: exact checks for left-covariant calculi on SL_q(N)"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--q-power", g.L, "q = v^L")->capture_default_str();
  app.add_option("--format", g.format, "text, json or latex")->capture_default_str();
  app.add_option("--output", g.output, "write the report here");
  app.add_option("--specialize", g.specialize, "rational value of v");
  app.add_option("--bound", g.bound, "overlap degree bound")->capture_default_str();
  app.add_option("--degree", g.degree, "evaluation depth in evidential mode")->capture_default_str();
  app.add_option("--fixtures", g.fixtures, "fixture directory");

  std::vector<int> rs;
  auto* v2 = app.add_subcommand("verify-sl2", "right ideals, tables, star structures and S(R) on SL_q(2)");
  v2->add_option("--r", rs, "calculi to check (default 1..4)");

  int gamma = 0;
  std::string alpha, beta, what = "all";
  auto* v3 = app.add_subcommand("verify-sl3", "the SL_q(3) calculi");
  v3->add_option("--gamma", gamma, "1 or 2");
  v3->add_option("--alpha", alpha);
  v3->add_option("--beta", beta);
  v3->add_option("what", what, "all, dims or membership")->capture_default_str();

  int sn = 3, sr = 1;
  auto* vn = app.add_subcommand("verify-sln", "L-functional calculi on SL_q(N)");
  vn->add_option("--n", sn)->capture_default_str();
  vn->add_option("--r", sr)->capture_default_str();

  CalcArgs ca;
  auto* ex = app.add_subcommand("exterior", "S(R), Groebner basis and dims of one calculus");
  add_calc_flags(ex, ca);
  auto* sg = app.add_subcommand("sigma", "sigma matrix and its ranks");
  add_calc_flags(sg, ca);

  auto* dm = app.add_subcommand("dims", "dimension and Groebner suite");
  auto* lm = app.add_subcommand("limits", "classical limit suite");
  auto* pr = app.add_subcommand("properties", "property suite");

  std::string algebra = "sl2", expr;
  auto* ev = app.add_subcommand("eval", "normal form of an expression");
  ev->add_option("--algebra", algebra, "sl2, sl3, uq2, uq3")->capture_default_str();
  ev->add_option("expr", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!g.fixtures.empty()) set_fixture_dir(g.fixtures);
    SuiteOptions o = options(g);
    parse_format(g.format);

    if (*v2) {
      if (!rs.empty()) o.rs = rs;
      for (int r : o.rs) {
        if (r < 1 || r > 4) throw ConfigError("--r must be in 1..4");
      }
      Report rep("SL_q(2)");
      if (o.v0) {
        rep.append(suite_sl2_membership(o));
      } else {
        rep.append(suite_sl2_ideals(o));
        rep.append(suite_sl2_tables(o));
        rep.append(suite_star(o));
        rep.append(suite_sl2_membership(o));
      }
      return finish(rep, g);
    }
    if (*v3) {
      if (gamma != 0 && (gamma < 1 || gamma > 2)) throw ConfigError("--gamma must be 1 or 2");
      if (gamma == 0 && (alpha.empty() || beta.empty())) throw ConfigError("verify-sl3 needs --gamma or both --alpha and --beta");
      if (what != "all" && what != "dims" && what != "membership") throw ConfigError("unknown check '" + what + "'");
      if (what == "dims") {
        CalcArgs c;
        c.name = "sl3";
        c.gamma = gamma;
        c.alpha = alpha;
        c.beta = beta;
        Exterior x = build_exterior(c, o);
        if (g.format == "text" && g.output.empty()) {
          std::cout << join(x.E->dims(x.E->groebner().ok ? x.C->size() + 1 : o.bound)) << "\n";
          return 0;
        }
        return finish(exterior_report(x, o), g);
      }
      Report rep("SL_q(3)");
      if (gamma != 0) {
        o.gammas = {gamma};
        if (what == "all") {
          rep.append(suite_sl3(o));
          rep.append(suite_dims([&] {
            SuiteOptions d = o;
            d.rs = {};
            return d;
          }()));
        }
        if (what == "membership") rep.append(suite_sl3_membership(o));
      } else {
        o.alpha_beta = std::make_pair(o.pb.parse(alpha), o.pb.parse(beta));
        rep.append(suite_sl3_membership(o));
      }
      return finish(rep, g);
    }
    if (*vn) {
      if (sn < 2) throw ConfigError("--n must be at least 2");
      if (sr != 1 && sr != 2) throw ConfigError("--r must be 1 or 2");
      o.sizes = {sn};
      o.sln_rs = {sr};
      return finish(suite_sln(o), g);
    }
    if (*ex) return finish(exterior_report(build_exterior(ca, o), o), g);
    if (*sg) return finish(sigma_report_of(build_exterior(ca, o)), g);
    if (*dm) return finish(suite_dims(o), g);
    if (*lm) return finish(suite_limits(o), g);
    if (*pr) return finish(suite_properties(o), g);
    if (*ev) {
      std::string out;
      if (algebra == "sl2" || algebra == "sl3") {
        auto A = coord_algebra(algebra == "sl2" ? 2 : 3, o.pb);
        out = A->nf(A->parse(expr)).to_string(o.pb);
      } else if (algebra == "uq2" || algebra == "uq3") {
        auto U = uq_algebra(algebra == "uq2" ? 2 : 3, o.pb);
        out = U->nf(U->parse(expr)).to_string(o.pb);
      } else {
        throw ConfigError("unknown algebra '" + algebra + "'");
      }
      std::cout << out << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "qcalc: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "qcalc: parse error: " << e.what() << "\n";
    return 2;
  } catch (const FixtureError& e) {
    std::cerr << "qcalc: fixture error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qcalc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qcalc: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
