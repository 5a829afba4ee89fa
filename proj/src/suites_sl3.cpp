#include "suites_common.hpp"

namespace qcalc {

using namespace detail;

namespace {

std::string gtag(int g) { return tag("gamma", g); }

std::string fill(std::string s, const std::string& key, const std::string& v) {
  std::size_t p;
  while ((p = s.find(key)) != std::string::npos) s.replace(p, key.size(), v);
  return s;
}

bool is_excluded(const Scalar& a, const Scalar& b, const PowerBasis& pb) {
  return (a == pb.q() && b == pb.q().inverse()) || (a == pb.q().inverse() && b == pb.q());
}

}  // namespace

Report suite_sl3_membership(const SuiteOptions& o) {
  Report rep("SL_q(3) membership of w13 (x) w31");
  const PowerBasis& pb = o.pb;
  const json& M = fixture_at("sl3", "membership");
  const std::string anchor = str(M["anchor"]);
  std::vector<std::pair<Scalar, Scalar>> grid;
  std::string mode;
  if (o.alpha_beta) {
    grid.push_back(*o.alpha_beta);
    mode = "exact";
  } else {
    std::vector<Scalar> g;
    for (const auto& v : M["grid"]) g.push_back(pb.parse(str(v)));
    for (const auto& a : g) {
      for (const auto& b : g) grid.emplace_back(a, b);
    }
    mode = "grid(" + std::to_string(g.size()) + "x" + std::to_string(g.size()) + ")";
  }
  auto point = [&](const std::pair<Scalar, Scalar>& p) { return "(" + pb.format(p.first) + ", " + pb.format(p.second) + ")"; };

  for (const auto& m : M["displays"]) {
    std::string bad, engine_bad;
    bool member = true;
    for (const auto& p : grid) {
      auto C = sl3_calculus(p.first, p.second, pb);
      bool mem = false;
      Form s = symmetric(*C, C->parse_coord(str(m["x"])), &mem);
      member = member && mem;
      Form want = C->zero_form();
      if (m.contains("printed")) {
        want = C->parse_form(str(m["printed"]));
      } else {
        Form base = C->zero_form();
        for (const auto& t : m["printed_in_terms"]) {
          base += C->parse_coord(str(t[0])).constant_term() * symmetric(*C, C->parse_coord(str(t[1])));
        }
        want = base + C->parse_form(str(m["remainder"]));
        if (m.contains("engine_remainder") && !(s == base + C->parse_form(str(m["engine_remainder"]))) && engine_bad.empty()) {
          engine_bad = point(p);
        }
      }
      if (!(s == want) && bad.empty()) bad = point(p) + ": engine " + s.to_string(pb) + ", printed " + want.to_string(pb);
    }
    std::string id = "sl3/membership S(" + str(m["x"]) + ")";
    rep.check(member, id + " in R", anchor, mode);
    std::string d = bad.empty() ? "matches the printed value" : "first mismatch at " + bad;
    if (!bad.empty() && m.contains("engine_remainder")) {
      d += engine_bad.empty() ? "; engine remainder " + str(m["engine_remainder"]) + " holds at every point"
                              : "; engine remainder fails at " + engine_bad;
    }
    rep.check(bad.empty(), id + " value", anchor, mode, d);
  }

  // w13 (x) w31 in S(R) off the excluded pairs, outside at them
  std::vector<std::pair<Scalar, Scalar>> members = grid;
  if (!o.alpha_beta) members.emplace_back(pb.q(), Scalar(2));
  std::vector<std::pair<Scalar, Scalar>> excluded;
  for (const auto& e : M["claim"]["excluded"]) excluded.emplace_back(pb.parse(str(e[0])), pb.parse(str(e[1])));
  auto in_closure = [&](const std::pair<Scalar, Scalar>& p, std::size_t* dim) {
    auto C = sl3_calculus(p.first, p.second, pb);
    auto cl = closure(*C, symmetric_span_kernel(*C, 2));
    if (dim) *dim = cl.space.dim();
    return cl.space.contains(C->parse_form(str(M["claim"]["element"])).to_vector(C->size()));
  };
  if (o.alpha_beta) {
    std::size_t dim = 0;
    bool in = in_closure(grid[0], &dim);
    bool expect = !is_excluded(grid[0].first, grid[0].second, pb);
    rep.check(in == expect, "sl3/membership w13 (x) w31 at " + point(grid[0]), anchor, "exact",
              std::string(in ? "in" : "not in") + " S(R), dim " + std::to_string(dim));
    return rep;
  }
  std::string miss;
  for (const auto& p : members) {
    if (!in_closure(p, nullptr) && miss.empty()) miss = point(p);
  }
  rep.check(miss.empty(), "sl3/membership w13 (x) w31 generic", anchor, "evidential(grid)",
            miss.empty() ? std::to_string(members.size()) + " sample pairs, all in S(R)" : "not in S(R) at " + miss);
  for (const auto& p : excluded) {
    std::size_t dim = 0;
    bool in = in_closure(p, &dim);
    rep.check(!in, "sl3/membership w13 (x) w31 excluded " + point(p), anchor, "exact",
              std::string(in ? "in" : "not in") + " S(R), dim " + std::to_string(dim));
  }
  return rep;
}

Report suite_sl3(const SuiteOptions& o) {
  Report rep("SL_q(3) calculi");
  const PowerBasis& pb = o.pb;
  const json& F = fixture("sl3");
  for (int g : o.gammas) {
    const std::string gk = "gamma" + std::to_string(g);
    const Built& B = built_sl3(g, pb, o.bound);
    const Calculus& C = *B.C;
    const int n = C.size();

    auto cov = covariance_check(C);
    rep.check(cov.ok, "sl3/covariance" + gtag(g), "sl3/coproducts", cov.mode);

    // printed quantum Lie relations in U_q(sl_3)
    const json& lr = F["lie_relations"];
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& key : {std::string("shared"), gk}) {
      for (const auto& rel : lr[key]) rels.emplace_back(str(rel[0]), str(rel[1]));
    }
    for (const auto& [l, r] : rels) {
      auto res = check_identity(C, C.parse_functional(l) - C.parse_functional(r));
      rep.check(res.ok, "sl3/quantum-lie" + gtag(g) + " " + l + " = " + r, str(lr["anchor"]), res.mode,
                res.ok ? "" : "residual " + res.residual.to_string(pb));
    }

    // the same table read off sigma
    auto sb = shaped_basis(B.S);
    rep.check(sb.ok, "sl3/sigma" + gtag(g) + " shaped basis", str(F["sigma"]["anchor"]), "exact",
              sb.ok ? std::to_string(sb.elements.size()) + " elements" : sb.failure);
    if (!sb.ok) continue;
    Sigma s = build_sigma(n, sb.elements);
    AlphabetPtr X = lie_alphabet(C);
    int outside = 0;
    std::map<std::pair<int, int>, NCPoly> sigma_rel;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        auto c = lie_structure(C, s, i, j);
        if (!c) {
          ++outside;
          continue;
        }
        NCPoly R = NCPoly::monomial(X, {i, j});
        const auto& row = s.m[static_cast<std::size_t>(i * n + j)];
        for (int src = 0; src < n * n; ++src) {
          if (!row[static_cast<std::size_t>(src)].is_zero()) R.add_term({src / n, src % n}, -row[static_cast<std::size_t>(src)]);
        }
        for (int k = 0; k < n; ++k) {
          if (!(*c)[static_cast<std::size_t>(k)].is_zero()) R.add_term({k}, -(*c)[static_cast<std::size_t>(k)]);
        }
        sigma_rel.emplace(std::make_pair(i, j), R);
      }
    }
    rep.check(outside == 0, "sl3/quantum-lie" + gtag(g) + " sigma relations in span{X}", str(lr["anchor"]), C.mode(),
              std::to_string(n * (n - 1) - outside) + " of " + std::to_string(n * (n - 1)) + " ordered pairs");
    // words of length <= 2 as coordinates
    auto coords = [n](const NCPoly& P) {
      SVec v;
      for (const auto& [w, c] : P.terms()) {
        int k = w.empty() ? 0 : w.size() == 1 ? 1 + w[0] : 1 + n + w[0] * n + w[1];
        v[k] = c;
      }
      return v;
    };
    Echelon span;
    for (const auto& [ij, R] : sigma_rel) span.insert(coords(R));
    std::string unmatched;
    int matched = 0;
    for (const auto& [l, r] : rels) {
      NCPoly P = parse_lie(C, X, l) - parse_lie(C, X, r);
      bool ok = true;
      for (const auto& [w, c] : P.terms()) ok = ok && w.size() <= 2;
      if (ok && span.contains(coords(P))) {
        ++matched;
      } else if (unmatched.empty()) {
        unmatched = l + " = " + r;
      }
    }
    rep.check(unmatched.empty(), "sl3/quantum-lie" + gtag(g) + " printed table = sigma table", str(lr["anchor"]), "exact",
              std::to_string(matched) + " of " + std::to_string(rels.size()) + " printed relations in the span of the sigma relations" +
                  (unmatched.empty() ? "" : "; first unmatched " + unmatched));

    // S(R)
    rep.check(B.S.dim() == 36 && B.rounds == 1, "sl3/symmetric-space" + gtag(g) + " closure", "sl3/symmetric-space", "exact",
              "dim " + std::to_string(B.S.dim()) + ", stable after " + std::to_string(B.rounds) + " round(s)");
    const json& sbj = F["symmetric_basis"];
    std::vector<std::string> printed;
    for (const auto& key : {std::string("shared"), gk}) {
      for (const auto& e : sbj["printed"][key]) printed.push_back(str(e));
    }
    std::vector<std::string> outside_list;
    for (const auto& e : printed) {
      if (!B.S.contains(C.parse_form(e).to_vector(n))) outside_list.push_back(e);
    }
    std::vector<std::string> expected_out;
    for (const auto& e : sbj["not_in_span"][gk]) expected_out.push_back(str(e));
    std::string d = std::to_string(printed.size() - outside_list.size()) + " of " + std::to_string(printed.size()) + " printed elements in S(R)";
    for (const auto& e : outside_list) d += "; outside: " + e;
    rep.check(outside_list.empty(), "sl3/symmetric-space" + gtag(g) + " printed list", str(sbj["anchor"]), "exact", d);
    TensorSpace corrected(n);
    bool all_in = outside_list == expected_out;
    for (const auto& e : printed) {
      if (std::find(expected_out.begin(), expected_out.end(), e) == expected_out.end()) corrected.add(C.parse_form(e).to_vector(n));
    }
    for (const auto& e : sbj["missing_from_list"][gk]) {
      SVec v = C.parse_form(str(e)).to_vector(n);
      all_in = all_in && B.S.contains(v);
      corrected.add(v);
    }
    rep.check(all_in && corrected.dim() == B.S.dim(), "sl3/symmetric-space" + gtag(g) + " corrected list", str(sbj["anchor"]), "exact",
              "printed list without the elements outside S(R), with the missing ones: rank " + std::to_string(corrected.dim()));

    // invariant forms, Maurer-Cartan, commutation
    for (const auto& [u, v] : F["invariant_forms"]["values"].items()) {
      std::string dd = form_diff(omega(C, C.parse_coord(u)), C.parse_form(str(v)), pb);
      rep.check(dd.empty(), "sl3/invariant-forms" + gtag(g) + " omega(" + u + ")", str(F["invariant_forms"]["anchor"]), "exact", dd);
    }
    const ExteriorAlgebra& E = *B.E;
    for (const auto& key : {std::string("shared"), gk}) {
      for (const auto& [k, v] : F["maurer_cartan"][key].items()) {
        Form want = E.reduce(C.parse_form(str(v)));
        Form got = E.maurer_cartan(C.index(k));
        rep.check(got == want, "sl3/maurer-cartan" + gtag(g) + " d w" + k, str(F["maurer_cartan"]["anchor"]), "exact",
                  got == want ? "" : "engine " + got.to_string(pb, "^"));
      }
    }
    const json& cm = F["commutation"];
    for (const auto& [k, row] : cm["rows"].items()) {
      std::string bad;
      for (int j = 1; j <= 3; ++j) {
        for (int i = 1; i <= 3; ++i) {
          Form want = C.parse_form(fill(str(row[static_cast<std::size_t>(j - 1)]), "{i}", std::to_string(i)));
          Form got = right_mul(C, C.omega_word({C.index(k)}), C.coord().u(i, j));
          if (!(got == want) && bad.empty()) bad = "u" + std::to_string(i) + std::to_string(j) + ": engine " + got.to_string(pb);
        }
      }
      rep.check(bad.empty(), "sl3/commutation" + gtag(g) + " w" + k, str(cm["anchor"]), "exact", bad);
    }

    // sigma
    auto sr = sigma_report(s, B.S);
    const json& sj = F["sigma"];
    rep.check(sr.involution, "sl3/sigma" + gtag(g) + " sigma^2 = 1", str(sj["anchor"]), "exact");
    rep.check(sr.rank_minus == sj["rank_minus"].get<std::size_t>() && sr.rank_plus == sj["rank_plus"].get<std::size_t>(),
              "sl3/sigma" + gtag(g) + " ranks", str(sj["anchor"]), "exact",
              "rank(sigma - 1) = " + std::to_string(sr.rank_minus) + ", rank(sigma + 1) = " + std::to_string(sr.rank_plus));
    rep.check(sr.spans_S, "sl3/sigma" + gtag(g) + " (1 + sigma) spans S(R)", str(sj["anchor"]), "exact");
    if (sj["braid"]["calculus"].get<int>() == g) {
      auto w3 = [&](const json& l) { return (C.index(str(l[0])) * n + C.index(str(l[1]))) * n + C.index(str(l[2])); };
      SVec v{{w3(sj["braid"]["input"]), Scalar(1)}};
      SVec lhs = s.apply_triple(s.apply_triple(s.apply_triple(v, 0), 1), 0);
      SVec rhs = s.apply_triple(s.apply_triple(s.apply_triple(v, 1), 0), 1);
      auto expect = [&](const json& terms) {
        SVec e;
        for (const auto& t : terms) e[w3(t[1])] = pb.parse(str(t[0]));
        return e;
      };
      bool ok = lhs == expect(sj["braid"]["s12s23s12"]) && rhs == expect(sj["braid"]["s23s12s23"]) && !(lhs == rhs);
      rep.check(ok, "sl3/sigma" + gtag(g) + " braid relation fails", str(sj["anchor"]), "exact",
                "coefficients (" + pb.format(lhs[w3(sj["braid"]["s12s23s12"][1][1])]) + ") vs (" +
                    pb.format(rhs[w3(sj["braid"]["s23s12s23"][1][1])]) + ") on w13 w21 w13");
    }
  }
  return rep;
}

}  // namespace qcalc
