#include "suites_common.hpp"

#include <numeric>
#include <random>
#include <tuple>

namespace qcalc {

using namespace detail;

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::vector<std::uint64_t> to_dims(const json& j) {
  std::vector<std::uint64_t> v;
  for (const auto& x : j) v.push_back(x.get<std::uint64_t>());
  return v;
}

// dims_n = 0 above |I| and dims_|I| in {0, 1}
bool top_degree_ok(const ExteriorAlgebra& E) {
  int n = E.calculus().size();
  auto d = E.dims(n + 1);
  return d[static_cast<std::size_t>(n + 1)] == 0 && d[static_cast<std::size_t>(n)] <= 1;
}

}  // namespace

Report suite_dims(const SuiteOptions& o) {
  Report rep("exterior algebras");
  const PowerBasis& pb = o.pb;
  const json& D = fixture("derived");
  for (int g : o.gammas) {
    const Built& B = built_sl3(g, pb, o.bound);
    const ExteriorAlgebra& E = *B.E;
    const auto& gb = E.groebner();
    rep.check(gb.ok, "sl3/exterior-dims" + tag("gamma", g) + " Groebner basis", "sl3/dimensions", "exact",
              std::to_string(B.S.dim()) + " quadratic relations, overlaps resolved up to degree " + std::to_string(std::max(o.bound, 3)));
    auto want = to_dims(fixture_at("sl3", "dims/values"));
    auto got = E.dims(static_cast<int>(want.size()) - 1);
    rep.check(got == want, "sl3/exterior-dims" + tag("gamma", g) + " dims", "sl3/dimensions", "exact", join(got));
    if (g == 1) {
      auto oracle = to_dims(D["sl3_exterior_dims"]["values"]);
      bool ok = std::equal(oracle.begin(), oracle.end(), got.begin());
      rep.check(ok, "sl3/exterior-dims gamma=1 oracle", str(D["sl3_exterior_dims"]["anchor"]), "exact",
                "oracle through degree " + std::to_string(oracle.size() - 1) + ": " + join(oracle));
    }
    rep.check(top_degree_ok(E), "sl3/exterior-dims" + tag("gamma", g) + " top degree", "sl3/dimensions", "exact");
  }
  for (int r : o.rs) {
    const Built& B = built_sl2(r, pb, o.bound);
    const ExteriorAlgebra& E = *B.E;
    auto got = E.dims(4);
    auto want = to_dims(D["sl2_exterior_dims"]["values"][std::to_string(r)]);
    const std::string anchor = str(D["sl2_exterior_dims"]["anchor"]);
    rep.check(got == want, "sl2/exterior-dims" + tag("r", r) + " dims", anchor, "exact", join(got) + " (oracle " + join(want) + ")");
    rep.check(B.S.dim() == D["sl2_symmetric_dims"]["values"][std::to_string(r)]["dim"].get<std::size_t>(),
              "sl2/exterior-dims" + tag("r", r) + " dim S(R)", str(D["sl2_symmetric_dims"]["anchor"]), "exact",
              std::to_string(B.S.dim()));
    if (r > 1) {
      rep.check(got[3] == 0, "sl2/exterior-dims" + tag("r", r) + " all 3-forms vanish", anchor, "exact",
                "dim of 3-forms " + std::to_string(got[3]));
      bool dw1 = E.maurer_cartan(B.C->index("1")).is_zero();
      rep.check(dw1, "sl2/exterior-dims" + tag("r", r) + " d w1 = 0", "sl2/maurer-cartan", "exact",
                dw1 ? "" : "d w1 = " + E.maurer_cartan(B.C->index("1")).to_string(pb, "^"));
    }
    rep.check(top_degree_ok(E), "sl2/exterior-dims" + tag("r", r) + " top degree", anchor, "exact");
  }
  return rep;
}

Report suite_sln(const SuiteOptions& o) {
  Report rep("SL_q(N) calculi from L-functionals");
  const json& F = fixture("sln");
  for (int N : o.sizes) {
    PowerBasis pb(std::lcm(o.pb.L(), 2 * N));
    for (int r : o.sln_rs) {
      auto C = sln_calculus(N, r, pb);
      const CoordAlgebra& A = C->coord();
      const FunctionalSpace& S = *C->space();
      const std::string ct = tag("N", N) + tag("r", r);
      const std::string mode = "evidential(" + std::to_string(o.degree) + ")";

      std::string bad;
      Scalar q2 = pb.q_pow(2);
      for (int i = 0; i < C->size(); ++i) {
        const std::string& l = C->label(i);
        for (int a = 1; a <= N; ++a) {
          for (int b = 1; b <= N; ++b) {
            Scalar want;
            if (l.size() == 2) {
              want = (a == l[0] - '0' && b == l[1] - '0') ? Scalar(1) : Scalar(0);
            } else {
              int m = std::stoi(l);
              if (a == b) want = Scalar(a == m ? 1 : 0) - (a == m + 1 ? q2 : Scalar(0));
            }
            if (!(C->X(i, A.u(a, b)) == want) && bad.empty()) bad = "X" + l + "(u" + std::to_string(a) + std::to_string(b) + ")";
          }
        }
      }
      rep.check(bad.empty(), "sln/normalization" + ct, str(F["values"]["anchor"]), "exact", bad);

      std::string tr;
      for (int i = 0; i < C->size(); ++i) {
        if (!C->X(i, A.quantum_trace()).is_zero() && tr.empty()) tr = "X" + C->label(i) + "(U) != 0";
      }
      rep.check(tr.empty(), "sln/quantum-trace" + ct, str(F["values"]["anchor"]), "exact", tr.empty() ? "every X annihilates U" : tr);

      auto cov = covariance_check(*C, o.degree);
      rep.check(cov.ok, "sln/covariance" + ct, str(F["coproducts"]["anchor"]), cov.mode);

      // displayed triangular forms of Delta X
      auto sub = [](std::string s, const std::map<std::string, int>& v) {
        for (const auto& [k, x] : v) {
          std::string key = "{" + k + "}";
          std::size_t p;
          while ((p = s.find(key)) != std::string::npos) s.replace(p, key.size(), std::to_string(x));
        }
        return s;
      };
      auto label_of = [](const std::string& X) { return X.substr(2, X.size() - 3); };
      struct Expect {
        int target;
        std::map<int, NCPoly> cof;
      };
      std::vector<Expect> ex;
      for (const auto& e : F["coproducts"]["entries"]) {
        if (e["r"].get<int>() != r) continue;
        for (int i = 1; i <= N; ++i) {
          for (int j = i + 1; j <= N; ++j) {
            std::map<std::string, int> v{{"i", i}, {"j", j}};
            Expect x;
            x.target = C->index(label_of(sub(str(e["functional"]), v)));
            int lo = (str(e["m_from"][0]) == "i" ? i : j) + e["m_from"][1].get<int>();
            int hi = (str(e["m_to"][0]) == "i" ? i : j) + e["m_to"][1].get<int>();
            for (int m = lo; m <= hi; ++m) {
              v["m"] = m;
              int k = C->index(label_of(sub(str(e["leg"]), v)));
              x.cof.try_emplace(k, S.alphabet()).first->second += S.parse(sub(str(e["cofactor"]), v));
            }
            ex.push_back(std::move(x));
          }
        }
      }
      const json& dg = F["coproducts"]["diagonal"];
      for (int m = 1; m < N; ++m) {
        std::map<std::string, int> v{{"n", m}, {"n1", m + 1}};
        Expect x;
        x.target = C->index(label_of(sub(str(dg["functional"]), v)));
        x.cof.emplace(C->index(label_of(sub(str(dg["leg"]), v))), S.parse(sub(str(dg["cofactor"]), v)));
        ex.push_back(std::move(x));
      }
      std::string mism;
      for (const auto& x : ex) {
        for (int k = 0; k < C->size() && mism.empty(); ++k) {
          auto it = x.cof.find(k);
          for (int n = 0; n <= o.degree; ++n) {
            const SMat& got = C->f_matrix(k, x.target, n);
            SMat want = it == x.cof.end() ? SMat::zero(got.dim) : S.matrix(it->second, n);
            if (!(got + Scalar(-1) * want).is_zero()) {
              mism = "f^" + C->label(k) + "_" + C->label(x.target) + " on words of length " + std::to_string(n);
              break;
            }
          }
        }
      }
      rep.check(mism.empty() && ex.size() == static_cast<std::size_t>(C->size()), "sln/coproducts" + ct,
                str(F["coproducts"]["anchor"]), mode,
                mism.empty() ? std::to_string(ex.size()) + " functionals in the displayed triangular form" : "mismatch " + mism);

      // w_ij ^ w_ji
      const json& vj = F["vanishing"];
      auto probe = [&](const json& pairs, bool expect_in) {
        TensorSpace Sp = symmetric_span_kernel(*C, 2);
        const int n = C->size();
        for (const auto& p : pairs) {
          SVec v{{C->index(str(p[0])) * n + C->index(str(p[1])), Scalar(1)}};
          bool in = Sp.contains(v);
          if (!in && !expect_in) in = closure(*C, Sp).space.contains(v);
          std::string id = "sln/wedge-vanishing" + ct + " w" + str(p[0]) + " (x) w" + str(p[1]);
          rep.check(in == expect_in, id, str(vj["anchor"]), mode,
                    std::string(in ? "in S(R), so w" : "not in S(R), so w") + str(p[0]) + " ^ w" + str(p[1]) + (in ? " = 0" : " != 0"));
        }
      };
      if (N == vj["N"].get<int>()) probe(vj["pairs"], true);
      if (N == vj["control"]["N"].get<int>()) probe(vj["control"]["pairs"], false);
    }
  }
  return rep;
}

namespace {

const Rational one(1);

// M(X)_{rs} = X(u^r_s) at v = 1
std::optional<SVec> classical_matrix(const Calculus& C, int i) {
  SVec m;
  const int N = C.N();
  for (int a = 1; a <= N; ++a) {
    for (int b = 1; b <= N; ++b) {
      Scalar x = C.X(i, C.coord().u(a, b));
      if (!x.regular_at(one)) return std::nullopt;
      Rational v = x.specialize(one);
      if (v != 0) m[(a - 1) * N + b - 1] = Scalar(v);
    }
  }
  return m;
}

SVec mat_mul(const SVec& x, const SVec& y, int N) {
  SVec out;
  for (const auto& [ix, cx] : x) {
    for (const auto& [iy, cy] : y) {
      if (ix % N != iy / N) continue;
      int k = (ix / N) * N + iy % N;
      out[k] += cx * cy;
      if (out[k].is_zero()) out.erase(k);
    }
  }
  return out;
}

SVec vadd(SVec a, const SVec& b, const Scalar& c) {
  for (const auto& [k, v] : b) {
    a[k] += c * v;
    if (a[k].is_zero()) a.erase(k);
  }
  return a;
}

struct Classical {
  bool ok = false;
  std::vector<SVec> M;
  Echelon ech{true};
};

Classical classical_of(const Calculus& C) {
  Classical cl;
  for (int i = 0; i < C.size(); ++i) {
    auto m = classical_matrix(C, i);
    if (!m) return cl;
    cl.M.push_back(*m);
    cl.ech.insert(*m);
  }
  cl.ok = cl.ech.rank() == static_cast<std::size_t>(C.size());
  return cl;
}

// X_i X_j - X_j X_i - sum C^k X_k with C from the matrices
std::optional<NCPoly> classical_relation(const Classical& cl, const AlphabetPtr& X, int i, int j, int N) {
  SVec br = vadd(mat_mul(cl.M[static_cast<std::size_t>(i)], cl.M[static_cast<std::size_t>(j)], N),
                 mat_mul(cl.M[static_cast<std::size_t>(j)], cl.M[static_cast<std::size_t>(i)], N), Scalar(-1));
  auto c = cl.ech.solve(br);
  if (!c) return std::nullopt;
  NCPoly R = NCPoly::monomial(X, {i, j}) - NCPoly::monomial(X, {j, i});
  for (const auto& [k, v] : *c) R.add_term({k}, -v);
  return R;
}

// The specialized relation is a multiple of its classical bracket.
std::string check_classical(const Classical& cl, const AlphabetPtr& X, const NCPoly& P, int N) {
  auto P1 = specialize(P, one);
  if (!P1) return "coefficient with a pole at q = 1";
  if (P1->is_zero()) return "relation vanishes at q = 1";
  for (const auto& [w, c] : P1->terms()) {
    if (w.size() > 2) return "term of degree " + std::to_string(w.size()) + " survives";
    if (w.size() != 2 || w[0] == w[1]) continue;
    auto R = classical_relation(cl, X, w[0], w[1], N);
    if (!R) return "bracket outside span{X}";
    if (!(*P1 - c * *R).is_zero()) return "not a multiple of the sl_N bracket";
    return "";
  }
  return "no commutator term";
}

}  // namespace

Report suite_limits(const SuiteOptions& o) {
  Report rep("classical limit at v = 1");
  const PowerBasis& pb = o.pb;
  struct Item {
    CalculusPtr C;
    std::vector<std::string> rels;
    const Built* B = nullptr;
  };
  std::vector<Item> items;
  const json& F2 = fixture("sl2");
  for (int r : o.rs) {
    Item it;
    it.C = sl2_calculus(r, pb);
    for (const auto& e : F2["lie_relations"]["entries"]) {
      if (has_r(e["r"], r)) it.rels.push_back(str(e["lhs"]) + " - (" + str(e["rhs"]) + ")");
    }
    it.B = &built_sl2(r, pb, o.bound);
    items.push_back(std::move(it));
  }
  const json& F3 = fixture("sl3");
  for (int g : o.gammas) {
    Item it;
    it.B = &built_sl3(g, pb, o.bound);
    it.C = it.B->C;
    for (const auto& key : {std::string("shared"), "gamma" + std::to_string(g)}) {
      for (const auto& e : F3["lie_relations"][key]) it.rels.push_back(str(e[0]) + " - (" + str(e[1]) + ")");
    }
    items.push_back(std::move(it));
  }
  for (int N : {2, 3}) {
    for (int r : o.sln_rs) {
      Item it;
      it.C = sln_calculus(N, r, PowerBasis(std::lcm(pb.L(), 2 * N)));
      items.push_back(std::move(it));
    }
  }
  for (const auto& it : items) {
    const Calculus& C = *it.C;
    const std::string id = "limit/" + C.name();
    std::string bad;
    for (const auto& row : commutation_table(C)) {
      const NCPoly u = NCPoly::letter(C.coord().alphabet(), row.generator);
      Form lhs = C.zero_form();
      lhs.add({row.form}, u);
      Form diff = row.value - lhs;
      for (const auto& [w, c] : diff.terms()) {
        auto s = specialize(c, one);
        if ((!s || !s->is_zero()) && bad.empty()) bad = "w" + C.label(row.form) + " * " + C.coord().alphabet()->display(row.generator);
      }
    }
    rep.check(bad.empty(), id + " commutation", "limit/commutation", "exact",
              bad.empty() ? "w x = x w for every form and generator" : "nontrivial at q = 1: " + bad);

    Classical cl = classical_of(C);
    AlphabetPtr X = lie_alphabet(C);
    if (!it.B) {
      // traceless and independent: a basis of sl_N
      bool traceless = true;
      for (const auto& m : cl.M) {
        Scalar t;
        for (int a = 0; a < C.N(); ++a) {
          auto f = m.find(a * C.N() + a);
          if (f != m.end()) t += f->second;
        }
        traceless = traceless && t.is_zero();
      }
      rep.check(cl.ok && traceless, id + " classical functionals", "limit/quantum-lie", "exact",
                "X(u^r_s) at q = 1 form a basis of sl_" + std::to_string(C.N()));
      continue;
    }
    std::string lbad;
    for (const auto& rel : it.rels) {
      std::string why = check_classical(cl, X, parse_lie(C, X, rel), C.N());
      if (!why.empty() && lbad.empty()) lbad = rel + ": " + why;
    }
    rep.check(cl.ok && lbad.empty(), id + " quantum Lie relations", "limit/quantum-lie", "exact",
              lbad.empty() ? std::to_string(it.rels.size()) + " relations become sl_" + std::to_string(C.N()) + " brackets" : lbad);

    auto sb = shaped_basis(it.B->S);
    if (!sb.ok) continue;
    Sigma s = build_sigma(C.size(), sb.elements);
    const int n = C.size();
    bool flip = s.ok;
    for (int t = 0; t < n * n && flip; ++t) {
      for (int src = 0; src < n * n && flip; ++src) {
        const Scalar& c = s.m[static_cast<std::size_t>(t)][static_cast<std::size_t>(src)];
        if (!c.regular_at(one)) {
          flip = false;
          break;
        }
        Rational want = (t == (src % n) * n + src / n) ? 1 : 0;
        flip = c.specialize(one) == want;
      }
    }
    std::string cbad;
    for (int i = 0; i < n && cbad.empty(); ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        auto c = lie_structure(C, s, i, j);
        auto R = classical_relation(cl, X, i, j, C.N());
        if (!c || !R) {
          cbad = "X" + C.label(i) + " X" + C.label(j);
          break;
        }
        for (int k = 0; k < n; ++k) {
          const Scalar& ck = (*c)[static_cast<std::size_t>(k)];
          if (!ck.regular_at(one) || !(Scalar(ck.specialize(one)) == -R->coeff({k}))) cbad = "C^" + C.label(k) + " of X" + C.label(i) + " X" + C.label(j);
        }
        if (!cbad.empty()) break;
      }
    }
    rep.check(flip && cbad.empty(), id + " sigma and structure constants", "limit/sigma", "exact",
              !flip ? "sigma is not the flip at q = 1" : cbad.empty() ? "sigma -> flip, C^k_ij -> sl_N structure constants" : "differs: " + cbad);
  }
  return rep;
}

namespace {

using Triple = std::map<std::tuple<Word, Word, Word>, Scalar>;

void add_to(Triple& t, const std::tuple<Word, Word, Word>& k, const Scalar& c) {
  Scalar& v = t[k];
  v += c;
  if (v.is_zero()) t.erase(k);
}

// (Delta (x) id) Delta x and (id (x) Delta) Delta x
template <class Alg>
bool coassociative(const Alg& A, const NCPoly& x) {
  NCTensor d = A.normalize_tensor(A.coproduct(x));
  Triple l, r;
  for (const auto& [k, c] : d.terms()) {
    NCTensor da = A.normalize_tensor(A.coproduct(NCPoly::monomial(A.alphabet(), k.first)));
    for (const auto& [kk, cc] : da.terms()) add_to(l, {kk.first, kk.second, k.second}, c * cc);
    NCTensor db = A.normalize_tensor(A.coproduct(NCPoly::monomial(A.alphabet(), k.second)));
    for (const auto& [kk, cc] : db.terms()) add_to(r, {k.first, kk.first, kk.second}, c * cc);
  }
  return l == r;
}

template <class Alg>
bool counital(const Alg& A, const NCPoly& x) {
  NCTensor d = A.normalize_tensor(A.coproduct(x));
  NCPoly l(A.alphabet()), r(A.alphabet());
  for (const auto& [k, c] : d.terms()) {
    l += (c * A.counit(NCPoly::monomial(A.alphabet(), k.first))) * NCPoly::monomial(A.alphabet(), k.second);
    r += (c * A.counit(NCPoly::monomial(A.alphabet(), k.second))) * NCPoly::monomial(A.alphabet(), k.first);
  }
  return A.nf(l) == A.nf(x) && A.nf(r) == A.nf(x);
}

NCPoly random_poly(const AlphabetPtr& a, std::mt19937& rng, int terms, int max_len) {
  NCPoly p(a);
  std::uniform_int_distribution<int> len(0, max_len), let(0, static_cast<int>(a->size()) - 1), co(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int L = len(rng);
    for (int i = 0; i < L; ++i) w.push_back(let(rng));
    p.add_term(w, Scalar(co(rng)) * Scalar::v_power(2 * co(rng)));
  }
  return p;
}

}  // namespace

Report suite_properties(const SuiteOptions& o) {
  Report rep("properties");
  const PowerBasis& pb = o.pb;

  // pairing vanishes on the defining relations of SL_q(N)
  for (int N : {2, 3}) {
    auto S = FunctionalSpace::uq(N, pb);
    const CoordAlgebra& A = S->coord();
    CoordAlgebra Afree(N, pb, false);
    std::vector<NCPoly> Fs;
    for (std::size_t l = 0; l < S->alphabet()->size(); ++l) Fs.push_back(S->letter(static_cast<int>(l)));
    if (N == 2) {
      for (std::size_t a = 0; a < S->alphabet()->size(); ++a) {
        for (std::size_t b = 0; b < S->alphabet()->size(); ++b) Fs.push_back(S->letter(static_cast<int>(a)) * S->letter(static_cast<int>(b)));
      }
    }
    std::string bad;
    std::size_t count = 0;
    for (const auto& rel : Afree.relations()) {
      std::vector<NCPoly> xs{rel};
      for (std::size_t g = 0; g < A.alphabet()->size(); ++g) xs.push_back(rel * NCPoly::letter(A.alphabet(), static_cast<int>(g)));
      for (const auto& x : xs) {
        for (const auto& F : Fs) {
          ++count;
          if (!S->eval(F, x).is_zero() && bad.empty()) bad = F.to_string(pb) + " on " + x.to_string(pb);
        }
      }
    }
    rep.check(bad.empty(), "properties/pairing N=" + std::to_string(N), "properties/pairing", "exact",
              bad.empty() ? std::to_string(count) + " evaluations vanish" : "nonzero: " + bad);
  }
  {
    PowerBasis p6(std::lcm(pb.L(), 6));
    auto S = FunctionalSpace::lfun(3, p6);
    CoordAlgebra Afree(3, p6, false);
    std::string bad;
    for (const auto& rel : Afree.relations()) {
      for (std::size_t l = 0; l < S->alphabet()->size(); ++l) {
        if (!S->eval(S->letter(static_cast<int>(l)), rel).is_zero() && bad.empty()) bad = S->alphabet()->display(static_cast<int>(l));
      }
    }
    rep.check(bad.empty(), "properties/pairing L-functionals N=3", "properties/pairing", "exact", bad);
  }

  // Hopf axioms on generators
  for (int N : {2, 3}) {
    auto A = coord_algebra(N, pb);
    bool ca = true, cu = true, an = true;
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= N; ++j) {
        ca = ca && coassociative(*A, A->u(i, j));
        cu = cu && counital(*A, A->u(i, j));
        NCPoly l(A->alphabet()), r(A->alphabet());
        for (int k = 1; k <= N; ++k) {
          l += A->antipode(A->u(i, k)) * A->u(k, j);
          r += A->u(i, k) * A->antipode(A->u(k, j));
        }
        NCPoly e = i == j ? A->one() : NCPoly(A->alphabet());
        an = an && A->nf(l) == e && A->nf(r) == e;
      }
    }
    std::string n = " SL_q(" + std::to_string(N) + ")";
    rep.check(ca, "properties/hopf coassociativity" + n, "properties/hopf", "exact");
    rep.check(cu, "properties/hopf counit" + n, "properties/hopf", "exact");
    rep.check(an, "properties/hopf antipode" + n, "properties/hopf", "exact");
    auto U = uq_algebra(N, pb);
    bool uca = true, ucu = true;
    for (std::size_t l = 0; l < U->alphabet()->size(); ++l) {
      NCPoly x = NCPoly::letter(U->alphabet(), static_cast<int>(l));
      uca = uca && coassociative(*U, x);
      ucu = ucu && counital(*U, x);
    }
    rep.check(uca, "properties/hopf coassociativity U_q(sl_" + std::to_string(N) + ")", "properties/hopf", "exact");
    rep.check(ucu, "properties/hopf counit U_q(sl_" + std::to_string(N) + ")", "properties/hopf", "exact");
  }

  // Leibniz and d^2 = 0
  std::vector<const Built*> cats;
  for (int r : o.rs) cats.push_back(&built_sl2(r, pb, o.bound));
  for (int g : o.gammas) cats.push_back(&built_sl3(g, pb, o.bound));
  for (const Built* B : cats) {
    const Calculus& C = *B->C;
    const CoordAlgebra& A = C.coord();
    const int G = static_cast<int>(A.alphabet()->size());
    bool leib = true;
    for (int x = 0; x < G; ++x) {
      for (int y = 0; y < G; ++y) {
        NCPoly px = NCPoly::letter(A.alphabet(), x), py = NCPoly::letter(A.alphabet(), y);
        leib = leib && differential(C, A.nf(px * py)) == right_mul(C, differential(C, px), py) + left_mul(C, px, differential(C, py));
      }
    }
    rep.check(leib, "properties/leibniz " + C.name(), "properties/leibniz", "exact", "d(xy) = dx y + x dy on generator pairs");
    const ExteriorAlgebra& E = *B->E;
    bool dd = true;
    for (int g = 0; g < G; ++g) dd = dd && E.d(E.d(NCPoly::letter(A.alphabet(), g))).is_zero();
    for (int i = 0; i < C.size(); ++i) dd = dd && E.d(E.maurer_cartan(i)).is_zero();
    rep.check(dd, "properties/d-squared " + C.name(), "properties/leibniz", "exact", "on generators and on every d w_i");
  }

  // normal forms
  std::mt19937 rng(20240611);
  struct Sys {
    std::string name;
    AlphabetPtr a;
    std::function<NCPoly(const NCPoly&)> nf;
  };
  auto A2 = coord_algebra(2, pb), A3 = coord_algebra(3, pb);
  auto U2 = uq_algebra(2, pb), U3 = uq_algebra(3, pb);
  std::vector<Sys> systems{{"SL_q(2)", A2->alphabet(), [&](const NCPoly& p) { return A2->nf(p); }},
                           {"SL_q(3)", A3->alphabet(), [&](const NCPoly& p) { return A3->nf(p); }},
                           {"U_q(sl_2)", U2->alphabet(), [&](const NCPoly& p) { return U2->nf(p); }},
                           {"U_q(sl_3)", U3->alphabet(), [&](const NCPoly& p) { return U3->nf(p); }}};
  for (const auto& s : systems) {
    bool idem = true, lin = true, mult = true;
    for (int t = 0; t < 12; ++t) {
      NCPoly p = random_poly(s.a, rng, 3, 3), r = random_poly(s.a, rng, 3, 3);
      NCPoly np = s.nf(p), nr = s.nf(r);
      idem = idem && s.nf(np) == np;
      Scalar al = pb.q_pow(t % 5 - 2), be = Scalar(t - 6);
      lin = lin && s.nf(al * p + be * r) == al * np + be * nr;
      mult = mult && s.nf(p * r) == s.nf(np * nr);
    }
    rep.check(idem, "properties/normal-form idempotent " + s.name, "properties/normal-form", "exact", "12 random samples");
    rep.check(lin, "properties/normal-form linear " + s.name, "properties/normal-form", "exact", "12 random samples");
    rep.check(mult, "properties/normal-form product " + s.name, "properties/normal-form", "exact", "12 random samples, degree <= 6");
  }

  // reports are byte-identical across runs
  SuiteOptions so = o;
  Report a = suite_star(so), b = suite_star(so);
  bool same = true;
  for (Format f : {Format::Text, Format::Json, Format::Latex}) same = same && emit(a, f) == emit(b, f);
  std::string text = emit(a, Format::Text);
  bool lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == a.claims().size();
  rep.check(same && lines, "properties/determinism", "properties/report", "exact",
            "identical configuration gives identical text, json and latex; one text line per claim");
  return rep;
}

}  // namespace qcalc
