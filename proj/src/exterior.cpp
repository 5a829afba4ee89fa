#include "qcalc/exterior.hpp"

#include <deque>

namespace qcalc {

// ---------------------------------------------------------------- TensorSpace

SVec TensorSpace::to_internal(const SVec& v) const {
  SVec out;
  const int top = n_ * n_ - 1;
  for (const auto& [i, c] : v) out[top - i] = c;
  return out;
}

SVec TensorSpace::to_natural(const SVec& v) const { return to_internal(v); }

bool TensorSpace::add(const SVec& v) { return ech_.insert(to_internal(v)); }

bool TensorSpace::contains(const SVec& v) const { return ech_.contains(to_internal(v)); }

SVec TensorSpace::reduce(const SVec& v) const { return to_natural(ech_.reduce(to_internal(v))); }

std::vector<SVec> TensorSpace::basis() const {
  std::vector<SVec> out;
  for (const auto& [p, row] : ech_.rows()) out.push_back(to_natural(row));
  return out;
}

std::vector<Form> TensorSpace::forms(const Calculus& C) const {
  std::vector<Form> out;
  for (const auto& v : basis()) out.push_back(Form::from_vector(C.coord().alphabet(), C.omega_alphabet(), v, n_, 2));
  return out;
}

// ---------------------------------------------------------------- S(R)

TensorSpace symmetric_span(const Calculus& C, const std::vector<NCPoly>& generators, std::vector<NCPoly>* outside) {
  TensorSpace S(C.size());
  for (const auto& g : generators) {
    bool member = false;
    Form f = symmetric(C, g, &member);
    if (!member && outside) outside->push_back(g);
    S.add(f.to_vector(C.size()));
  }
  return S;
}

TensorSpace symmetric_span_kernel(const Calculus& C, int degree) {
  const CoordAlgebra& A = C.coord();
  const int n = C.size();
  const int off = n + 1;
  RewriteSystem free_rs(A.alphabet());
  const RewriteSystem& rs = A.normalizes() ? A.rules() : free_rs;
  Echelon ech;
  for (int d = 0; d <= degree; ++d) {
    for (const auto& w : normal_words(rs, d)) {
      NCPoly x = NCPoly::monomial(A.alphabet(), w);
      SVec v;
      Scalar e = A.counit(x);
      if (!e.is_zero()) v[0] = e;
      for (int i = 0; i < n; ++i) {
        Scalar xi = C.X(i, x);
        if (!xi.is_zero()) v[1 + i] = xi;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Scalar s = C.XX(i, j, x);
          if (!s.is_zero()) v[off + i * n + j] = s;
        }
      }
      ech.insert(v);
    }
  }
  TensorSpace S(n);
  for (const auto& [p, row] : ech.rows()) {
    if (p < off) continue;
    SVec s;
    for (const auto& [c, val] : row) s[c - off] = val;
    S.add(s);
  }
  return S;
}

SVec p_inv_right(const Calculus& C, const SVec& zeta, int generator) {
  const CoordAlgebra& A = C.coord();
  const int n = C.size();
  auto [a, b] = A.position(generator);
  SVec out;
  for (const auto& [idx, z] : zeta) {
    int i = idx / n, j = idx % n;
    for (int k = 0; k < n; ++k) {
      const SMat& Fi = C.f_matrix(i, k, 1);
      for (const auto& [p, v1] : Fi.rows[static_cast<std::size_t>(a - 1)]) {
        for (int l = 0; l < n; ++l) {
          Scalar v2 = C.f_matrix(j, l, 1).at(p, b - 1);
          if (v2.is_zero()) continue;
          auto& slot = out[k * n + l];
          slot += z * v1 * v2;
        }
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

ClosureResult closure(const Calculus& C, const TensorSpace& seeds) {
  ClosureResult res;
  res.space = seeds;
  res.seed_dim = seeds.dim();
  const int G = static_cast<int>(C.coord().alphabet()->size());
  std::vector<SVec> layer = seeds.basis();
  while (!layer.empty()) {
    ++res.rounds;
    std::vector<SVec> next;
    for (const auto& z : layer) {
      for (int g = 0; g < G; ++g) {
        SVec v = p_inv_right(C, z, g);
        if (res.space.add(v)) next.push_back(v);
      }
    }
    layer = std::move(next);
  }
  return res;
}

// ---------------------------------------------------------------- exterior algebra

ExteriorAlgebra::ExteriorAlgebra(CalculusPtr C, const TensorSpace& relations, int bound)
    : C_(std::move(C)), S_(relations), bound_(bound) {
  const AlphabetPtr& om = C_->omega_alphabet();
  const int n = C_->size();
  std::vector<std::string> names;
  for (int k = n - 1; k >= 0; --k) names.push_back(om->letter(k));
  auto wa = std::make_shared<Alphabet>(om->name() + " wedge", names);
  for (int k = 0; k < n; ++k) {
    wa->set_display(k, om->display(n - 1 - k));
    wa->set_latex(k, om->latex(n - 1 - k));
  }
  wedge_ = wa;
  for (const auto& v : S_.basis()) {
    NCPoly p(wedge_);
    for (const auto& [idx, c] : v) p.add_term(flip({idx / n, idx % n}), c);
    quadratic_.push_back(p);
  }
  gb_ = is_groebner(quadratic_, wedge_, std::max(bound, 3));
  rs_ = gb_.ok ? interreduce(quadratic_, wedge_) : complete(quadratic_, wedge_, bound);
  for (int i = 0; i < n; ++i) {
    Form f = C_->zero_form();
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) f.add({k, l}, -C_->XX(k, l, C_->dual(i)));
    }
    mc_.push_back(reduce(f));
  }
}

Word ExteriorAlgebra::flip(const Word& w) const {
  Word out(w);
  for (auto& x : out) x = C_->size() - 1 - x;
  return out;
}

std::vector<Word> ExteriorAlgebra::basis_words(int n) const {
  std::vector<Word> out;
  for (const auto& w : normal_words(rs_, n)) out.push_back(flip(w));
  return out;
}

std::vector<std::uint64_t> ExteriorAlgebra::dims(int n_max) const { return graded_dims(rs_, n_max); }

Form ExteriorAlgebra::reduce(const Form& f) const {
  Form out = C_->zero_form();
  for (const auto& [w, c] : f.terms()) {
    NCPoly r = rs_.normal_form_word(flip(w));
    for (const auto& [w2, s] : r.terms()) out.add(flip(w2), s * c);
  }
  return out;
}

Form ExteriorAlgebra::wedge(const Form& a, const Form& b) const {
  const CoordAlgebra& A = C_->coord();
  Form out = C_->zero_form();
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Form moved = right_mul(*C_, C_->omega_word(wa), cb);
      for (const auto& [wm, cm] : moved.terms()) {
        Word w = wm;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add(w, A.nf(ca * cm));
      }
    }
  }
  return reduce(out);
}

Form ExteriorAlgebra::maurer_cartan(int i) const { return mc_.at(static_cast<std::size_t>(i)); }

Form ExteriorAlgebra::d(const NCPoly& x) const { return differential(*C_, x); }

Form ExteriorAlgebra::d(const Form& f) const {
  Form out = C_->zero_form();
  for (const auto& [w, c] : f.terms()) {
    Form dc = differential(*C_, c);
    for (const auto& [wj, cj] : dc.terms()) {
      Word nw = wj;
      nw.insert(nw.end(), w.begin(), w.end());
      out.add(nw, cj);
    }
    for (std::size_t t = 0; t < w.size(); ++t) {
      Scalar sign = t % 2 == 0 ? Scalar(1) : Scalar(-1);
      for (const auto& [wm, cm] : mc_.at(static_cast<std::size_t>(w[t])).terms()) {
        Word nw(w.begin(), w.begin() + static_cast<long>(t));
        nw.insert(nw.end(), wm.begin(), wm.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(t) + 1, w.end());
        out.add(nw, sign * cm.constant_term() * c);
      }
    }
  }
  return reduce(out);
}

// ---------------------------------------------------------------- sigma

SVec Sigma::apply(const SVec& v) const {
  SVec out;
  const int nn = n * n;
  for (const auto& [s, c] : v) {
    for (int t = 0; t < nn; ++t) {
      const Scalar& e = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
      if (!e.is_zero()) out[t] += c * e;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

SVec Sigma::apply_triple(const SVec& v, int slot) const {
  SVec out;
  const int nn = n * n;
  for (const auto& [idx, c] : v) {
    int a = idx / nn, b = (idx / n) % n, cc = idx % n;
    int pair = slot == 0 ? a * n + b : b * n + cc;
    for (int t = 0; t < nn; ++t) {
      const Scalar& e = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(pair)];
      if (e.is_zero()) continue;
      int target = slot == 0 ? t * n + cc : a * nn + t;
      out[target] += c * e;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

// S intersected with the span of the given words.
std::vector<SVec> meet(const TensorSpace& S, const std::vector<int>& words) {
  Echelon e(true);
  std::vector<SVec> out;
  for (int w : words) {
    if (e.insert(S.reduce(SVec{{w, Scalar(1)}}))) continue;
    SVec v;
    for (const auto& [k, c] : e.last_relation()) v[words[static_cast<std::size_t>(k)]] = c;
    out.push_back(std::move(v));
  }
  return out;
}

Scalar entry(const SVec& v, int k) {
  auto it = v.find(k);
  return it == v.end() ? Scalar(0) : it->second;
}

}  // namespace

ShapedBasis shaped_basis(const TensorSpace& S) {
  ShapedBasis res;
  const int n = S.n();
  auto fail = [&](std::string why) {
    res.ok = false;
    res.failure = std::move(why);
    res.elements.clear();
    return res;
  };
  auto name = [n](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 0; i < n; ++i) {
    SVec sq{{i * n + i, Scalar(1)}};
    if (!S.contains(sq)) return fail("square " + name(i, i) + " outside S");
    res.elements.push_back(sq);
  }
  std::map<std::pair<int, int>, SVec> two;
  std::vector<std::pair<int, int>> pending;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int ij = i * n + j, ji = j * n + i;
      auto K = meet(S, {ij, ji});
      if (K.size() > 1) return fail("both orders of " + name(i, j) + " in S");
      if (K.empty()) {
        pending.emplace_back(i, j);
        continue;
      }
      SVec v = K[0];
      Scalar a = entry(v, ij), g = entry(v, ji);
      if (a.is_zero() || g.is_zero()) return fail("single word of " + name(i, j) + " in S");
      v = svec_scaled(v, a.inverse());
      two.emplace(std::make_pair(i, j), v);
      res.elements.push_back(v);
    }
  }
  for (auto [i, j] : pending) {
    int ij = i * n + j, ji = j * n + i;
    bool found = false;
    for (const auto& [pr, partner] : two) {
      auto [p, m] = pr;
      int pm = p * n + m, mp = m * n + p;
      auto K = meet(S, {ij, ji, pm, mp});
      for (SVec v : K) {
        Scalar a = entry(v, ij);
        if (a.is_zero()) continue;
        v = svec_scaled(v, a.inverse());
        svec_axpy(v, -(entry(v, mp) / entry(partner, mp)), partner);
        if (entry(v, ji).is_zero() || entry(v, pm).is_zero()) continue;
        res.elements.push_back(v);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) return fail("no three-term element for " + name(i, j));
  }
  if (res.elements.size() != S.dim() || rank_of(res.elements) != S.dim()) return fail("shaped elements do not form a basis");
  res.ok = true;
  return res;
}

Sigma build_sigma(int n, const std::vector<SVec>& shaped) {
  Sigma s;
  s.n = n;
  const std::size_t nn = static_cast<std::size_t>(n * n);
  s.m.assign(nn, std::vector<Scalar>(nn));
  auto set = [&](int target, int source, const Scalar& c) {
    s.m[static_cast<std::size_t>(target)][static_cast<std::size_t>(source)] = c;
  };
  auto fail = [&](const std::string& why) {
    s.ok = false;
    s.failure = why;
    return s;
  };
  std::map<int, Scalar> mu;  // ordered word nm -> mu of its two-term element
  for (const auto& v : shaped) {
    if (v.size() == 2) {
      int first = v.begin()->first;
      mu[first] = v.rbegin()->second / v.begin()->second;
    }
  }
  for (int i = 0; i < n; ++i) set(i * n + i, i * n + i, Scalar(1));
  for (const auto& v : shaped) {
    if (v.size() == 1) continue;
    int ij = -1;
    for (const auto& [w, c] : v) {
      int i = w / n, j = w % n;
      if (i < j && v.count(j * n + i) && c == Scalar(1)) ij = w;
    }
    if (ij < 0) return fail("element not normalized at an ordered pair");
    int i = ij / n, j = ij % n, ji = j * n + i;
    Scalar g = v.at(ji);
    set(ji, ij, g);
    set(ij, ji, g.inverse());
    if (v.size() == 2) continue;
    if (v.size() != 3) return fail("element with more than three terms");
    int nm = -1;
    for (const auto& [w, c] : v) {
      if (w != ij && w != ji) nm = w;
    }
    auto it = mu.find(nm);
    if (it == mu.end()) return fail("third term without a two-term partner");
    int mn = (nm % n) * n + nm / n;
    Scalar d = v.at(nm);
    set(nm, ij, d);
    set(mn, ji, -d * it->second * g.inverse());
  }
  s.ok = true;
  return s;
}

SigmaReport sigma_report(const Sigma& s, const TensorSpace& S) {
  SigmaReport r;
  const std::size_t nn = s.m.size();
  Matrix I = identity_matrix(nn);
  r.involution = matmul(s.m, s.m) == I;
  Matrix minus = s.m, plus = s.m;
  for (std::size_t i = 0; i < nn; ++i) {
    minus[i][i] -= Scalar(1);
    plus[i][i] += Scalar(1);
  }
  r.rank_minus = matrix_rank(minus);
  r.rank_plus = matrix_rank(plus);
  std::vector<SVec> gens;
  bool inside = true;
  for (int i = 0; i < s.n; ++i) {
    for (int j = i; j < s.n; ++j) {
      SVec e{{i * s.n + j, Scalar(1)}};
      SVec v = s.apply(e);
      svec_axpy(v, Scalar(1), e);
      if (!S.contains(v)) inside = false;
      gens.push_back(v);
    }
  }
  r.spans_S = inside && rank_of(gens) == S.dim();
  return r;
}

std::optional<std::vector<Scalar>> solve_in_span(const Calculus& C, const NCPoly& F, int D) {
  const FunctionalSpace& sp = *C.space();
  std::vector<NCPoly> polys = C.functionals();
  polys.push_back(sp.reduce(F));
  std::vector<SVec> vecs;
  if (C.exact()) {
    std::map<Word, int, DegLex> ids;
    for (const auto& p : polys) {
      SVec v;
      for (const auto& [w, c] : p.terms()) v[ids.try_emplace(w, static_cast<int>(ids.size())).first->second] = c;
      vecs.push_back(v);
    }
  } else {
    for (const auto& p : polys) {
      SVec v;
      int off = 0;
      for (int n = 0; n <= D; ++n) {
        SMat M = sp.matrix(p, n);
        for (int r = 0; r < M.dim; ++r) {
          for (const auto& [c, val] : M.rows[static_cast<std::size_t>(r)]) v[off + r * M.dim + c] = val;
        }
        off += M.dim * M.dim;
      }
      vecs.push_back(v);
    }
  }
  Echelon ech(true);
  for (std::size_t k = 0; k + 1 < vecs.size(); ++k) ech.insert(vecs[k]);
  auto sol = ech.solve(vecs.back());
  if (!sol) return std::nullopt;
  std::vector<Scalar> out(static_cast<std::size_t>(C.size()));
  for (const auto& [k, c] : *sol) out[static_cast<std::size_t>(k)] = c;
  return out;
}

std::optional<std::vector<Scalar>> lie_structure(const Calculus& C, const Sigma& s, int i, int j, std::string* mode) {
  const int n = C.size();
  NCPoly Q = C.functional(i) * C.functional(j);
  const auto& row = s.m[static_cast<std::size_t>(i * n + j)];
  for (int src = 0; src < n * n; ++src) {
    const Scalar& c = row[static_cast<std::size_t>(src)];
    if (!c.is_zero()) Q -= c * (C.functional(src / n) * C.functional(src % n));
  }
  if (mode) *mode = C.mode();
  return solve_in_span(C, Q);
}

}  // namespace qcalc
