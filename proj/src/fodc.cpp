#include "qcalc/fodc.hpp"

#include <algorithm>

namespace qcalc {

// ---------------------------------------------------------------- Form

Form Form::basis(AlphabetPtr coord, AlphabetPtr omega, const Word& w, const Scalar& c) {
  Form f(coord, std::move(omega));
  f.add(w, NCPoly::constant(coord, c));
  return f;
}

NCPoly Form::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? NCPoly(coord_) : it->second;
}

void Form::add(const Word& w, const NCPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  if (!coord_) {
    coord_ = o.coord_;
    omega_ = o.omega_;
  }
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (!coord_) {
    coord_ = o.coord_;
    omega_ = o.omega_;
  }
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, p] : terms_) p *= c;
  return *this;
}

namespace {

bool is_constant(const NCPoly& p) { return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty()); }

}  // namespace

bool Form::is_invariant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_constant(t.second); });
}

Scalar Form::scalar_coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second.constant_term();
}

SVec Form::to_vector(int n) const {
  SVec v;
  for (const auto& [w, c] : terms_) {
    if (!is_constant(c)) throw AlgebraError("to_vector needs an invariant form");
    int idx = 0;
    for (int l : w) idx = idx * n + l;
    v[idx] = c.constant_term();
  }
  return v;
}

Form Form::from_vector(AlphabetPtr coord, AlphabetPtr omega, const SVec& v, int n, int degree) {
  Form f(coord, std::move(omega));
  for (const auto& [idx, c] : v) {
    Word w(static_cast<std::size_t>(degree));
    int rem = idx;
    for (int t = degree - 1; t >= 0; --t) {
      w[static_cast<std::size_t>(t)] = rem % n;
      rem /= n;
    }
    f.add(w, NCPoly::constant(coord, c));
  }
  return f;
}

namespace {

std::string render_form(const Form& f, const PowerBasis& pb, const std::string& sep, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    std::string ws;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (t) ws += sep;
      ws += latex ? f.omega_alphabet()->latex(w[t]) : f.omega_alphabet()->display(w[t]);
    }
    std::string coef;
    bool neg = false;
    if (is_constant(c)) {
      Scalar s = c.constant_term();
      if (ws.empty()) {
        coef = pb.format(s);
      } else {
        coef = pb.format_coefficient(s);
        if (coef == "-") {
          neg = true;
          coef.clear();
        } else if (!coef.empty() && coef[0] == '-') {
          neg = true;
          coef = pb.format_coefficient(-s);
        }
      }
    } else {
      std::string body = latex ? c.to_latex(pb) : c.to_string(pb);
      if (c.size() == 1) {
        if (body[0] == '-') {
          neg = true;
          body = latex ? (-c).to_latex(pb) : (-c).to_string(pb);
        }
        coef = body;
      } else {
        coef = "(" + body + ")";
      }
    }
    std::string term = coef;
    if (!ws.empty()) term += coef.empty() ? ws : (latex ? " " : "*") + ws;
    if (first) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string Form::to_string(const PowerBasis& pb, const std::string& sep) const {
  return render_form(*this, pb, sep, false);
}

std::string Form::to_latex(const PowerBasis& pb, const std::string& product) const {
  return render_form(*this, pb, " " + product + " ", true);
}

// ---------------------------------------------------------------- Calculus

Calculus::Calculus(Definition def) : s_(std::move(def)) {
  const CoordAlgebra& A = coord();
  int n = size();
  if (static_cast<int>(s_.functionals.size()) != n) throw std::invalid_argument("labels and functionals differ in size");
  for (auto& X : s_.functionals) X = s_.space->reduce(X);

  std::vector<std::string> names;
  for (const auto& l : s_.labels) names.push_back("w[" + l + "]");
  auto om = std::make_shared<Alphabet>("Gamma(" + s_.name + ")", names);
  for (int i = 0; i < n; ++i) {
    om->add_alias("w" + s_.labels[static_cast<std::size_t>(i)], i);
    om->set_display(i, "w" + s_.labels[static_cast<std::size_t>(i)]);
    om->set_latex(i, "\\omega_{" + s_.labels[static_cast<std::size_t>(i)] + "}");
  }
  omega_ = om;
  std::vector<std::string> mixed = A.alphabet()->letters();
  mixed.insert(mixed.end(), names.begin(), names.end());
  mixed_ = std::make_shared<Alphabet>("mixed", mixed);

  if (!s_.duals.empty()) {
    duals_ = s_.duals;
  } else {
    // x_i as combinations of the generators
    Echelon ech(true);
    int G = static_cast<int>(A.alphabet()->size());
    for (int g = 0; g < G; ++g) {
      SVec v;
      for (int j = 0; j < n; ++j) {
        Scalar x = s_.space->eval(s_.functionals[static_cast<std::size_t>(j)], A.u(A.position(g).first, A.position(g).second));
        if (!x.is_zero()) v[j] = x;
      }
      ech.insert(v);
    }
    for (int i = 0; i < n; ++i) {
      auto sol = ech.solve(SVec{{i, Scalar(1)}});
      if (!sol) throw AlgebraError("no dual element for X_" + s_.labels[static_cast<std::size_t>(i)] + " among the generators");
      NCPoly x(A.alphabet());
      for (const auto& [g, c] : *sol) x.add_term({g}, c);
      duals_.push_back(x);
    }
  }
  for (auto& x : duals_) x = A.nf(x);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Scalar v = s_.space->eval(s_.functionals[static_cast<std::size_t>(i)], duals_[static_cast<std::size_t>(j)]);
      if (v != Scalar(i == j ? 1 : 0)) {
        throw AlgebraError("X_" + s_.labels[static_cast<std::size_t>(i)] + " is not dual to x_" +
                           s_.labels[static_cast<std::size_t>(j)]);
      }
    }
  }
}

std::string Calculus::mode() const { return exact() ? "exact" : "evidential(3)"; }

int Calculus::index(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (s_.labels[static_cast<std::size_t>(i)] == label) return i;
  }
  throw ParseError("calculus " + s_.name + " has no index '" + label + "'");
}

const SMat& Calculus::x_matrix(int i, int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = xcache_.find({i, n});
    if (it != xcache_.end()) return it->second;
  }
  SMat m = s_.space->matrix(functional(i), n);
  std::lock_guard<std::mutex> lock(mu_);
  return xcache_.try_emplace({i, n}, std::move(m)).first->second;
}

const SMat& Calculus::f_matrix(int k, int i, int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fcache_.find({k, i, n});
    if (it != fcache_.end()) return it->second;
  }
  const CoordAlgebra& A = coord();
  const int N = A.N();
  int dim = 1;
  for (int t = 0; t < n; ++t) dim *= N;
  const SMat& big = x_matrix(i, n + 1);
  const SMat& small = x_matrix(i, n);
  SMat F = SMat::zero(dim);
  Scalar eps;
  for (const auto& [w, c] : dual(k).terms()) {
    if (w.empty()) {
      eps += c;
      F = F + c * small;
      continue;
    }
    if (w.size() != 1) throw AlgebraError("dual elements must be linear in the generators");
    auto [a, b] = A.position(w[0]);
    eps += a == b ? c : Scalar();
    int r0 = (a - 1) * dim, c0 = (b - 1) * dim;
    for (int I = 0; I < dim; ++I) {
      for (const auto& [col, val] : big.rows[static_cast<std::size_t>(r0 + I)]) {
        if (col >= c0 && col < c0 + dim) F.add(I, col - c0, c * val);
      }
    }
  }
  F = F + (-eps) * small;
  std::lock_guard<std::mutex> lock(mu_);
  return fcache_.try_emplace({k, i, n}, std::move(F)).first->second;
}

Scalar Calculus::X(int i, const NCPoly& x) const {
  return s_.space->eval_with([&](int n) -> const SMat& { return x_matrix(i, n); }, x);
}

NCPoly Calculus::X_convolve(int i, const NCPoly& x) const {
  return s_.space->convolve_with([&](int n) -> const SMat& { return x_matrix(i, n); }, x);
}

Scalar Calculus::f(int k, int i, const NCPoly& x) const {
  return s_.space->eval_with([&](int n) -> const SMat& { return f_matrix(k, i, n); }, x);
}

NCPoly Calculus::f_convolve(int k, int i, const NCPoly& x) const {
  return s_.space->convolve_with([&](int n) -> const SMat& { return f_matrix(k, i, n); }, x);
}

Scalar Calculus::XX(int i, int j, const NCPoly& x) const {
  Scalar s;
  for (const auto& [w, c] : x.terms()) {
    int n = static_cast<int>(w.size());
    const SMat& Mi = x_matrix(i, n);
    const SMat& Mj = x_matrix(j, n);
    int I = s_.space->word_index(w, true), J = s_.space->word_index(w, false);
    Scalar acc;
    for (const auto& [K, v] : Mi.rows[static_cast<std::size_t>(I)]) acc += v * Mj.at(K, J);
    s += c * acc;
  }
  return s;
}

std::function<std::optional<Scalar>(const Expr&)> Calculus::scalar_hook(const ScalarMap& extra) const {
  bool family = s_.kind == CalcKind::SL3;
  return [this, extra, family](const Expr& e) -> std::optional<Scalar> {
    std::string key = e.symbol_key();
    auto it = extra.find(key);
    if (it != extra.end()) return it->second;
    if (family && key == "alpha") return s_.alpha;
    if (family && key == "beta") return s_.beta;
    return std::nullopt;
  };
}

NCPoly Calculus::parse_coord(std::string_view text, const ScalarMap& extra) const {
  const CoordAlgebra& A = coord();
  ExprEvaluator<NCPoly> ev;
  ev.pb = pb();
  ev.scalar_symbol = scalar_hook(extra);
  ev.from_scalar = [&A](const Scalar& c) { return A.scalar(c); };
  ev.normalize = [&A](const NCPoly& p) { return A.nf(p); };
  ev.symbol = [&A](const Expr& x) {
    auto l = A.alphabet()->find(x.symbol_key());
    if (!l) throw ParseError("unknown coordinate generator '" + x.symbol_key() + "'");
    return NCPoly::letter(A.alphabet(), *l);
  };
  return A.nf(ev(*parse_expr(text)));
}

NCPoly Calculus::parse_functional(std::string_view text, const ScalarMap& extra) const {
  const FunctionalSpace& S = *s_.space;
  const AlphabetPtr& al = S.alphabet();
  UqPtr U = S.uq_algebra();
  ExprEvaluator<NCPoly> ev;
  ev.pb = pb();
  ev.scalar_symbol = scalar_hook(extra);
  ev.from_scalar = [&al](const Scalar& c) { return NCPoly::constant(al, c); };
  ev.normalize = [&S](const NCPoly& p) { return S.reduce(p); };
  ev.symbol = [this, &al](const Expr& x) -> NCPoly {
    if (x.name == "X" && x.indices.size() == 1) return functional(index(std::to_string(x.indices[0])));
    if (x.name.size() > 1 && x.name[0] == 'X' && x.indices.empty() &&
        std::all_of(x.name.begin() + 1, x.name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      return functional(index(x.name.substr(1)));
    }
    auto l = al->find(x.symbol_key());
    if (!l) throw ParseError("unknown functional '" + x.symbol_key() + "'");
    return NCPoly::letter(al, *l);
  };
  ev.inverse = [U, &al](const Expr& e) -> std::optional<NCPoly> {
    if (!U || e.kind != Expr::Kind::Symbol) return std::nullopt;
    auto l = al->find(e.symbol_key());
    if (!l) return std::nullopt;
    if (U->kind(*l) == UqAlgebra::Kind::K) return NCPoly::letter(al, U->kinv(U->root(*l)));
    if (U->kind(*l) == UqAlgebra::Kind::Kinv) return NCPoly::letter(al, U->k(U->root(*l)));
    return std::nullopt;
  };
  if (S.family() == FunctionalSpace::Family::L) {
    ev.call = [&S](const std::string& name, const std::vector<NCPoly>& args) {
      if (name != "kappa" || args.size() != 1 || args[0].size() != 1 || args[0].terms().begin()->first.size() != 1) {
        throw ParseError("unknown function '" + name + "'");
      }
      const auto& [w, c] = *args[0].terms().begin();
      return c * S.letter(S.kappa_of(w[0]));
    };
  }
  return S.reduce(ev(*parse_expr(text)));
}

Form Calculus::parse_form(std::string_view text, const ScalarMap& extra) const {
  const CoordAlgebra& A = coord();
  const int offset = static_cast<int>(A.alphabet()->size());
  ExprEvaluator<NCPoly> ev;
  ev.pb = pb();
  ev.scalar_symbol = scalar_hook(extra);
  ev.from_scalar = [this](const Scalar& c) { return NCPoly::constant(mixed_, c); };
  ev.symbol = [&](const Expr& x) {
    std::string key = x.symbol_key();
    if (auto l = A.alphabet()->find(key)) return NCPoly::letter(mixed_, *l);
    if (auto l = omega_->find(key)) return NCPoly::letter(mixed_, offset + *l);
    throw ParseError("unknown symbol '" + key + "' in a form");
  };
  NCPoly m = ev(*parse_expr(text));
  Form out = zero_form();
  for (const auto& [w, c] : m.terms()) {
    auto split = std::find_if(w.begin(), w.end(), [offset](int l) { return l >= offset; });
    Word coef(w.begin(), split), forms;
    for (auto it = split; it != w.end(); ++it) {
      if (*it < offset) throw ParseError("coefficients must stand to the left of the forms");
      forms.push_back(*it - offset);
    }
    out.add(forms, A.nf(NCPoly::monomial(A.alphabet(), coef, c)));
  }
  return out;
}

// ---------------------------------------------------------------- catalog

CalculusPtr sl2_calculus(int r, const PowerBasis& pb) {
  if (r < 1 || r > 4) throw std::invalid_argument("SL_q(2) calculi are numbered 1..4");
  SpacePtr S = FunctionalSpace::uq(2, pb);
  const CoordAlgebra& A = S->coord();
  Calculus::Definition sp;
  sp.name = "sl2-r" + std::to_string(r);
  sp.kind = CalcKind::SL2;
  sp.r = r;
  sp.space = S;
  sp.labels = {"0", "1", "2"};
  std::string x0 = r <= 2 ? "q^(-1/2)*e*k^-1" : "q^(-5/2)*e*k^-5";
  std::string x2 = (r == 1 || r == 3) ? "q^(1/2)*f*k^-1" : "q^(5/2)*f*k^-5";
  sp.functionals = {S->parse(x0), S->parse("q*lambda^-1*(1 - k^-4)"), S->parse(x2)};
  sp.duals = {A.parse("b"), A.parse("a"), A.parse("c")};
  return std::make_shared<const Calculus>(std::move(sp));
}

CalculusPtr sudbery_calculus(const PowerBasis& pb) {
  SpacePtr S = FunctionalSpace::uq(2, pb);
  Calculus::Definition sp;
  sp.name = "sl2-sudbery";
  sp.kind = CalcKind::Sudbery;
  sp.r = 1;
  sp.space = S;
  sp.labels = {"0", "1", "2"};
  sp.functionals = {S->parse("q^(1/2)*e*k"), S->parse("q*lambda^-1*(1 - k^4)"), S->parse("q^(-1/2)*f*k")};
  return std::make_shared<const Calculus>(std::move(sp));
}

CalculusPtr sl3_calculus(const Scalar& alpha, const Scalar& beta, const PowerBasis& pb) {
  SpacePtr S = FunctionalSpace::uq(3, pb);
  const CoordAlgebra& A = S->coord();
  Calculus::Definition sp;
  sp.name = "sl3(alpha=" + pb.format(alpha) + ",beta=" + pb.format(beta) + ")";
  sp.kind = CalcKind::SL3;
  sp.alpha = alpha;
  sp.beta = beta;
  sp.space = S;
  sp.labels = {"1", "2", "21", "31", "32", "12", "13", "23"};
  NCPoly X12 = S->parse("q^(-1/2)*e[1]*k[1]^-1"), X23 = S->parse("q^(-1/2)*e[2]*k[2]^-1");
  NCPoly X21 = S->parse("q^(1/2)*f[1]*k[1]^-1"), X32 = S->parse("q^(1/2)*f[2]*k[2]^-1");
  sp.functionals = {S->parse("q*lambda^-1*(1 - k[1]^-4)"),
                    S->parse("q*lambda^-1*(1 - k[2]^-4)"),
                    X21,
                    X32 * X21 - beta * (X21 * X32),
                    X32,
                    X12,
                    X12 * X23 - alpha * (X23 * X12),
                    X23};
  sp.duals = {A.parse("u11"), A.parse("u22 + q^2*u11"), A.parse("u21"), A.parse("u31"),
              A.parse("u32"), A.parse("u12"), A.parse("u13"), A.parse("u23")};
  return std::make_shared<const Calculus>(std::move(sp));
}

CalculusPtr sl3_gamma(int which, const PowerBasis& pb) {
  Scalar q = pb.q();
  if (which == 1) return sl3_calculus(q.inverse(), q, pb);
  if (which == 2) return sl3_calculus(q, q.inverse(), pb);
  throw std::invalid_argument("SL_q(3) distinguished calculi are numbered 1, 2");
}

CalculusPtr sln_calculus(int N, int r, const PowerBasis& pb) {
  if (r != 1 && r != 2) throw std::invalid_argument("SL_q(N) calculi from L-functionals are numbered 1, 2");
  SpacePtr S = FunctionalSpace::lfun(N, pb);
  const CoordAlgebra& A = S->coord();
  Calculus::Definition sp;
  sp.name = "sln-N" + std::to_string(N) + "-r" + std::to_string(r);
  sp.kind = CalcKind::SLN;
  sp.r = r;
  sp.space = S;
  Scalar q = pb.q(), lam_inv = pb.lambda().inverse();
  auto L = [&](int l) { return S->letter(l); };
  for (int n = 1; n < N; ++n) {
    sp.labels.push_back(std::to_string(n));
    NCPoly t = L(S->lm(n, n)) * L(S->lp(n + 1, n + 1));
    sp.functionals.push_back(q * lam_inv * (S->one() - t * t));
    NCPoly x(A.alphabet());
    for (int k = 1; k <= n; ++k) x.add_term({A.gen(k, k)}, pb.q_pow(2 * (n - k)));
    sp.duals.push_back(x);
  }
  auto push = [&](int a, int b, const NCPoly& X) {
    sp.labels.push_back(std::to_string(a) + std::to_string(b));
    sp.functionals.push_back(X);
    sp.duals.push_back(A.u(a, b));
  };
  // lower entries, then upper entries
  for (int a = 1; a <= N; ++a) {
    for (int b = 1; b < a; ++b) {
      // X_ab with a > b; write (i, j) = (b, a)
      int i = b, j = a;
      NCPoly X = r == 1 ? -lam_inv * (L(S->kappa_of(S->lp(i, j))) * L(S->lp(j, j)))
                        : lam_inv * (L(S->lm(i, i)) * L(S->lp(i, j)));
      push(a, b, X);
    }
  }
  for (int i = 1; i <= N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      NCPoly X = r == 1 ? lam_inv * (L(S->kappa_of(S->lm(j, i))) * L(S->lm(i, i)))
                        : -lam_inv * (L(S->lp(j, j)) * L(S->lm(j, i)));
      push(i, j, X);
    }
  }
  return std::make_shared<const Calculus>(std::move(sp));
}

CalculusPtr catalog(const std::string& name, const CatalogParams& p, const PowerBasis& pb) {
  if (name == "sl2") return sl2_calculus(p.r, pb);
  if (name == "sl2-sudbery" || name == "sudbery") return sudbery_calculus(pb);
  if (name == "sl3") {
    if (p.gamma) return sl3_gamma(p.gamma, pb);
    if (!p.alpha || !p.beta) throw std::invalid_argument("sl3 needs --gamma or both alpha and beta");
    return sl3_calculus(*p.alpha, *p.beta, pb);
  }
  if (name == "sln") return sln_calculus(p.N, p.r, pb);
  throw std::invalid_argument("unknown calculus '" + name + "'");
}

// ---------------------------------------------------------------- checks

CovarianceReport covariance_check_uq(const UqAlgebra& U, const std::vector<NCPoly>& X,
                                     const std::vector<std::string>& labels) {
  CovarianceReport rep;
  rep.mode = "exact";
  std::vector<NCPoly> basis;
  for (const auto& x : X) basis.push_back(U.nf(x));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CovarianceEntry e;
    e.label = i < labels.size() ? labels[i] : std::to_string(i);
    NCTensor t = U.coproduct(basis[i]) - NCTensor::pure(U.one(), basis[i]);
    LegDecomposition dec = decompose_left_legs(U.normalize_tensor(t), basis);
    e.ok = dec.ok;
    if (dec.ok) {
      for (const auto& [w, coords] : dec.coefficients) {
        for (std::size_t k = 0; k < coords.size(); ++k) {
          if (coords[k].is_zero()) continue;
          auto it = e.cofactors.try_emplace(static_cast<int>(k), U.alphabet()).first;
          it->second.add_term(w, coords[k]);
        }
      }
    } else {
      e.witness = "right leg " + (dec.failure ? format_word(*U.alphabet(), *dec.failure) : std::string("?")) +
                  " carries " + dec.residual.to_string(U.pb()) + " outside span{X}";
      rep.ok = false;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

CovarianceReport covariance_check(const Calculus& C, int D) {
  if (C.exact()) {
    std::vector<std::string> labels;
    for (int i = 0; i < C.size(); ++i) labels.push_back(C.label(i));
    return covariance_check_uq(*C.space()->uq_algebra(), C.functionals(), labels);
  }
  // M_{p+n}(X_i) = I (x) M_n(X_i) + sum_k M_p(X_k) (x) M_n(f^k_i)
  CovarianceReport rep;
  rep.mode = "evidential(" + std::to_string(D) + ")";
  const int N = C.N();
  for (int i = 0; i < C.size(); ++i) {
    CovarianceEntry e;
    e.label = C.label(i);
    for (int p = 1; p <= D && e.ok; ++p) {
      for (int n = 0; p + n <= D && e.ok; ++n) {
        int dp = 1;
        for (int t = 0; t < p; ++t) dp *= N;
        SMat rhs = kron(SMat::identity(dp), C.x_matrix(i, n));
        for (int k = 0; k < C.size(); ++k) rhs = rhs + kron(C.x_matrix(k, p), C.f_matrix(k, i, n));
        if (!(rhs == C.x_matrix(i, p + n))) {
          e.ok = false;
          e.witness = "mismatch on words of length " + std::to_string(p) + " + " + std::to_string(n);
        }
      }
    }
    rep.ok = rep.ok && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

Form omega(const Calculus& C, const NCPoly& x) {
  Form f = C.zero_form();
  for (int i = 0; i < C.size(); ++i) f.add({i}, C.X(i, x));
  return f;
}

bool ideal_member(const Calculus& C, const NCPoly& x) {
  if (!C.coord().counit(x).is_zero()) return false;
  for (int i = 0; i < C.size(); ++i) {
    if (!C.X(i, x).is_zero()) return false;
  }
  return true;
}

Form differential(const Calculus& C, const NCPoly& x) {
  Form f = C.zero_form();
  for (int i = 0; i < C.size(); ++i) f.add({i}, C.X_convolve(i, x));
  return f;
}

namespace {

// w * y as sum of c_w' * w'
Form push_through(const Calculus& C, const Word& w, const NCPoly& y) {
  Form out = C.zero_form();
  if (w.empty()) {
    out.add({}, y);
    return out;
  }
  Word prefix(w.begin(), w.end() - 1);
  for (int l = 0; l < C.size(); ++l) {
    NCPoly z = C.f_convolve(w.back(), l, y);
    if (z.is_zero()) continue;
    Form P = push_through(C, prefix, z);
    for (const auto& [pw, pc] : P.terms()) {
      Word nw = pw;
      nw.push_back(l);
      out.add(nw, pc);
    }
  }
  return out;
}

}  // namespace

Form right_mul(const Calculus& C, const Form& t, const NCPoly& y) {
  const CoordAlgebra& A = C.coord();
  Form out = C.zero_form();
  NCPoly yn = A.nf(y);
  for (const auto& [w, c] : t.terms()) {
    Form P = push_through(C, w, yn);
    for (const auto& [pw, pc] : P.terms()) out.add(pw, A.nf(c * pc));
  }
  return out;
}

Form left_mul(const Calculus& C, const NCPoly& y, const Form& t) {
  const CoordAlgebra& A = C.coord();
  Form out = C.zero_form();
  for (const auto& [w, c] : t.terms()) out.add(w, A.nf(y * c));
  return out;
}

std::vector<TableRow> commutation_table(const Calculus& C) {
  std::vector<TableRow> rows;
  const CoordAlgebra& A = C.coord();
  for (int k = 0; k < C.size(); ++k) {
    for (int g = 0; g < static_cast<int>(A.alphabet()->size()); ++g) {
      rows.push_back({k, g, right_mul(C, C.omega_word({k}), NCPoly::letter(A.alphabet(), g))});
    }
  }
  return rows;
}

Form symmetric(const Calculus& C, const NCPoly& x, bool* member) {
  if (member) *member = ideal_member(C, x);
  Form f = C.zero_form();
  for (int i = 0; i < C.size(); ++i) {
    for (int j = 0; j < C.size(); ++j) f.add({i, j}, C.XX(i, j, x));
  }
  return f;
}

Form p_inv(const Calculus& C, const Form& t) {
  Form f = C.zero_form();
  for (const auto& [w, c] : t.terms()) f.add(w, C.coord().counit(c));
  return f;
}

IdentityCheck check_identity(const Calculus& C, const NCPoly& expr, int D) {
  NCPoly zero(expr.alphabet());
  auto [ok, mode] = C.space()->equal(expr, zero, D);
  return {ok, mode, C.space()->reduce(expr)};
}

std::string StarResult::to_string() const {
  switch (kind) {
    case Yes:
      return "yes";
    case No:
      return "no";
    case Cross:
      return "cross(" + std::to_string(target) + ")";
  }
  return "?";
}

StarResult star_compatible(const std::vector<CalculusPtr>& calculi, const std::vector<std::vector<NCPoly>>& generators,
                           int r, RealForm rf) {
  if (calculi.empty() || r < 1 || r > static_cast<int>(calculi.size()) || r > static_cast<int>(generators.size())) {
    throw std::invalid_argument("star_compatible: calculus index out of range");
  }
  const CoordAlgebra& A = calculi.front()->coord();
  std::vector<bool> inside(calculi.size(), true);
  for (const auto& g : generators[static_cast<std::size_t>(r - 1)]) {
    NCPoly y = A.star(A.antipode(g), rf);
    for (std::size_t s = 0; s < calculi.size(); ++s) {
      if (inside[s] && !ideal_member(*calculi[s], y)) inside[s] = false;
    }
  }
  StarResult res;
  if (inside[static_cast<std::size_t>(r - 1)]) {
    res.kind = StarResult::Yes;
    res.target = r;
    return res;
  }
  for (std::size_t s = 0; s < calculi.size(); ++s) {
    if (inside[s]) {
      res.kind = StarResult::Cross;
      res.target = static_cast<int>(s) + 1;
      return res;
    }
  }
  return res;
}

CodimReport codim_check(const Calculus& C, const std::vector<NCPoly>& generators) {
  CodimReport rep;
  const CoordAlgebra& A = C.coord();
  std::map<Word, int, DegLex> col;
  std::vector<Word> words;
  for (int n = 0; n <= 2; ++n) {
    std::vector<Word> ws;
    if (A.normalizes()) {
      ws = normal_words(A.rules(), n);
    } else {
      ws = normal_words(RewriteSystem(A.alphabet()), n);
    }
    for (const auto& w : ws) {
      col.emplace(w, static_cast<int>(words.size()));
      words.push_back(w);
    }
  }
  auto vec = [&](const NCPoly& p, SVec& out) {
    for (const auto& [w, c] : p.terms()) {
      auto it = col.find(w);
      if (it == col.end()) return false;
      out[it->second] = c;
    }
    return true;
  };
  Echelon ech;
  auto insert = [&](const NCPoly& p) {
    SVec v;
    if (vec(A.nf(p), v)) ech.insert(v);
  };
  insert(A.one());
  for (int i = 0; i < C.size(); ++i) insert(C.dual(i));
  for (const auto& g : generators) {
    if (!ideal_member(C, g)) rep.not_annihilated.push_back(g);
    NCPoly gn = A.nf(g);
    insert(gn);
    if (!gn.is_zero() && gn.degree() <= 1) {
      for (int l = 0; l < static_cast<int>(A.alphabet()->size()); ++l) insert(gn * NCPoly::letter(A.alphabet(), l));
    }
  }
  for (std::size_t t = 0; t < words.size(); ++t) {
    if (!ech.contains(SVec{{static_cast<int>(t), Scalar(1)}})) rep.unreached.push_back(words[t]);
  }
  rep.ok = rep.not_annihilated.empty() && rep.unreached.empty();
  if (rep.ok) rep.codim = C.size();
  return rep;
}

std::optional<std::pair<Scalar, Scalar>> gamma_pair(const Calculus& C) {
  if (C.N() != 2) return std::nullopt;
  const CoordAlgebra& A = C.coord();
  NCPoly ab = A.nf(A.u(1, 1) * A.u(1, 2)), ac = A.nf(A.u(1, 1) * A.u(2, 1));
  int i0 = 0, i1 = 1, i2 = 2;
  if (!C.X(i1, ab).is_zero() || !C.X(i2, ab).is_zero()) return std::nullopt;
  if (!C.X(i0, ac).is_zero() || !C.X(i1, ac).is_zero()) return std::nullopt;
  return std::make_pair(C.X(i0, ab) / C.X(i0, A.u(1, 2)), C.X(i2, ac) / C.X(i2, A.u(2, 1)));
}

}  // namespace qcalc
