#include "qcalc/functionals.hpp"

#include <map>

namespace qcalc {

SMat SMat::zero(int dim) { return SMat{dim, std::vector<SVec>(static_cast<std::size_t>(dim))}; }

SMat SMat::identity(int dim) {
  SMat m = zero(dim);
  for (int i = 0; i < dim; ++i) m.rows[static_cast<std::size_t>(i)][i] = Scalar(1);
  return m;
}

Scalar SMat::at(int i, int j) const {
  const SVec& r = rows.at(static_cast<std::size_t>(i));
  auto it = r.find(j);
  return it == r.end() ? Scalar() : it->second;
}

void SMat::add(int i, int j, const Scalar& c) {
  if (c.is_zero()) return;
  SVec& r = rows.at(static_cast<std::size_t>(i));
  auto [it, inserted] = r.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }
}

bool SMat::is_zero() const {
  for (const auto& r : rows) {
    if (!r.empty()) return false;
  }
  return true;
}

SMat operator*(const SMat& a, const SMat& b) {
  SMat c = SMat::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    SVec& out = c.rows[static_cast<std::size_t>(i)];
    for (const auto& [k, x] : a.rows[static_cast<std::size_t>(i)]) svec_axpy(out, x, b.rows[static_cast<std::size_t>(k)]);
  }
  return c;
}

SMat operator+(const SMat& a, const SMat& b) {
  SMat c = a;
  for (int i = 0; i < a.dim; ++i) svec_axpy(c.rows[static_cast<std::size_t>(i)], Scalar(1), b.rows[static_cast<std::size_t>(i)]);
  return c;
}

SMat operator*(const Scalar& s, const SMat& a) {
  SMat c = SMat::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) c.rows[static_cast<std::size_t>(i)] = svec_scaled(a.rows[static_cast<std::size_t>(i)], s);
  return c;
}

SMat kron(const SMat& a, const SMat& b) {
  SMat c = SMat::zero(a.dim * b.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (const auto& [j, x] : a.rows[static_cast<std::size_t>(i)]) {
      for (int k = 0; k < b.dim; ++k) {
        SVec& out = c.rows[static_cast<std::size_t>(i * b.dim + k)];
        for (const auto& [l, y] : b.rows[static_cast<std::size_t>(k)]) out.emplace(j * b.dim + l, x * y);
      }
    }
  }
  return c;
}

bool RMatrix::inverse_ok() const { return R * Rinv == SMat::identity(N * N) && Rinv * R == SMat::identity(N * N); }

bool RMatrix::braid_ok() const {
  SMat I = SMat::identity(N);
  SMat R12 = kron(R, I), R23 = kron(I, R);
  return R12 * R23 * R12 == R23 * R12 * R23;
}

bool RMatrix::hecke_ok(const PowerBasis& pb) const {
  SMat I = SMat::identity(N * N);
  SMat a = R + (-pb.q()) * I;
  SMat b = R + pb.q().inverse() * I;
  return (a * b).is_zero();
}

RMatrix rmatrix(int N, const PowerBasis& pb) {
  RMatrix r;
  r.N = N;
  r.R = SMat::zero(N * N);
  auto idx = [N](int a, int b) { return (a - 1) * N + b - 1; };
  Scalar lam = pb.lambda();
  for (int a = 1; a <= N; ++a) {
    for (int b = 1; b <= N; ++b) {
      if (a == b) {
        r.R.add(idx(a, a), idx(a, a), pb.q());
      } else {
        r.R.add(idx(a, b), idx(b, a), Scalar(1));
        if (a < b) r.R.add(idx(a, b), idx(a, b), lam);
      }
    }
  }
  // Hecke relation R^2 = lambda R + 1 gives the inverse
  r.Rinv = r.R + (-lam) * SMat::identity(N * N);
  return r;
}

SpacePtr FunctionalSpace::uq(int N, const PowerBasis& pb) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SpacePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, pb.L()}];
  if (slot) return slot;
  std::shared_ptr<FunctionalSpace> s(new FunctionalSpace);
  s->family_ = Family::Uq;
  s->N_ = N;
  s->pb_ = pb;
  s->uq_ = qcalc::uq_algebra(N, pb);
  s->coord_ = coord_algebra(N, pb);
  s->alpha_ = s->uq_->alphabet();
  const UqAlgebra& U = *s->uq_;
  std::size_t n = s->alpha_->size();
  s->m1_.assign(n, SMat::zero(N));
  s->m0_.assign(n, Scalar());
  s->delta_.assign(n, {});
  for (int i = 1; i < N; ++i) {
    SMat& k = s->m1_[static_cast<std::size_t>(U.k(i))];
    SMat& ki = s->m1_[static_cast<std::size_t>(U.kinv(i))];
    for (int m = 0; m < N; ++m) {
      Scalar d(1);
      if (m == i - 1) d = pb.q_half();
      if (m == i) d = pb.q_half().inverse();
      k.add(m, m, d);
      ki.add(m, m, d.inverse());
    }
    s->m1_[static_cast<std::size_t>(U.e(i))].add(i - 1, i, Scalar(1));
    s->m1_[static_cast<std::size_t>(U.f(i))].add(i, i - 1, Scalar(1));
    s->m0_[static_cast<std::size_t>(U.k(i))] = Scalar(1);
    s->m0_[static_cast<std::size_t>(U.kinv(i))] = Scalar(1);
    s->delta_[static_cast<std::size_t>(U.k(i))] = {{Scalar(1), U.k(i), U.k(i)}};
    s->delta_[static_cast<std::size_t>(U.kinv(i))] = {{Scalar(1), U.kinv(i), U.kinv(i)}};
    s->delta_[static_cast<std::size_t>(U.e(i))] = {{Scalar(1), U.k(i), U.e(i)}, {Scalar(1), U.e(i), U.kinv(i)}};
    s->delta_[static_cast<std::size_t>(U.f(i))] = {{Scalar(1), U.k(i), U.f(i)}, {Scalar(1), U.f(i), U.kinv(i)}};
  }
  s->R_ = rmatrix(N, pb);
  slot = s;
  return slot;
}

SpacePtr FunctionalSpace::lfun(int N, const PowerBasis& pb) {
  if (pb.L() % (2 * N) != 0) {
    throw ScalarError("L-functionals on SL_q(" + std::to_string(N) + ") need q = v^L with L divisible by " +
                      std::to_string(2 * N) + " (got L = " + std::to_string(pb.L()) + ")");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, SpacePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, pb.L()}];
  if (slot) return slot;
  std::shared_ptr<FunctionalSpace> s(new FunctionalSpace);
  s->family_ = Family::L;
  s->N_ = N;
  s->pb_ = pb;
  s->coord_ = coord_algebra(N, pb);
  s->R_ = rmatrix(N, pb);
  std::vector<std::string> names;
  std::vector<std::string> latex;
  // order: lp, lm, kappa(lp), kappa(lm); each block row-major
  const char* base[4] = {"lp", "lm", "klp", "klm"};
  const char* tex[4] = {"{}^{+}l", "{}^{-}l", "\\kappa({}^{+}l", "\\kappa({}^{-}l"};
  for (int b = 0; b < 4; ++b) {
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= N; ++j) {
        std::string idx = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        names.push_back(base[b] + idx);
        std::string t = std::string(tex[b]) + "^{" + std::to_string(i) + "}_{" + std::to_string(j) + "}";
        latex.push_back(b >= 2 ? t + ")" : t);
      }
    }
  }
  auto alpha = std::make_shared<Alphabet>("L(SL_q(" + std::to_string(N) + "))", names);
  for (std::size_t l = 0; l < names.size(); ++l) {
    alpha->set_latex(static_cast<int>(l), latex[l]);
    if (l >= static_cast<std::size_t>(2 * N * N)) {
      std::string inner = names[l].substr(1);
      alpha->set_display(static_cast<int>(l), "kappa(" + inner + ")");
    }
  }
  s->alpha_ = alpha;
  int NN = N * N;
  auto id = [N](int block, int i, int j) { return block * N * N + (i - 1) * N + (j - 1); };
  s->lp_.resize(static_cast<std::size_t>(NN));
  s->lm_.resize(static_cast<std::size_t>(NN));
  s->twist_.assign(names.size(), -1);
  s->m1_.assign(names.size(), SMat::zero(N));
  s->m0_.assign(names.size(), Scalar());
  s->delta_.assign(names.size(), {});
  Scalar p = pb.root(N);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      s->lp_[static_cast<std::size_t>((i - 1) * N + j - 1)] = id(0, i, j);
      s->lm_[static_cast<std::size_t>((i - 1) * N + j - 1)] = id(1, i, j);
      s->twist_[static_cast<std::size_t>(id(0, i, j))] = id(2, i, j);
      s->twist_[static_cast<std::size_t>(id(1, i, j))] = id(3, i, j);
      for (int b = 0; b < 4; ++b) s->m0_[static_cast<std::size_t>(id(b, i, j))] = Scalar(i == j ? 1 : 0);
      for (int n = 1; n <= N; ++n) {
        for (int m = 1; m <= N; ++m) {
          // l^{+i}_j(u^n_m) = p^-1 R^{in}_{mj},  l^{-i}_j(u^n_m) = p (R^-1)^{in}_{mj}
          s->m1_[static_cast<std::size_t>(id(0, i, j))].add(n - 1, m - 1, p.inverse() * s->R_.entry(i, n, m, j));
          s->m1_[static_cast<std::size_t>(id(1, i, j))].add(n - 1, m - 1, p * s->R_.inv_entry(i, n, m, j));
        }
      }
      for (int k = 1; k <= N; ++k) {
        for (int b = 0; b < 2; ++b) {
          s->delta_[static_cast<std::size_t>(id(b, i, j))].push_back({Scalar(1), id(b, i, k), id(b, k, j)});
          // kappa twist is antimultiplicative
          s->delta_[static_cast<std::size_t>(id(b + 2, i, j))].push_back({Scalar(1), id(b + 2, k, j), id(b + 2, i, k)});
        }
      }
    }
  }
  // M_1 of the twisted letters: l(kappa(u^n_m)) on words of length N-1
  const CoordAlgebra& A = *s->coord_;
  for (int b = 0; b < 2; ++b) {
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= N; ++j) {
        NCPoly F = s->letter(id(b, i, j));
        SMat& out = s->m1_[static_cast<std::size_t>(id(b + 2, i, j))];
        for (int n = 1; n <= N; ++n) {
          for (int m = 1; m <= N; ++m) out.add(n - 1, m - 1, s->eval(F, A.antipode(A.u(n, m))));
        }
      }
    }
  }
  s->letter_cache_.clear();
  s->word_cache_.clear();
  slot = s;
  return slot;
}

int FunctionalSpace::lp(int i, int j) const { return lp_.at(static_cast<std::size_t>((i - 1) * N_ + j - 1)); }
int FunctionalSpace::lm(int i, int j) const { return lm_.at(static_cast<std::size_t>((i - 1) * N_ + j - 1)); }

int FunctionalSpace::kappa_of(int letter) const {
  int t = twist_.empty() ? -1 : twist_.at(static_cast<std::size_t>(letter));
  if (t < 0) throw ParseError("kappa() applies to a single untwisted L-entry");
  return t;
}

NCPoly FunctionalSpace::parse(std::string_view text) const {
  if (family_ == Family::Uq) return uq_->parse(text);
  ExprPtr e = parse_expr(text);
  ExprEvaluator<NCPoly> ev;
  ev.pb = pb_;
  ev.from_scalar = [this](const Scalar& c) { return NCPoly::constant(alpha_, c); };
  ev.symbol = [this](const Expr& x) {
    auto l = alpha_->find(x.symbol_key());
    if (!l) throw ParseError("unknown functional '" + x.symbol_key() + "'");
    return letter(*l);
  };
  ev.call = [this](const std::string& name, const std::vector<NCPoly>& args) {
    if (name != "kappa" || args.size() != 1) throw ParseError("unknown function '" + name + "'");
    const NCPoly& a = args[0];
    if (a.size() != 1 || a.terms().begin()->first.size() != 1) throw ParseError("kappa() applies to a single L-entry");
    const auto& [w, c] = *a.terms().begin();
    return c * letter(kappa_of(w[0]));
  };
  return ev(*e);
}

NCPoly FunctionalSpace::reduce(const NCPoly& F) const { return family_ == Family::Uq ? uq_->nf(F) : F; }

const SMat& FunctionalSpace::letter_matrix(int l, int n) const {
  auto key = std::make_pair(l, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = letter_cache_.find(key);
    if (it != letter_cache_.end()) return it->second;
  }
  SMat m;
  if (n == 0) {
    m = SMat::zero(1);
    m.add(0, 0, m0_.at(static_cast<std::size_t>(l)));
  } else if (n == 1) {
    m = m1_.at(static_cast<std::size_t>(l));
  } else {
    int dim = 1;
    for (int t = 0; t < n; ++t) dim *= N_;
    m = SMat::zero(dim);
    for (const auto& r : delta_.at(static_cast<std::size_t>(l))) {
      m = m + r.c * kron(m1_.at(static_cast<std::size_t>(r.left)), letter_matrix(r.right, n - 1));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return letter_cache_.emplace(key, std::move(m)).first->second;
}

const SMat& FunctionalSpace::word_matrix(const Word& P, int n) const {
  auto key = std::make_pair(P, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = word_cache_.find(key);
    if (it != word_cache_.end()) return it->second;
  }
  SMat m;
  if (P.empty()) {
    int dim = 1;
    for (int t = 0; t < n; ++t) dim *= N_;
    // counit on words: 1 exactly on the diagonal-generator words u^i_i...
    m = SMat::zero(dim);
    if (n == 0) {
      m.add(0, 0, Scalar(1));
    } else {
      m = SMat::identity(dim);
    }
  } else if (P.size() == 1) {
    m = letter_matrix(P[0], n);
  } else {
    Word rest(P.begin() + 1, P.end());
    m = letter_matrix(P[0], n) * word_matrix(rest, n);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return word_cache_.emplace(key, std::move(m)).first->second;
}

SMat FunctionalSpace::matrix(const NCPoly& F, int n) const {
  int dim = 1;
  for (int t = 0; t < n; ++t) dim *= N_;
  SMat m = SMat::zero(dim);
  for (const auto& [P, c] : F.terms()) m = m + c * word_matrix(P, n);
  return m;
}

int FunctionalSpace::word_index(const Word& x, bool rows) const {
  int idx = 0;
  for (int l : x) {
    auto [i, j] = coord_->position(l);
    idx = idx * N_ + ((rows ? i : j) - 1);
  }
  return idx;
}

Scalar FunctionalSpace::eval_word(const NCPoly& F, const Word& x) const {
  int n = static_cast<int>(x.size());
  int I = word_index(x, true), J = word_index(x, false);
  Scalar s;
  for (const auto& [P, c] : F.terms()) s += c * word_matrix(P, n).at(I, J);
  return s;
}

Scalar FunctionalSpace::eval(const NCPoly& F, const NCPoly& x) const {
  Scalar s;
  for (const auto& [w, c] : x.terms()) s += c * eval_word(F, w);
  return s;
}

NCPoly FunctionalSpace::convolve(const NCPoly& F, const NCPoly& x) const {
  std::map<int, SMat> mats;
  return convolve_with(
      [&](int n) -> const SMat& {
        auto it = mats.find(n);
        if (it == mats.end()) it = mats.emplace(n, matrix(F, n)).first;
        return it->second;
      },
      x);
}

NCPoly FunctionalSpace::convolve_with(const MatrixFn& mat, const NCPoly& x) const {
  const CoordAlgebra& A = *coord_;
  NCPoly out(A.alphabet());
  for (const auto& [w, c] : x.terms()) {
    int n = static_cast<int>(w.size());
    const SMat& M = mat(n);
    int J = word_index(w, false);
    // x_(1) = u^{i_1}_{k_1}...,  x_(2) = u^{k_1}_{j_1}...
    for (int K = 0; K < M.dim; ++K) {
      Scalar v = M.at(K, J);
      if (v.is_zero()) continue;
      Word left;
      int rem = K;
      std::vector<int> ks(static_cast<std::size_t>(n));
      for (int t = n - 1; t >= 0; --t) {
        ks[static_cast<std::size_t>(t)] = rem % N_ + 1;
        rem /= N_;
      }
      for (int t = 0; t < n; ++t) {
        int i = A.position(w[static_cast<std::size_t>(t)]).first;
        left.push_back(A.gen(i, ks[static_cast<std::size_t>(t)]));
      }
      out.add_term(left, c * v);
    }
  }
  return A.nf(out);
}

Scalar FunctionalSpace::eval_with(const MatrixFn& mat, const NCPoly& x) const {
  Scalar s;
  for (const auto& [w, c] : x.terms()) s += c * mat(static_cast<int>(w.size())).at(word_index(w, true), word_index(w, false));
  return s;
}

std::pair<bool, std::string> FunctionalSpace::equal(const NCPoly& F, const NCPoly& G, int D) const {
  if (family_ == Family::Uq) return {uq_->nf(F - G).is_zero(), "exact"};
  NCPoly d = F - G;
  for (int n = 0; n <= D; ++n) {
    if (!matrix(d, n).is_zero()) return {false, "evidential(" + std::to_string(D) + ")"};
  }
  return {true, "evidential(" + std::to_string(D) + ")"};
}

}  // namespace qcalc
