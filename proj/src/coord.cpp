#include "qcalc/coord.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qcalc {

std::string real_form_name(RealForm rf) {
  switch (rf) {
    case RealForm::SUq2:
      return "SU_q(2)";
    case RealForm::SUq11:
      return "SU_q(1,1)";
    case RealForm::SLq2R:
      return "SL_q(2,R)";
  }
  return "?";
}

RealForm parse_real_form(const std::string& name) {
  if (name == "SU_q(2)" || name == "suq2") return RealForm::SUq2;
  if (name == "SU_q(1,1)" || name == "suq11") return RealForm::SUq11;
  if (name == "SL_q(2,R)" || name == "slq2r") return RealForm::SLq2R;
  throw std::invalid_argument("unknown real form '" + name + "'");
}

namespace {

int inversions(const std::vector<int>& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  }
  return n;
}

}  // namespace

CoordAlgebra::CoordAlgebra(int N, const PowerBasis& pb, bool normalize) : N_(N), pb_(pb) {
  if (N < 2) throw std::invalid_argument("SL_q(N) needs N >= 2");
  std::vector<std::string> names;
  index_.assign(static_cast<std::size_t>(N * N), -1);
  auto push = [&](int i, int j) {
    index_[static_cast<std::size_t>((i - 1) * N + (j - 1))] = static_cast<int>(names.size());
    pos_.emplace_back(i, j);
    names.push_back("u[" + std::to_string(i) + "," + std::to_string(j) + "]");
  };
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      if (i != j) push(i, j);
    }
  }
  for (int i = 1; i <= N; ++i) push(i, i);
  alpha_mut_ = std::make_shared<Alphabet>("SL_q(" + std::to_string(N) + ")", names);
  for (std::size_t l = 0; l < pos_.size(); ++l) {
    auto [i, j] = pos_[l];
    std::string tag = std::to_string(i) + std::to_string(j);
    alpha_mut_->add_alias("u" + tag, static_cast<int>(l));
    alpha_mut_->set_latex(static_cast<int>(l), "u^{" + std::to_string(i) + "}_{" + std::to_string(j) + "}");
    if (N >= 3) alpha_mut_->set_display(static_cast<int>(l), "u" + tag);
  }
  if (N == 2) {
    const char* names2[2][2] = {{"a", "b"}, {"c", "d"}};
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        int l = gen(i, j);
        alpha_mut_->add_alias(names2[i - 1][j - 1], l);
        alpha_mut_->set_display(l, names2[i - 1][j - 1]);
        alpha_mut_->set_latex(l, names2[i - 1][j - 1]);
      }
    }
  }
  alpha_ = alpha_mut_;

  Scalar q = pb_.q(), lam = pb_.lambda();
  for (int i = 1; i <= N; ++i) {
    for (int k = 1; k <= N; ++k) {
      for (int l = k + 1; l <= N; ++l) relations_.push_back(u(i, k) * u(i, l) - q * (u(i, l) * u(i, k)));
    }
  }
  for (int k = 1; k <= N; ++k) {
    for (int i = 1; i <= N; ++i) {
      for (int j = i + 1; j <= N; ++j) relations_.push_back(u(i, k) * u(j, k) - q * (u(j, k) * u(i, k)));
    }
  }
  for (int i = 1; i <= N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      for (int k = 1; k <= N; ++k) {
        for (int l = k + 1; l <= N; ++l) {
          relations_.push_back(u(i, l) * u(j, k) - u(j, k) * u(i, l));
          relations_.push_back(u(i, k) * u(j, l) - u(j, l) * u(i, k) - lam * (u(i, l) * u(j, k)));
        }
      }
    }
  }
  relations_.push_back(det() - one());

  rs_ = RewriteSystem(alpha_);
  if (normalize && N <= 3) {
    rs_ = complete(relations_, alpha_, 4);
    normalized_ = true;
  }

  std::vector<int> all(static_cast<std::size_t>(N));
  std::iota(all.begin(), all.end(), 1);
  kappa_gen_.resize(pos_.size());
  for (std::size_t l = 0; l < pos_.size(); ++l) {
    auto [i, j] = pos_[l];
    std::vector<int> rows, cols;
    for (int r : all) {
      if (r != j) rows.push_back(r);
      if (r != i) cols.push_back(r);
    }
    Scalar sign = (-q).pow(i - j);
    kappa_gen_[l] = nf(sign * minor(rows, cols));
  }
}

NCPoly CoordAlgebra::parse(std::string_view text) const { return nf(parse_ncpoly(text, alpha_, pb_)); }

NCPoly CoordAlgebra::nf(const NCPoly& p) const {
  if (!normalized_) return p;
  return rs_.normal_form(p);
}

Scalar CoordAlgebra::counit(const NCPoly& p) const {
  Scalar s;
  for (const auto& [w, c] : p.terms()) {
    bool diag = std::all_of(w.begin(), w.end(), [this](int l) { return pos_[l].first == pos_[l].second; });
    if (diag) s += c;
  }
  return s;
}

NCTensor CoordAlgebra::coproduct(const NCPoly& p) const {
  NCTensor out(alpha_, alpha_);
  for (const auto& [w, c] : p.terms()) {
    NCTensor t(alpha_, alpha_);
    t.add_term({}, {}, c);
    for (int l : w) {
      auto [i, j] = pos_[l];
      NCTensor g(alpha_, alpha_);
      for (int k = 1; k <= N_; ++k) g.add_term({gen(i, k)}, {gen(k, j)}, Scalar(1));
      t = t * g;
    }
    out += t;
  }
  return normalize_tensor(out);
}

NCTensor CoordAlgebra::normalize_tensor(const NCTensor& t) const {
  if (!normalized_) return t;
  return t.normalized(&rs_, &rs_);
}

NCPoly CoordAlgebra::multiply_legs(const NCTensor& t) const {
  NCPoly r(alpha_);
  for (const auto& [k, c] : t.terms()) {
    Word w = k.first;
    w.insert(w.end(), k.second.begin(), k.second.end());
    r.add_term(w, c);
  }
  return nf(r);
}

NCPoly CoordAlgebra::antipode(const NCPoly& p) const {
  NCPoly r(alpha_);
  for (const auto& [w, c] : p.terms()) {
    NCPoly t = scalar(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = nf(t * kappa_gen_[static_cast<std::size_t>(*it)]);
    r += t;
  }
  return nf(r);
}

NCPoly CoordAlgebra::minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs a square block");
  if (rows.empty()) return one();
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly r(alpha_);
  Scalar mq = -pb_.q();
  do {
    Word w;
    for (std::size_t t = 0; t < rows.size(); ++t) w.push_back(gen(rows[t], cols[static_cast<std::size_t>(perm[t])]));
    r.add_term(w, mq.pow(inversions(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

NCPoly CoordAlgebra::det() const {
  std::vector<int> all(static_cast<std::size_t>(N_));
  std::iota(all.begin(), all.end(), 1);
  return minor(all, all);
}

NCPoly CoordAlgebra::quantum_trace() const {
  NCPoly r(alpha_);
  for (int i = 1; i <= N_; ++i) r.add_term({gen(i, i)}, pb_.q_pow(-2 * i));
  return r;
}

NCPoly CoordAlgebra::star(const NCPoly& p, RealForm rf) const {
  if (N_ != 2) throw std::invalid_argument("real forms are defined for SL_q(2) only");
  Scalar q = pb_.q();
  std::vector<NCPoly> img(4);
  int a = gen(1, 1), b = gen(1, 2), c = gen(2, 1), d = gen(2, 2);
  switch (rf) {
    case RealForm::SUq2:
      img[a] = u(2, 2);
      img[b] = -q * u(2, 1);
      img[c] = -q.inverse() * u(1, 2);
      img[d] = u(1, 1);
      break;
    case RealForm::SUq11:
      img[a] = u(2, 2);
      img[b] = q * u(2, 1);
      img[c] = q.inverse() * u(1, 2);
      img[d] = u(1, 1);
      break;
    case RealForm::SLq2R:
      for (int l : {a, b, c, d}) img[l] = NCPoly::letter(alpha_, l);
      break;
  }
  bool conj = rf == RealForm::SLq2R;
  NCPoly r(alpha_);
  for (const auto& [w, coef] : p.terms()) {
    NCPoly t = scalar(conj ? coef.invert_variable() : coef);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * img[static_cast<std::size_t>(*it)];
    r += t;
  }
  return nf(r);
}

CoordPtr coord_algebra(int N, const PowerBasis& pb) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, CoordPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, pb.L()}];
  if (!slot) slot = std::make_shared<const CoordAlgebra>(N, pb);
  return slot;
}

}  // namespace qcalc
