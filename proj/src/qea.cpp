#include "qcalc/qea.hpp"

#include "qcalc/linalg.hpp"

#include <map>
#include <mutex>

namespace qcalc {

UqAlgebra::UqAlgebra(int N, const PowerBasis& pb) : N_(N), pb_(pb) {
  if (N != 2 && N != 3) throw std::invalid_argument("U_q(sl_N) is provided for N = 2, 3");
  int r = N - 1;
  std::vector<std::string> names;
  letters_.resize(static_cast<std::size_t>(r));
  auto tag = [r](const std::string& base, int i) { return r == 1 ? base : base + "[" + std::to_string(i) + "]"; };
  auto add = [&](const std::string& name, Kind kd, int i) {
    kinds_.emplace_back(kd, i);
    names.push_back(name);
    return static_cast<int>(names.size()) - 1;
  };
  for (int i = 1; i <= r; ++i) letters_[i - 1].f = add(tag("f", i), Kind::F, i);
  for (int i = 1; i <= r; ++i) {
    letters_[i - 1].kinv = add(tag("kinv", i), Kind::Kinv, i);
    letters_[i - 1].k = add(tag("k", i), Kind::K, i);
  }
  for (int i = 1; i <= r; ++i) letters_[i - 1].e = add(tag("e", i), Kind::E, i);
  auto alpha = std::make_shared<Alphabet>("U_q(sl" + std::to_string(N) + ")", names);
  for (int i = 1; i <= r; ++i) {
    const auto& L = letters_[i - 1];
    std::string s = r == 1 ? "" : std::to_string(i);
    std::string sub = r == 1 ? "" : "_" + s;
    if (r > 1) {
      for (auto [base, l] : {std::pair<std::string, int>{"e", L.e}, {"f", L.f}, {"k", L.k}, {"kinv", L.kinv}}) {
        alpha->add_alias(base + s, l);
        alpha->set_display(l, base + s);
      }
    }
    alpha->set_latex(L.e, "e" + sub);
    alpha->set_latex(L.f, "f" + sub);
    alpha->set_latex(L.k, "k" + sub);
    alpha->set_latex(L.kinv, "k" + sub + "^{-1}");
  }
  alpha_ = alpha;

  Scalar q = pb_.q(), qh = pb_.q_half(), lam = pb_.lambda(), lp = pb_.lambda_plus();
  auto let = [this](int l) { return NCPoly::letter(alpha_, l); };
  auto& R = relations_;
  for (int i = 1; i <= r; ++i) {
    NCPoly k = let(this->k(i)), ki = let(kinv(i)), e = E(i), f = F(i);
    R.push_back(k * ki - one());
    R.push_back(ki * k - one());
    for (int j = 1; j <= r; ++j) {
      NCPoly ej = E(j), fj = F(j);
      Scalar ce, cf;  // k_i e_j = ce e_j k_i, k_i f_j = cf f_j k_i
      if (i == j) {
        ce = q;
        cf = q.inverse();
      } else if (std::abs(i - j) == 1) {
        ce = qh.inverse();
        cf = qh;
      } else {
        ce = cf = Scalar(1);
      }
      R.push_back(k * ej - ce * (ej * k));
      R.push_back(k * fj - cf * (fj * k));
      R.push_back(ki * ej - ce.inverse() * (ej * ki));
      R.push_back(ki * fj - cf.inverse() * (fj * ki));
      NCPoly comm = e * fj - fj * e;
      if (i == j) comm -= lam.inverse() * (k * k - ki * ki);
      R.push_back(comm);
      if (j > i) {
        NCPoly kj = let(this->k(j)), kji = let(kinv(j));
        R.push_back(k * kj - kj * k);
        R.push_back(k * kji - kji * k);
        R.push_back(ki * kj - kj * ki);
        R.push_back(ki * kji - kji * ki);
      }
      if (std::abs(i - j) == 1) {
        R.push_back(e * e * ej - lp * (e * ej * e) + ej * e * e);
        R.push_back(f * f * fj - lp * (f * fj * f) + fj * f * f);
      } else if (std::abs(i - j) >= 2) {
        R.push_back(e * ej - ej * e);
        R.push_back(f * fj - fj * f);
      }
    }
  }
  rs_ = complete(relations_, alpha_, N == 2 ? 4 : 6, &stats_);

  delta_gen_.resize(names.size());
  for (int i = 1; i <= r; ++i) {
    const auto& L = letters_[i - 1];
    NCPoly k = let(L.k), ki = let(L.kinv);
    delta_gen_[L.k] = NCTensor::pure(k, k);
    delta_gen_[L.kinv] = NCTensor::pure(ki, ki);
    delta_gen_[L.e] = NCTensor::pure(k, E(i)) + NCTensor::pure(E(i), ki);
    delta_gen_[L.f] = NCTensor::pure(k, F(i)) + NCTensor::pure(F(i), ki);
  }
}

NCPoly UqAlgebra::K(int i, int n) const {
  NCPoly r = one();
  NCPoly g = NCPoly::letter(alpha_, n >= 0 ? k(i) : kinv(i));
  for (int t = 0; t < std::abs(n); ++t) r = r * g;
  return r;
}

NCPoly UqAlgebra::parse(std::string_view text) const {
  auto inv = [this](const Expr& e) -> std::optional<NCPoly> {
    if (e.kind != Expr::Kind::Symbol) return std::nullopt;
    auto l = alpha_->find(e.symbol_key());
    if (!l) return std::nullopt;
    if (kind(*l) == Kind::K) return NCPoly::letter(alpha_, kinv(root(*l)));
    if (kind(*l) == Kind::Kinv) return NCPoly::letter(alpha_, k(root(*l)));
    return std::nullopt;
  };
  return nf(parse_ncpoly(text, alpha_, pb_, inv));
}

NCTensor UqAlgebra::coproduct(const NCPoly& p) const {
  NCTensor out(alpha_, alpha_);
  for (const auto& [w, c] : p.terms()) {
    NCTensor t(alpha_, alpha_);
    t.add_term({}, {}, c);
    for (int l : w) t = normalize_tensor(t * delta_gen_[static_cast<std::size_t>(l)]);
    out += t;
  }
  return out;
}

Scalar UqAlgebra::counit(const NCPoly& p) const {
  Scalar s;
  for (const auto& [w, c] : p.terms()) {
    bool grouplike = true;
    for (int l : w) grouplike = grouplike && (kind(l) == Kind::K || kind(l) == Kind::Kinv);
    if (grouplike) s += c;
  }
  return s;
}

UqPtr uq_algebra(int N, const PowerBasis& pb) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, UqPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, pb.L()}];
  if (!slot) slot = std::make_shared<const UqAlgebra>(N, pb);
  return slot;
}

LegDecomposition decompose_left_legs(const NCTensor& t, const std::vector<NCPoly>& basis) {
  std::map<Word, int, DegLex> cols;
  auto col = [&cols](const Word& w) {
    auto [it, inserted] = cols.try_emplace(w, static_cast<int>(cols.size()));
    return it->second;
  };
  auto to_vec = [&](const NCPoly& p) {
    SVec v;
    for (const auto& [w, c] : p.terms()) v[col(w)] = c;
    return v;
  };
  Echelon ech(true);
  for (const auto& b : basis) {
    if (!ech.insert(to_vec(b))) throw std::invalid_argument("decompose_left_legs: basis is dependent");
  }
  std::map<Word, NCPoly, DegLex> by_right;
  for (const auto& [k, c] : t.terms()) {
    auto [it, inserted] = by_right.try_emplace(k.second, NCPoly(t.left()));
    it->second.add_term(k.first, c);
  }
  LegDecomposition out;
  for (const auto& [w, left] : by_right) {
    if (left.is_zero()) continue;
    auto sol = ech.solve(to_vec(left));
    if (!sol) {
      out.ok = false;
      out.failure = w;
      out.residual = left;
      return out;
    }
    std::vector<Scalar> coords(basis.size());
    for (const auto& [i, c] : *sol) coords[static_cast<std::size_t>(i)] = c;
    out.coefficients.emplace(w, std::move(coords));
  }
  return out;
}

}  // namespace qcalc
