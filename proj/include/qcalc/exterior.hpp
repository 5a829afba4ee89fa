#pragma once

#include "qcalc/fodc.hpp"
#include "qcalc/linalg.hpp"
#include "qcalc/ncgb.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcalc {

// Subspace of Gamma_inv (x) Gamma_inv in coordinates i*n + j. Rows are kept in
// reduced echelon form with the pivot on the largest word, so every row reads
// as a rewrite rule  lead -> -(rest).
class TensorSpace {
public:
  explicit TensorSpace(int n = 0) : n_(n) {}

  int n() const { return n_; }
  bool add(const SVec& v);
  bool contains(const SVec& v) const;
  SVec reduce(const SVec& v) const;
  std::size_t dim() const { return ech_.rank(); }
  // Reduced rows, monic at the pivot, in natural coordinates.
  std::vector<SVec> basis() const;
  std::vector<Form> forms(const Calculus& C) const;

private:
  SVec to_internal(const SVec& v) const;
  SVec to_natural(const SVec& v) const;
  int n_;
  Echelon ech_;
};

// S(g) for each generator; `outside` collects generators not in R.
TensorSpace symmetric_span(const Calculus& C, const std::vector<NCPoly>& generators,
                           std::vector<NCPoly>* outside = nullptr);
// S(R restricted to words of degree <= degree), via the kernel of (eps, X_i).
TensorSpace symmetric_span_kernel(const Calculus& C, int degree);

// P_inv(zeta u) for an invariant zeta and the generator u (a coordinate letter).
SVec p_inv_right(const Calculus& C, const SVec& zeta, int generator);

struct ClosureResult {
  TensorSpace space;
  std::size_t seed_dim = 0;
  int rounds = 0;
};
// Smallest subspace containing the seeds and stable under zeta -> P_inv(zeta u).
ClosureResult closure(const Calculus& C, const TensorSpace& seeds);

// Invariant part of the higher order calculus, Gamma_inv^(x) / J(S(R)).
// Words are ordered deglex with the letters of I reversed, so the leading
// word of a two-term relation is its ordered pair and normal words decrease.
class ExteriorAlgebra {
public:
  ExteriorAlgebra(CalculusPtr C, const TensorSpace& relations, int bound = 4);

  const Calculus& calculus() const { return *C_; }
  const TensorSpace& relations() const { return S_; }
  // Relations and rules live over wedge_alphabet(); letter k is w_{n-1-k}.
  const AlphabetPtr& wedge_alphabet() const { return wedge_; }
  const std::vector<NCPoly>& quadratic() const { return quadratic_; }
  const RewriteSystem& rules() const { return rs_; }
  int bound() const { return bound_; }
  // Overlaps of the quadratic relations up to the bound.
  const GroebnerReport& groebner() const { return gb_; }
  std::vector<std::uint64_t> dims(int n_max) const;
  // Normal words of length n as words in the w_i.
  std::vector<Word> basis_words(int n) const;

  Form reduce(const Form& f) const;
  // (c w)(c' w') = c (w c') w', reduced
  Form wedge(const Form& a, const Form& b) const;
  // d w_i = -sum (X_k X_l)(x_i) w_k ^ w_l
  Form maurer_cartan(int i) const;
  Form d(const Form& f) const;
  Form d(const NCPoly& x) const;

private:
  Word flip(const Word& w) const;

  CalculusPtr C_;
  TensorSpace S_;
  int bound_;
  AlphabetPtr wedge_;
  std::vector<NCPoly> quadratic_;
  RewriteSystem rs_;
  GroebnerReport gb_;
  std::vector<Form> mc_;
};

// Basis of S(R) of the form  w_i w_j + g w_j w_i (+ d w_n w_m),  i < j, n < m,
// where w_n w_m + mu w_m w_n is itself a basis element, plus squares w_i w_i.
struct ShapedBasis {
  bool ok = false;
  std::string failure;
  std::vector<SVec> elements;
};
ShapedBasis shaped_basis(const TensorSpace& S);

// sigma on Gamma_inv (x) Gamma_inv read off a shaped basis.
struct Sigma {
  bool ok = false;
  std::string failure;
  int n = 0;
  Matrix m;  // m[target][source]
  SVec apply(const SVec& v) const;
  SVec apply_triple(const SVec& v, int slot) const;  // slot 0: sigma_12, 1: sigma_23
};
Sigma build_sigma(int n, const std::vector<SVec>& shaped);

struct SigmaReport {
  bool involution = false;
  std::size_t rank_minus = 0, rank_plus = 0;  // rank(sigma - 1), rank(sigma + 1)
  bool spans_S = false;                       // (1 + sigma)(w_i w_j), i <= j, span S(R)
};
SigmaReport sigma_report(const Sigma& s, const TensorSpace& S);

// X_i X_j - sum sigma^{ij}_{nm} X_n X_m = sum_k C^k_ij X_k; nullopt if the left
// side is outside span{X}.
std::optional<std::vector<Scalar>> lie_structure(const Calculus& C, const Sigma& s, int i, int j, std::string* mode = nullptr);

// Solves F = sum c_k X_k (exact in U_q, else on words of degree <= D).
std::optional<std::vector<Scalar>> solve_in_span(const Calculus& C, const NCPoly& F, int D = 3);

}  // namespace qcalc
