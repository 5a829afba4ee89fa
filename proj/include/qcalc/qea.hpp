#pragma once

#include "qcalc/freealg.hpp"
#include "qcalc/ncgb.hpp"

#include <memory>

namespace qcalc {

// U_q(sl_N), N = 2 or 3, with k_i^-1 as explicit letters.
// Letter order f_1 < f_2 < kinv_1 < k_1 < kinv_2 < k_2 < e_1 < e_2.
class UqAlgebra {
public:
  UqAlgebra(int N, const PowerBasis& pb);

  int N() const { return N_; }
  int rank() const { return N_ - 1; }
  const PowerBasis& pb() const { return pb_; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  const RewriteSystem& rules() const { return rs_; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  const CompletionStats& completion_stats() const { return stats_; }

  // 1-based simple root index
  int e(int i) const { return letters_.at(static_cast<std::size_t>(i - 1)).e; }
  int f(int i) const { return letters_.at(static_cast<std::size_t>(i - 1)).f; }
  int k(int i) const { return letters_.at(static_cast<std::size_t>(i - 1)).k; }
  int kinv(int i) const { return letters_.at(static_cast<std::size_t>(i - 1)).kinv; }
  NCPoly E(int i) const { return NCPoly::letter(alpha_, e(i)); }
  NCPoly F(int i) const { return NCPoly::letter(alpha_, f(i)); }
  // k_i^n for any integer n
  NCPoly K(int i, int n = 1) const;
  NCPoly one() const { return NCPoly::constant(alpha_, 1); }
  NCPoly scalar(const Scalar& s) const { return NCPoly::constant(alpha_, s); }
  NCPoly parse(std::string_view text) const;

  NCPoly nf(const NCPoly& p) const { return rs_.normal_form(p); }
  NCTensor coproduct(const NCPoly& p) const;
  NCTensor normalize_tensor(const NCTensor& t) const { return t.normalized(&rs_, &rs_); }
  Scalar counit(const NCPoly& p) const;

  enum class Kind { E, F, K, Kinv };
  Kind kind(int letter) const { return kinds_.at(static_cast<std::size_t>(letter)).first; }
  int root(int letter) const { return kinds_.at(static_cast<std::size_t>(letter)).second; }

private:
  struct Letters {
    int e, f, k, kinv;
  };
  int N_;
  PowerBasis pb_;
  AlphabetPtr alpha_;
  std::vector<Letters> letters_;
  std::vector<std::pair<Kind, int>> kinds_;
  std::vector<NCPoly> relations_;
  RewriteSystem rs_;
  CompletionStats stats_;
  std::vector<NCTensor> delta_gen_;
};

using UqPtr = std::shared_ptr<const UqAlgebra>;
UqPtr uq_algebra(int N, const PowerBasis& pb);

// Writes t = sum_w  (left_w) (x) w  for right-leg words w, and solves each
// left_w in span{basis}. Returns the coefficient matrix coeff[w][b], or the
// first right word whose left part is outside the span.
struct LegDecomposition {
  bool ok = true;
  std::map<Word, std::vector<Scalar>, DegLex> coefficients;  // right word -> coords in basis
  std::optional<Word> failure;
  NCPoly residual;
};
LegDecomposition decompose_left_legs(const NCTensor& t, const std::vector<NCPoly>& basis);

}  // namespace qcalc
