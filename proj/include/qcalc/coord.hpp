#pragma once

#include "qcalc/freealg.hpp"
#include "qcalc/ncgb.hpp"

#include <memory>

namespace qcalc {

enum class RealForm { SUq2, SUq11, SLq2R };

std::string real_form_name(RealForm rf);
RealForm parse_real_form(const std::string& name);

// The coordinate Hopf algebra SL_q(N) on generators u[i,j] (1-based).
// Letter order: off-diagonal entries row-major, then the diagonal.
class CoordAlgebra {
public:
  CoordAlgebra(int N, const PowerBasis& pb, bool normalize = true);

  int N() const { return N_; }
  const PowerBasis& pb() const { return pb_; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  // False for N >= 4 where no completed system is shipped.
  bool normalizes() const { return normalized_; }
  const RewriteSystem& rules() const { return rs_; }
  const std::vector<NCPoly>& relations() const { return relations_; }

  int gen(int i, int j) const { return index_.at(static_cast<std::size_t>((i - 1) * N_ + (j - 1))); }
  std::pair<int, int> position(int letter) const { return pos_.at(static_cast<std::size_t>(letter)); }
  NCPoly u(int i, int j) const { return NCPoly::letter(alpha_, gen(i, j)); }
  NCPoly one() const { return NCPoly::constant(alpha_, 1); }
  NCPoly scalar(const Scalar& s) const { return NCPoly::constant(alpha_, s); }
  NCPoly parse(std::string_view text) const;

  NCPoly nf(const NCPoly& p) const;
  bool equal(const NCPoly& a, const NCPoly& b) const { return nf(a - b).is_zero(); }

  Scalar counit(const NCPoly& p) const;
  NCTensor coproduct(const NCPoly& p) const;
  NCTensor normalize_tensor(const NCTensor& t) const;
  NCPoly multiply_legs(const NCTensor& t) const;  // m: A (x) A -> A
  NCPoly antipode(const NCPoly& p) const;
  // Quantum minor on sorted row and column sets of equal size.
  NCPoly minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  NCPoly det() const;
  // U = sum_i q^(-2i) u[i,i]
  NCPoly quantum_trace() const;
  NCPoly star(const NCPoly& p, RealForm rf) const;

private:
  int N_;
  PowerBasis pb_;
  std::shared_ptr<Alphabet> alpha_mut_;
  AlphabetPtr alpha_;
  std::vector<int> index_;
  std::vector<std::pair<int, int>> pos_;
  std::vector<NCPoly> relations_;
  RewriteSystem rs_;
  bool normalized_ = false;
  std::vector<NCPoly> kappa_gen_;
};

using CoordPtr = std::shared_ptr<const CoordAlgebra>;

// Shared instance per (N, L); completion runs once.
CoordPtr coord_algebra(int N, const PowerBasis& pb);

}  // namespace qcalc
