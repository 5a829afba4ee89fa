#pragma once

#include "qcalc/coord.hpp"
#include "qcalc/linalg.hpp"
#include "qcalc/qea.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace qcalc {

// Sparse square matrix, row-major.
struct SMat {
  int dim = 0;
  std::vector<SVec> rows;

  static SMat zero(int dim);
  static SMat identity(int dim);
  Scalar at(int i, int j) const;
  void add(int i, int j, const Scalar& c);
  bool is_zero() const;
  friend SMat operator*(const SMat& a, const SMat& b);
  friend SMat operator+(const SMat& a, const SMat& b);
  friend SMat operator*(const Scalar& c, const SMat& a);
  friend bool operator==(const SMat& a, const SMat& b) { return a.rows == b.rows; }
};

SMat kron(const SMat& a, const SMat& b);

// R-hat for SL_q(N) on C^N (x) C^N, index (a,b) -> (a-1)*N + (b-1).
struct RMatrix {
  int N = 0;
  SMat R, Rinv;
  Scalar entry(int a, int b, int c, int d) const { return R.at((a - 1) * N + b - 1, (c - 1) * N + d - 1); }
  Scalar inv_entry(int a, int b, int c, int d) const { return Rinv.at((a - 1) * N + b - 1, (c - 1) * N + d - 1); }
  bool inverse_ok() const;
  bool braid_ok() const;
  bool hecke_ok(const PowerBasis& pb) const;  // (R - q)(R + q^-1) = 0
};
RMatrix rmatrix(int N, const PowerBasis& pb);

// A family of primitive functionals on SL_q(N), each given by its values on
// the generators (an N x N matrix), its value on 1, and a coproduct rule.
// Functionals are NCPolys over the family's alphabet; the product is
// convolution. Evaluation on a word of length n uses the N^n x N^n matrix
//   M_n(X) = sum c M_1(X') (x) M_{n-1}(X'')  over  Delta X = sum c X' (x) X''.
class FunctionalSpace {
public:
  enum class Family { Uq, L };

  // Pairing of U_q(sl_N) with SL_q(N), N = 2, 3.
  static std::shared_ptr<const FunctionalSpace> uq(int N, const PowerBasis& pb);
  // L-functionals l^{+-i}_j and their kappa-twists, any N (needs L % 2N == 0).
  static std::shared_ptr<const FunctionalSpace> lfun(int N, const PowerBasis& pb);

  Family family() const { return family_; }
  int N() const { return N_; }
  const PowerBasis& pb() const { return pb_; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  const CoordAlgebra& coord() const { return *coord_; }
  CoordPtr coord_ptr() const { return coord_; }
  UqPtr uq_algebra() const { return uq_; }  // null for the L family

  // L family letters (1-based indices)
  int lp(int i, int j) const;
  int lm(int i, int j) const;
  int kappa_of(int letter) const;  // twisted partner of an untwisted letter

  NCPoly parse(std::string_view text) const;
  NCPoly one() const { return NCPoly::constant(alpha_, 1); }
  NCPoly letter(int l) const { return NCPoly::letter(alpha_, l); }
  // Normal form in U_q for the Uq family; identity otherwise.
  NCPoly reduce(const NCPoly& F) const;

  // <F, x> for x over the coordinate alphabet.
  Scalar eval(const NCPoly& F, const NCPoly& x) const;
  Scalar eval_word(const NCPoly& F, const Word& x) const;
  // Matrix of F on words of length n.
  SMat matrix(const NCPoly& F, int n) const;
  const SMat& word_matrix(const Word& P, int n) const;

  // F * x = (id (x) F) Delta(x)
  NCPoly convolve(const NCPoly& F, const NCPoly& x) const;
  // Same, for a functional known only through its matrices M_n.
  using MatrixFn = std::function<const SMat&(int n)>;
  NCPoly convolve_with(const MatrixFn& mat, const NCPoly& x) const;
  Scalar eval_with(const MatrixFn& mat, const NCPoly& x) const;
  // Row (upper indices) or column (lower indices) position of a word in M_n.
  int word_index(const Word& x, bool rows) const;
  // Equality of functionals: exact in U_q, or evaluation on all words of
  // degree <= D. Second member tells which procedure decided.
  std::pair<bool, std::string> equal(const NCPoly& F, const NCPoly& G, int D = 3) const;

  const RMatrix& rmat() const { return R_; }

private:
  FunctionalSpace() = default;
  struct Rule {
    Scalar c;
    int left, right;
  };
  void finish_setup();
  const SMat& letter_matrix(int l, int n) const;

  Family family_ = Family::Uq;
  int N_ = 0;
  PowerBasis pb_;
  AlphabetPtr alpha_;
  CoordPtr coord_;
  UqPtr uq_;
  RMatrix R_;
  std::vector<SMat> m1_;
  std::vector<Scalar> m0_;
  std::vector<std::vector<Rule>> delta_;
  std::vector<int> twist_;
  std::vector<int> lp_, lm_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, SMat> letter_cache_;
  mutable std::map<std::pair<Word, int>, SMat> word_cache_;
};

using SpacePtr = std::shared_ptr<const FunctionalSpace>;

}  // namespace qcalc
