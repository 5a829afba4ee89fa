#pragma once

#include "qcalc/coord.hpp"
#include "qcalc/functionals.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qcalc {

// Finite sum  c_w * w  where w is a word in the invariant 1-forms and c_w a
// coordinate element standing on the left. Words of length 1 are 1-forms,
// length 2 elements of Gamma (x)_A Gamma, longer ones tensor or wedge words.
class Form {
public:
  using Terms = std::map<Word, NCPoly, DegLex>;

  Form() = default;
  Form(AlphabetPtr coord, AlphabetPtr omega) : coord_(std::move(coord)), omega_(std::move(omega)) {}
  static Form basis(AlphabetPtr coord, AlphabetPtr omega, const Word& w, const Scalar& c = Scalar(1));

  const AlphabetPtr& coord_alphabet() const { return coord_; }
  const AlphabetPtr& omega_alphabet() const { return omega_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  NCPoly coeff(const Word& w) const;
  void add(const Word& w, const NCPoly& c);
  void add(const Word& w, const Scalar& c) { add(w, NCPoly::constant(coord_, c)); }

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& c, Form f) { return f *= c; }
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  // All coefficients are scalars.
  bool is_invariant() const;
  Scalar scalar_coeff(const Word& w) const;  // constant term of the coefficient
  // Coordinates of an invariant form of homogeneous degree k in the basis of
  // words, word (i1..ik) -> i1*n^(k-1) + ... + ik.
  SVec to_vector(int n) const;
  static Form from_vector(AlphabetPtr coord, AlphabetPtr omega, const SVec& v, int n, int degree);

  std::string to_string(const PowerBasis& pb, const std::string& sep = "*") const;
  std::string to_latex(const PowerBasis& pb, const std::string& product = "\\otimes") const;

private:
  AlphabetPtr coord_, omega_;
  Terms terms_;
};

enum class CalcKind { SL2, Sudbery, SL3, SLN };

// A left-covariant first order calculus given by its quantum Lie algebra:
// basis functionals X_i, dual elements x_i with X_i(x_j) = delta_ij, and the
// functionals f^k_i of  Delta X_i = eps (x) X_i + sum_k X_k (x) f^k_i,
// obtained as  f^k_i(x) = X_i(x_k x) - eps(x_k) X_i(x).
class Calculus {
public:
  struct Definition {
    std::string name;
    CalcKind kind = CalcKind::SL2;
    int r = 0;
    Scalar alpha, beta;
    SpacePtr space;
    std::vector<std::string> labels;
    std::vector<NCPoly> functionals;
    std::vector<NCPoly> duals;  // empty: solve over the generators
  };
  explicit Calculus(Definition def);

  const std::string& name() const { return s_.name; }
  CalcKind kind() const { return s_.kind; }
  int N() const { return s_.space->N(); }
  int r() const { return s_.r; }
  const Scalar& alpha() const { return s_.alpha; }
  const Scalar& beta() const { return s_.beta; }
  const PowerBasis& pb() const { return s_.space->pb(); }
  const SpacePtr& space() const { return s_.space; }
  const CoordAlgebra& coord() const { return s_.space->coord(); }
  const AlphabetPtr& omega_alphabet() const { return omega_; }
  // "exact" when identities are decided in U_q, "evidential(D)" otherwise.
  std::string mode() const;
  bool exact() const { return s_.space->family() == FunctionalSpace::Family::Uq; }

  int size() const { return static_cast<int>(s_.labels.size()); }
  const std::string& label(int i) const { return s_.labels.at(static_cast<std::size_t>(i)); }
  int index(const std::string& label) const;
  const NCPoly& functional(int i) const { return s_.functionals.at(static_cast<std::size_t>(i)); }
  const std::vector<NCPoly>& functionals() const { return s_.functionals; }
  const NCPoly& dual(int i) const { return duals_.at(static_cast<std::size_t>(i)); }

  Scalar X(int i, const NCPoly& x) const;
  NCPoly X_convolve(int i, const NCPoly& x) const;
  const SMat& x_matrix(int i, int n) const;
  const SMat& f_matrix(int k, int i, int n) const;
  Scalar f(int k, int i, const NCPoly& x) const;
  NCPoly f_convolve(int k, int i, const NCPoly& x) const;
  // (X_i X_j)(x)
  Scalar XX(int i, int j, const NCPoly& x) const;

  Form zero_form() const { return Form(coord().alphabet(), omega_); }
  Form omega_word(const Word& w, const Scalar& c = Scalar(1)) const {
    return Form::basis(coord().alphabet(), omega_, w, c);
  }

  // Parsers. Scalars may use alpha, beta and the names in `extra`.
  using ScalarMap = std::map<std::string, Scalar>;
  NCPoly parse_coord(std::string_view text, const ScalarMap& extra = {}) const;
  // Expressions in X[label] (and the raw functional letters).
  NCPoly parse_functional(std::string_view text, const ScalarMap& extra = {}) const;
  // Coordinate coefficients followed by forms, e.g. "q^-1*a*w0 + b*w1*w2".
  Form parse_form(std::string_view text, const ScalarMap& extra = {}) const;

private:
  std::function<std::optional<Scalar>(const Expr&)> scalar_hook(const ScalarMap& extra) const;

  Definition s_;
  std::vector<NCPoly> duals_;
  AlphabetPtr omega_;
  AlphabetPtr mixed_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, SMat> xcache_;
  mutable std::map<std::tuple<int, int, int>, SMat> fcache_;
};

using CalculusPtr = std::shared_ptr<const Calculus>;

// The four three-dimensional calculi on SL_q(2), r = 1..4.
CalculusPtr sl2_calculus(int r, const PowerBasis& pb);
// The variant presentation of the r = 1 Lie algebra with X~_1 = q lambda^-1 (eps - k^4).
CalculusPtr sudbery_calculus(const PowerBasis& pb);
// The eight-dimensional SL_q(3) family with X_13 = X_12 X_23 - alpha X_23 X_12,
// X_31 = X_32 X_21 - beta X_21 X_32.
CalculusPtr sl3_calculus(const Scalar& alpha, const Scalar& beta, const PowerBasis& pb);
// which = 1: (alpha, beta) = (q^-1, q);  which = 2: (q, q^-1)
CalculusPtr sl3_gamma(int which, const PowerBasis& pb);
// The N^2-1 dimensional calculi built from L-functionals, r = 1, 2. Needs L % 2N == 0.
CalculusPtr sln_calculus(int N, int r, const PowerBasis& pb);

struct CatalogParams {
  int r = 1;
  int N = 2;
  std::optional<Scalar> alpha, beta;
  int gamma = 0;
};
CalculusPtr catalog(const std::string& name, const CatalogParams& p, const PowerBasis& pb);

// Checks  Delta X - eps (x) X  in  span{X} (x) A'  for every basis functional.
struct CovarianceEntry {
  std::string label;
  bool ok = true;
  std::map<int, NCPoly> cofactors;  // k -> f^k_i in U_q (exact mode only)
  std::string witness;
};
struct CovarianceReport {
  bool ok = true;
  std::string mode;
  std::vector<CovarianceEntry> entries;
};
CovarianceReport covariance_check(const Calculus& C, int D = 3);
// Exact check for an arbitrary list of U_q functionals.
CovarianceReport covariance_check_uq(const UqAlgebra& U, const std::vector<NCPoly>& X,
                                     const std::vector<std::string>& labels = {});

// omega(x) = sum_i X_i(x) w_i
Form omega(const Calculus& C, const NCPoly& x);
bool ideal_member(const Calculus& C, const NCPoly& x);
// dx = sum_i (X_i * x) w_i
Form differential(const Calculus& C, const NCPoly& x);
// Moves y from the right through every form: w_k y = sum_i (f^k_i * y) w_i.
Form right_mul(const Calculus& C, const Form& t, const NCPoly& y);
Form left_mul(const Calculus& C, const NCPoly& y, const Form& t);

struct TableRow {
  int form;
  int generator;  // coordinate letter
  Form value;     // w_form * u
};
std::vector<TableRow> commutation_table(const Calculus& C);

// S(x) = sum (X_i X_j)(x) w_i (x) w_j.  `member` reports whether x was in R.
Form symmetric(const Calculus& C, const NCPoly& x, bool* member = nullptr);
// Applies eps to the left coefficients.
Form p_inv(const Calculus& C, const Form& t);

// Decides an identity among functionals: exact in U_q, else by evaluation.
struct IdentityCheck {
  bool ok;
  std::string mode;
  NCPoly residual;
};
IdentityCheck check_identity(const Calculus& C, const NCPoly& expr, int D = 3);

// Star compatibility on SL_q(2): kappa(g)* tested against every R_s.
struct StarResult {
  enum Kind { Yes, No, Cross } kind = No;
  int target = 0;
  std::string to_string() const;
};
StarResult star_compatible(const std::vector<CalculusPtr>& calculi, const std::vector<std::vector<NCPoly>>& generators,
                           int r, RealForm rf);

// Constructive bound codim R <= |I| from a generator list: every normal word of
// degree <= 2 lies in span{1, x_i} + span{g} + span{g u : deg g <= 1}.
struct CodimReport {
  bool ok = false;
  int codim = -1;
  std::vector<NCPoly> not_annihilated;
  std::vector<Word> unreached;
};
CodimReport codim_check(const Calculus& C, const std::vector<NCPoly>& generators);

// gamma_0 with (a - gamma_0) b in R and gamma_2 with (a - gamma_2) c in R.
std::optional<std::pair<Scalar, Scalar>> gamma_pair(const Calculus& C);

}  // namespace qcalc
