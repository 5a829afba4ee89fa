#pragma once

#include "qcalc/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qcalc {

using SVec = std::map<int, Scalar>;

void svec_axpy(SVec& y, const Scalar& a, const SVec& x);  // y += a*x
SVec svec_scaled(const SVec& x, const Scalar& a);
bool svec_is_zero(const SVec& x);

// Incrementally built reduced row echelon form over Q(v). The pivot of a row
// is its smallest column index, so callers control pivot preference through
// the column numbering. Optionally remembers how every row was formed from
// the inserted vectors, which yields kernels and coordinates.
class Echelon {
public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Reduces v against the current rows. If `combo` is given it receives the
  // coefficients c_i with v - reduce(v) = sum_i c_i * input_i.
  SVec reduce(const SVec& v, SVec* combo = nullptr) const;
  bool contains(const SVec& v) const { return svec_is_zero(reduce(v)); }

  // Inserts v (input number = count of previous insert calls). Returns
  // true if v was independent. With tracking enabled, a dependent v yields a
  // relation  input_n - sum c_i input_i = 0 retrievable via last_relation().
  bool insert(const SVec& v);
  const SVec& last_relation() const { return last_relation_; }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }
  // Rows keyed by pivot column, each normalized to 1 at its pivot.
  const std::map<int, SVec>& rows() const { return rows_; }
  // Coordinates of v in terms of the inserted vectors (requires tracking).
  std::optional<SVec> solve(const SVec& v) const;

private:
  bool track_;
  std::size_t inputs_ = 0;
  std::map<int, SVec> rows_;
  std::map<int, SVec> combos_;
  SVec last_relation_;
};

std::size_t rank_of(const std::vector<SVec>& vectors);

// Basis of {c : sum_j c_j * images[j] = 0}.
std::vector<SVec> kernel_of(const std::vector<SVec>& images);

// Dense square matrix helpers for the sigma computations.
using Matrix = std::vector<std::vector<Scalar>>;
Matrix identity_matrix(std::size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);
std::size_t matrix_rank(const Matrix& m);

}  // namespace qcalc
