#include "qcalc/linalg.hpp"

namespace qcalc {

void svec_axpy(SVec& y, const Scalar& a, const SVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) {
    auto [it, inserted] = y.try_emplace(i, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SVec svec_scaled(const SVec& x, const Scalar& a) {
  SVec r;
  if (a.is_zero()) return r;
  for (const auto& [i, c] : x) r.emplace(i, c * a);
  return r;
}

bool svec_is_zero(const SVec& x) {
  for (const auto& [i, c] : x) {
    if (!c.is_zero()) return false;
  }
  return true;
}

SVec Echelon::reduce(const SVec& v, SVec* combo) const {
  SVec r = v;
  for (auto it = r.begin(); it != r.end();) {
    if (it->second.is_zero()) {
      it = r.erase(it);
    } else {
      ++it;
    }
  }
  // rows are zero on each other's pivots, so one pass over v's pivots suffices
  std::vector<std::pair<int, Scalar>> hits;
  for (const auto& [col, c] : r) {
    if (rows_.count(col)) hits.emplace_back(col, c);
  }
  for (const auto& [col, c] : hits) {
    svec_axpy(r, -c, rows_.at(col));
    if (combo && track_) svec_axpy(*combo, c, combos_.at(col));
  }
  return r;
}

bool Echelon::insert(const SVec& v) {
  int id = static_cast<int>(inputs_++);
  SVec combo;
  SVec r = reduce(v, track_ ? &combo : nullptr);
  if (r.empty()) {
    if (track_) {
      last_relation_ = svec_scaled(combo, Scalar(-1));
      last_relation_[id] = Scalar(1);
    }
    return false;
  }
  int piv = r.begin()->first;
  Scalar inv = r.begin()->second.inverse();
  r = svec_scaled(r, inv);
  SVec rc;
  if (track_) {
    // r = v - combo·inputs, normalized
    rc = svec_scaled(combo, -inv);
    rc[id] = inv;
  }
  for (auto& [p, row] : rows_) {
    auto it = row.find(piv);
    if (it == row.end()) continue;
    Scalar c = it->second;
    svec_axpy(row, -c, r);
    if (track_) svec_axpy(combos_[p], -c, rc);
  }
  rows_.emplace(piv, std::move(r));
  if (track_) combos_.emplace(piv, std::move(rc));
  return true;
}

std::optional<SVec> Echelon::solve(const SVec& v) const {
  SVec combo;
  SVec r = reduce(v, &combo);
  if (!r.empty()) return std::nullopt;
  return combo;
}

std::size_t rank_of(const std::vector<SVec>& vectors) {
  Echelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<SVec> kernel_of(const std::vector<SVec>& images) {
  Echelon e(true);
  std::vector<SVec> out;
  for (const auto& v : images) {
    if (!e.insert(v)) out.push_back(e.last_relation());
  }
  return out;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
      }
    }
  }
  return c;
}

std::size_t matrix_rank(const Matrix& m) {
  std::vector<SVec> rows;
  for (const auto& r : m) {
    SVec v;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!r[j].is_zero()) v.emplace(static_cast<int>(j), r[j]);
    }
    rows.push_back(std::move(v));
  }
  return rank_of(rows);
}

}  // namespace qcalc
