#pragma once

#include "qcalc/exterior.hpp"
#include "qcalc/report.hpp"

#include <optional>
#include <vector>

namespace qcalc {

struct SuiteOptions {
  PowerBasis pb;
  std::optional<Rational> v0;  // specialization of v; guards apply
  std::vector<int> rs{1, 2, 3, 4};
  std::vector<int> gammas{1, 2};
  std::optional<std::pair<Scalar, Scalar>> alpha_beta;  // one (alpha, beta) instead of the grid
  std::vector<int> sizes{2, 3, 4};
  std::vector<int> sln_rs{1, 2};
  int degree = 3;  // evaluation depth in evidential mode
  int bound = 4;   // overlap bound for the exterior relations
};

// Cached S(R) and exterior algebra for a catalog calculus.
struct Built {
  CalculusPtr C;
  TensorSpace S;
  int rounds = 0;
  std::shared_ptr<const ExteriorAlgebra> E;
};
const Built& built_sl2(int r, const PowerBasis& pb, int bound = 4);
const Built& built_sl3(int gamma, const PowerBasis& pb, int bound = 4);

// One suite per acceptance criterion.
Report suite_sl2_ideals(const SuiteOptions& o);       // right ideals and functionals on SL_q(2)
Report suite_sl2_tables(const SuiteOptions& o);    // commutation, differentials, quantum Lie relations
Report suite_star(const SuiteOptions& o);          // *-calculi
Report suite_sl2_membership(const SuiteOptions& o);
Report suite_sl3_membership(const SuiteOptions& o);
Report suite_sl3(const SuiteOptions& o);
Report suite_dims(const SuiteOptions& o);
Report suite_sln(const SuiteOptions& o);
Report suite_limits(const SuiteOptions& o);
Report suite_properties(const SuiteOptions& o);

// Refusal text if v0 violates q^12 != 1, else empty.
std::string sl2_guard_violation(const PowerBasis& pb, const Rational& v0);

}  // namespace qcalc
