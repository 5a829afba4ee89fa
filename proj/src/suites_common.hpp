#pragma once

#include "qcalc/fixtures.hpp"
#include "qcalc/suites.hpp"

#include <sstream>
#include <string>

namespace qcalc::detail {

using nlohmann::json;

inline std::string str(const json& j) { return j.get<std::string>(); }

inline bool has_r(const json& rs, int r) {
  for (const auto& x : rs) {
    if (x.get<int>() == r) return true;
  }
  return false;
}

inline std::string tag(const std::string& key, int v) { return " " + key + "=" + std::to_string(v); }

// Letters X[label] of a calculus as a free algebra, for relations read as
// polynomials in the basis functionals.
AlphabetPtr lie_alphabet(const Calculus& C);
NCPoly parse_lie(const Calculus& C, const AlphabetPtr& X, const std::string& text);

// (g0, g2) names for the SL_q(2) generator list.
Calculus::ScalarMap sl2_gammas(const PowerBasis& pb, int r);

// a - b with the difference printed, or "" if equal.
std::string form_diff(const Form& got, const Form& want, const PowerBasis& pb);

// Specializes every coefficient at v0; nullopt at a pole.
std::optional<NCPoly> specialize(const NCPoly& p, const Rational& v0);

}  // namespace qcalc::detail
