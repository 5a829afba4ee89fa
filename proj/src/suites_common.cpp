#include "suites_common.hpp"

#include <map>
#include <mutex>

namespace qcalc {

namespace {

std::mutex cache_mu;
std::map<std::tuple<int, int, int, int>, std::unique_ptr<Built>> cache;

const Built& build_cached(int kind, int param, const PowerBasis& pb, int bound) {
  std::lock_guard<std::mutex> lock(cache_mu);
  auto key = std::make_tuple(kind, param, pb.L(), bound);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto b = std::make_unique<Built>();
  b->C = kind == 2 ? sl2_calculus(param, pb) : sl3_gamma(param, pb);
  auto cl = closure(*b->C, symmetric_span_kernel(*b->C, 2));
  b->S = cl.space;
  b->rounds = cl.rounds;
  b->E = std::make_shared<const ExteriorAlgebra>(b->C, b->S, bound);
  return *cache.emplace(key, std::move(b)).first->second;
}

}  // namespace

const Built& built_sl2(int r, const PowerBasis& pb, int bound) { return build_cached(2, r, pb, bound); }
const Built& built_sl3(int gamma, const PowerBasis& pb, int bound) { return build_cached(3, gamma, pb, bound); }

std::string sl2_guard_violation(const PowerBasis& pb, const Rational& v0) {
  if (v0 == 0) return "v = 0 is not a specialization";
  Rational q0 = 1;
  for (int i = 0; i < pb.L(); ++i) q0 *= v0;
  Rational p = 1;
  for (int i = 0; i < 12; ++i) p *= q0;
  if (p == 1) return "guard q^12 != 1 violated at v = " + v0.get_str();
  return "";
}

namespace detail {

AlphabetPtr lie_alphabet(const Calculus& C) {
  std::vector<std::string> names;
  for (int i = 0; i < C.size(); ++i) names.push_back("X[" + C.label(i) + "]");
  auto a = std::make_shared<Alphabet>("X(" + C.name() + ")", names);
  return a;
}

NCPoly parse_lie(const Calculus& C, const AlphabetPtr& X, const std::string& text) {
  return parse_ncpoly(text, X, C.pb());
}

Calculus::ScalarMap sl2_gammas(const PowerBasis& pb, int r) {
  const json& g = fixture_at("sl2", "right_ideal/gamma")[std::to_string(r)];
  return {{"g0", pb.parse(str(g[0]))}, {"g2", pb.parse(str(g[1]))}};
}

std::string form_diff(const Form& got, const Form& want, const PowerBasis& pb) {
  if (got == want) return "";
  return "engine " + got.to_string(pb) + ", expected " + want.to_string(pb);
}

std::optional<NCPoly> specialize(const NCPoly& p, const Rational& v0) {
  NCPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    if (!c.regular_at(v0)) return std::nullopt;
    out.add_term(w, Scalar(c.specialize(v0)));
  }
  return out;
}

}  // namespace detail
}  // namespace qcalc
