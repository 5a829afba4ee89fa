#pragma once

#include "qcalc/expr.hpp"
#include "qcalc/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qcalc {

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Word = std::vector<int>;

// Degree-lexicographic order: shorter words first, then letter by letter
// using the alphabet index as precedence.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline int deglex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w) h = h * 131u + static_cast<std::size_t>(x) + 1;
    return h;
  }
};

// Ordered generator names. Index order is the precedence used by DegLex.
class Alphabet {
public:
  Alphabet(std::string name, std::vector<std::string> letters);

  const std::string& name() const { return name_; }
  std::size_t size() const { return letters_.size(); }
  const std::string& letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<int> find(const std::string& key) const;
  int index(const std::string& key) const;

  void add_alias(const std::string& alias, int letter);
  // Name used by the printer (defaults to the letter key).
  void set_display(int letter, std::string text);
  const std::string& display(int letter) const { return display_.at(static_cast<std::size_t>(letter)); }
  void set_latex(int letter, std::string text);
  const std::string& latex(int letter) const { return latex_.at(static_cast<std::size_t>(letter)); }

private:
  std::string name_;
  std::vector<std::string> letters_;
  std::vector<std::string> display_;
  std::vector<std::string> latex_;
  std::unordered_map<std::string, int> lookup_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

class NCPoly {
public:
  using Terms = std::map<Word, Scalar, DegLex>;

  NCPoly() = default;
  explicit NCPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  static NCPoly constant(AlphabetPtr alpha, const Scalar& c);
  static NCPoly monomial(AlphabetPtr alpha, Word w, const Scalar& c = Scalar(1));
  static NCPoly letter(AlphabetPtr alpha, int i) { return monomial(std::move(alpha), Word{i}); }

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Word& w) const;
  // Largest word in the monomial order; throws on zero.
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;
  int degree() const;
  Scalar constant_term() const { return coeff({}); }

  void add_term(const Word& w, const Scalar& c);
  NCPoly& operator+=(const NCPoly& b);
  NCPoly& operator-=(const NCPoly& b);
  NCPoly& operator*=(const Scalar& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& c, NCPoly p) { return p *= c; }
  friend NCPoly operator*(NCPoly p, const Scalar& c) { return p *= c; }

  // Apply f to every coefficient (e.g. the v -> 1/v automorphism).
  NCPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(const PowerBasis& pb) const;
  std::string to_latex(const PowerBasis& pb) const;

private:
  void check_alphabet(const NCPoly& b) const;
  AlphabetPtr alpha_;
  Terms terms_;
};

std::string format_word(const Alphabet& a, const Word& w);

class RewriteSystem;

// Element of A (x) B for two free algebras, stored on word pairs.
class NCTensor {
public:
  struct KeyLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
      int c = deglex_compare(a.first, b.first);
      if (c != 0) return c < 0;
      return deglex_compare(a.second, b.second) < 0;
    }
  };
  using Terms = std::map<std::pair<Word, Word>, Scalar, KeyLess>;

  NCTensor() = default;
  NCTensor(AlphabetPtr left, AlphabetPtr right) : left_(std::move(left)), right_(std::move(right)) {}
  static NCTensor pure(const NCPoly& a, const NCPoly& b);

  const AlphabetPtr& left() const { return left_; }
  const AlphabetPtr& right() const { return right_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& a, const Word& b) const;

  void add_term(const Word& a, const Word& b, const Scalar& c);
  NCTensor& operator+=(const NCTensor& o);
  NCTensor& operator-=(const NCTensor& o);
  NCTensor& operator*=(const Scalar& c);
  friend NCTensor operator+(NCTensor a, const NCTensor& b) { return a += b; }
  friend NCTensor operator-(NCTensor a, const NCTensor& b) { return a -= b; }
  friend NCTensor operator*(const Scalar& c, NCTensor t) { return t *= c; }
  // (a (x) b)(c (x) d) = ac (x) bd
  friend NCTensor operator*(const NCTensor& x, const NCTensor& y);
  friend bool operator==(const NCTensor& a, const NCTensor& b) { return a.terms_ == b.terms_; }

  // Applies linear maps on each leg, given on words.
  NCTensor map_legs(const std::function<NCPoly(const Word&)>& fl,
                    const std::function<NCPoly(const Word&)>& fr) const;
  NCTensor normalized(const RewriteSystem* left_rs, const RewriteSystem* right_rs) const;

  std::string to_string(const PowerBasis& pb) const;

private:
  AlphabetPtr left_, right_;
  Terms terms_;
};

struct Rule {
  Word lead;
  NCPoly rhs;  // lead -> rhs, rhs strictly smaller than lead
};

enum class Strategy { Leftmost, Rightmost };

class RewriteSystem {
public:
  RewriteSystem() = default;
  explicit RewriteSystem(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  int max_lead_length() const;

  // Adds lead -> rhs. The caller guarantees rhs < lead.
  void add_rule(Word lead, NCPoly rhs);
  // Turns a nonzero polynomial into a monic rule on its leading word.
  void add_relation(const NCPoly& p);
  void clear();
  // Drops every rule for which pred(rule) holds; returns the dropped rules.
  std::vector<Rule> remove_if(const std::function<bool(const Rule&)>& pred);
  void set_rhs(std::size_t i, NCPoly rhs);

  // First match position of any leading word inside w, per strategy.
  std::optional<std::pair<std::size_t, std::size_t>> find_match(const Word& w, Strategy s) const;
  bool is_normal(const Word& w) const { return !find_match(w, Strategy::Leftmost); }

  NCPoly normal_form(const NCPoly& p, int degree_cap = 64, Strategy s = Strategy::Leftmost) const;
  NCPoly normal_form_word(const Word& w, int degree_cap = 64, Strategy s = Strategy::Leftmost) const;

private:
  void index_rule(std::size_t i);
  AlphabetPtr alpha_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> by_lead_;
  std::vector<std::size_t> lead_lengths_;
  mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
};

// Parses an NCPoly over the alphabet: letters by key or alias, scalars via q,
// lambda, lambdap and numbers. `inverse` resolves negative powers of letters.
NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alpha, const PowerBasis& pb,
                    const std::function<std::optional<NCPoly>(const Expr&)>& inverse = {});

}  // namespace qcalc
