#include "qcalc/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace qcalc {

Alphabet::Alphabet(std::string name, std::vector<std::string> letters)
    : name_(std::move(name)), letters_(std::move(letters)) {
  display_ = letters_;
  latex_ = letters_;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!lookup_.emplace(letters_[i], static_cast<int>(i)).second) {
      throw AlgebraError("duplicate generator '" + letters_[i] + "' in alphabet " + name_);
    }
  }
}

std::optional<int> Alphabet::find(const std::string& key) const {
  auto it = lookup_.find(key);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::index(const std::string& key) const {
  auto i = find(key);
  if (!i) throw AlgebraError("unknown generator '" + key + "' in alphabet " + name_);
  return *i;
}

void Alphabet::add_alias(const std::string& alias, int letter) {
  if (!lookup_.emplace(alias, letter).second) throw AlgebraError("alias '" + alias + "' already defined");
}

void Alphabet::set_display(int letter, std::string text) { display_.at(static_cast<std::size_t>(letter)) = std::move(text); }

void Alphabet::set_latex(int letter, std::string text) { latex_.at(static_cast<std::size_t>(letter)) = std::move(text); }

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::constant(AlphabetPtr alpha, const Scalar& c) {
  NCPoly p(std::move(alpha));
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::monomial(AlphabetPtr alpha, Word w, const Scalar& c) {
  NCPoly p(std::move(alpha));
  p.add_term(w, c);
  return p;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) throw AlgebraError("leading word of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& NCPoly::leading_coeff() const {
  if (terms_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

int NCPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::check_alphabet(const NCPoly& b) const {
  if (alpha_ && b.alpha_ && alpha_ != b.alpha_ && alpha_->name() != b.alpha_->name()) {
    throw AlgebraError("alphabet mismatch: " + alpha_->name() + " vs " + b.alpha_->name());
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& b) {
  check_alphabet(b);
  if (!alpha_) alpha_ = b.alpha_;
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& b) {
  check_alphabet(b);
  if (!alpha_) alpha_ = b.alpha_;
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& [w, x] : p.terms_) x = -x;
  return p;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.check_alphabet(b);
  NCPoly r(a.alpha_ ? a.alpha_ : b.alpha_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly NCPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  NCPoly r(alpha_);
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

std::string format_word(const Alphabet& a, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += a.display(w[i]);
  }
  return s;
}

namespace {

// Collapses runs of a repeated letter into x^n.
std::string format_word_powers(const Alphabet& a, const Word& w, bool latex) {
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::string& name = latex ? a.latex(w[i]) : a.display(w[i]);
    if (!s.empty()) s += latex ? " " : "*";
    s += name;
    if (j - i > 1) s += latex ? "^{" + std::to_string(j - i) + "}" : "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string render(const NCPoly& p, const PowerBasis& pb, bool latex) {
  if (p.is_zero()) return "0";
  const Alphabet* a = p.alphabet().get();
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    std::string mono = w.empty() ? "" : format_word_powers(*a, w, latex);
    std::string coef;
    bool negative = false;
    if (w.empty()) {
      coef = pb.format(c);
      if (!coef.empty() && coef[0] == '-' && pb.format_coefficient(-c).find('(') != 0) {
        negative = true;
        coef = pb.format(-c);
      }
    } else {
      coef = pb.format_coefficient(c);
      if (coef == "-") {
        negative = true;
        coef.clear();
      } else if (!coef.empty() && coef[0] == '-') {
        negative = true;
        coef = pb.format_coefficient(-c);
      }
    }
    std::string term = coef;
    if (!mono.empty()) term += coef.empty() ? mono : (latex ? " " : "*") + mono;
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string NCPoly::to_string(const PowerBasis& pb) const { return render(*this, pb, false); }

NCTensor NCTensor::pure(const NCPoly& a, const NCPoly& b) {
  NCTensor t(a.alphabet(), b.alphabet());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
  }
  return t;
}

Scalar NCTensor::coeff(const Word& a, const Word& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar() : it->second;
}

void NCTensor::add_term(const Word& a, const Word& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCTensor& NCTensor::operator+=(const NCTensor& o) {
  if (!left_) {
    left_ = o.left_;
    right_ = o.right_;
  }
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

NCTensor& NCTensor::operator-=(const NCTensor& o) {
  if (!left_) {
    left_ = o.left_;
    right_ = o.right_;
  }
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

NCTensor& NCTensor::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

NCTensor operator*(const NCTensor& x, const NCTensor& y) {
  NCTensor r(x.left_ ? x.left_ : y.left_, x.right_ ? x.right_ : y.right_);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      Word a = kx.first, b = kx.second;
      a.insert(a.end(), ky.first.begin(), ky.first.end());
      b.insert(b.end(), ky.second.begin(), ky.second.end());
      r.add_term(a, b, cx * cy);
    }
  }
  return r;
}

NCTensor NCTensor::map_legs(const std::function<NCPoly(const Word&)>& fl,
                            const std::function<NCPoly(const Word&)>& fr) const {
  NCTensor r(left_, right_);
  for (const auto& [k, c] : terms_) {
    NCPoly a = fl ? fl(k.first) : NCPoly::monomial(left_, k.first);
    NCPoly b = fr ? fr(k.second) : NCPoly::monomial(right_, k.second);
    for (const auto& [wa, ca] : a.terms()) {
      for (const auto& [wb, cb] : b.terms()) r.add_term(wa, wb, c * ca * cb);
    }
  }
  return r;
}

NCTensor NCTensor::normalized(const RewriteSystem* left_rs, const RewriteSystem* right_rs) const {
  std::function<NCPoly(const Word&)> fl, fr;
  if (left_rs) fl = [left_rs](const Word& w) { return left_rs->normal_form_word(w); };
  if (right_rs) fr = [right_rs](const Word& w) { return right_rs->normal_form_word(w); };
  return map_legs(fl, fr);
}

std::string NCTensor::to_string(const PowerBasis& pb) const {
  if (terms_.empty()) return "0";
  // group by left leg so the output reads  a (x) (b + c) + ...
  std::string out;
  bool first = true;
  auto word_text = [](const Alphabet& al, const Word& w) { return w.empty() ? std::string("1") : format_word(al, w); };
  for (const auto& [k, c] : terms_) {
    std::string coef = pb.format_coefficient(c);
    bool neg = false;
    if (coef == "-") {
      neg = true;
      coef.clear();
    } else if (!coef.empty() && coef[0] == '-') {
      neg = true;
      coef = pb.format_coefficient(-c);
    }
    std::string term = (coef.empty() ? "" : coef + "*") + word_text(*left_, k.first) + " (x) " +
                       word_text(*right_, k.second);
    if (first) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

std::string NCPoly::to_latex(const PowerBasis& pb) const { return render(*this, pb, true); }

// ---------------------------------------------------------------- RewriteSystem

int RewriteSystem::max_lead_length() const {
  int m = 0;
  for (const auto& r : rules_) m = std::max(m, static_cast<int>(r.lead.size()));
  return m;
}

void RewriteSystem::index_rule(std::size_t i) {
  by_lead_[rules_[i].lead] = i;
  std::size_t len = rules_[i].lead.size();
  if (std::find(lead_lengths_.begin(), lead_lengths_.end(), len) == lead_lengths_.end()) {
    lead_lengths_.push_back(len);
    std::sort(lead_lengths_.begin(), lead_lengths_.end());
  }
}

void RewriteSystem::add_rule(Word lead, NCPoly rhs) {
  if (lead.empty()) throw AlgebraError("rule with empty leading word (relation is a nonzero constant)");
  if (by_lead_.count(lead)) throw AlgebraError("duplicate leading word " + format_word(*alpha_, lead));
  rules_.push_back({std::move(lead), std::move(rhs)});
  index_rule(rules_.size() - 1);
  cache_.clear();
}

void RewriteSystem::add_relation(const NCPoly& p) {
  if (p.is_zero()) return;
  Word lead = p.leading_word();
  Scalar inv = p.leading_coeff().inverse();
  NCPoly rhs(alpha_);
  for (const auto& [w, c] : p.terms()) {
    if (w != lead) rhs.add_term(w, -(c * inv));
  }
  add_rule(std::move(lead), std::move(rhs));
}

void RewriteSystem::clear() {
  rules_.clear();
  by_lead_.clear();
  lead_lengths_.clear();
  cache_.clear();
}

std::vector<Rule> RewriteSystem::remove_if(const std::function<bool(const Rule&)>& pred) {
  std::vector<Rule> kept, dropped;
  for (auto& r : rules_) (pred(r) ? dropped : kept).push_back(std::move(r));
  clear();
  rules_ = std::move(kept);
  for (std::size_t i = 0; i < rules_.size(); ++i) index_rule(i);
  return dropped;
}

void RewriteSystem::set_rhs(std::size_t i, NCPoly rhs) {
  rules_.at(i).rhs = std::move(rhs);
  cache_.clear();
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_match(const Word& w, Strategy s) const {
  if (rules_.empty()) return std::nullopt;
  Word probe;
  auto try_at = [&](std::size_t pos) -> std::optional<std::pair<std::size_t, std::size_t>> {
    // shortest match first, which gives innermost for nested matches
    for (std::size_t len : lead_lengths_) {
      if (pos + len > w.size()) break;
      probe.assign(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + len));
      auto it = by_lead_.find(probe);
      if (it != by_lead_.end()) return std::make_pair(pos, it->second);
    }
    return std::nullopt;
  };
  if (s == Strategy::Leftmost) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (auto m = try_at(pos)) return m;
    }
  } else {
    for (std::size_t pos = w.size(); pos-- > 0;) {
      if (auto m = try_at(pos)) return m;
    }
  }
  return std::nullopt;
}

NCPoly RewriteSystem::normal_form_word(const Word& w, int degree_cap, Strategy s) const {
  if (s == Strategy::Leftmost) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  // Repeatedly rewrite the largest pending word; each rewrite strictly lowers it.
  std::map<Word, Scalar, DegLex> pending;
  pending.emplace(w, Scalar(1));
  NCPoly result(alpha_);
  while (!pending.empty()) {
    auto top = std::prev(pending.end());
    Word cur = top->first;
    Scalar c = top->second;
    pending.erase(top);
    if (c.is_zero()) continue;
    if (static_cast<int>(cur.size()) > degree_cap) {
      throw AlgebraError("degree cap " + std::to_string(degree_cap) + " exceeded while rewriting " +
                         format_word(*alpha_, cur));
    }
    auto m = find_match(cur, s);
    if (!m) {
      result.add_term(cur, c);
      continue;
    }
    const Rule& r = rules_[m->second];
    std::size_t pos = m->first;
    for (const auto& [rw, rc] : r.rhs.terms()) {
      Word nw(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos + r.lead.size()), cur.end());
      auto [it, inserted] = pending.try_emplace(std::move(nw), c * rc);
      if (!inserted) it->second += c * rc;
    }
  }
  if (s == Strategy::Leftmost) cache_.emplace(w, result);
  return result;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p, int degree_cap, Strategy s) const {
  NCPoly result(p.alphabet() ? p.alphabet() : alpha_);
  for (const auto& [w, c] : p.terms()) {
    if (is_normal(w)) {
      result.add_term(w, c);
      continue;
    }
    NCPoly n = normal_form_word(w, degree_cap, s);
    for (const auto& [nw, nc] : n.terms()) result.add_term(nw, c * nc);
  }
  return result;
}

// ---------------------------------------------------------------- parsing

NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alpha, const PowerBasis& pb,
                    const std::function<std::optional<NCPoly>(const Expr&)>& inverse) {
  ExprEvaluator<NCPoly> ev;
  ev.pb = pb;
  ev.symbol = [alpha](const Expr& e) {
    auto i = alpha->find(e.symbol_key());
    if (!i) throw ParseError("unknown generator '" + e.symbol_key() + "' for " + alpha->name());
    return NCPoly::letter(alpha, *i);
  };
  ev.from_scalar = [alpha](const Scalar& s) { return NCPoly::constant(alpha, s); };
  ev.inverse = inverse;
  auto e = parse_expr(text);
  return ev(*e);
}

}  // namespace qcalc
