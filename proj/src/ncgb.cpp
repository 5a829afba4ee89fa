#include "qcalc/ncgb.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace qcalc {

namespace {

// Inserts p into rs, keeping the system interreduced. Rules whose leading
// word contains the new leading word are pulled out and reinserted.
void insert_relation(RewriteSystem& rs, NCPoly p, int cap) {
  std::deque<NCPoly> queue{std::move(p)};
  while (!queue.empty()) {
    NCPoly cur = rs.normal_form(queue.front(), cap);
    queue.pop_front();
    if (cur.is_zero()) continue;
    const Word lead = cur.leading_word();
    auto contains = [&lead](const Rule& r) {
      return std::search(r.lead.begin(), r.lead.end(), lead.begin(), lead.end()) != r.lead.end();
    };
    for (auto& r : rs.remove_if(contains)) {
      NCPoly back = r.rhs;
      back -= NCPoly::monomial(rs.alphabet(), r.lead);
      queue.push_back(std::move(back));
    }
    rs.add_relation(cur);
  }
}

void reduce_right_sides(RewriteSystem& rs, int cap) {
  for (std::size_t i = 0; i < rs.size(); ++i) {
    NCPoly r = rs.normal_form(rs.rules()[i].rhs, cap);
    if (!(r == rs.rules()[i].rhs)) rs.set_rhs(i, std::move(r));
  }
}

void check_budget(const RewriteSystem& rs, int budget) {
  for (const auto& r : rs.rules()) {
    for (const auto& [w, c] : r.rhs.terms()) {
      if (c.numerator().degree() > budget || c.denominator().degree() > budget) {
        throw ResourceError("coefficient size budget " + std::to_string(budget) + " exceeded in rule for " +
                            format_word(*rs.alphabet(), r.lead));
      }
    }
  }
}

struct Overlap {
  Word word;
  Word lead_a;
  Word lead_b;
  std::size_t shift;  // lead_b starts at this offset inside word

  bool operator<(const Overlap& o) const {
    int c = deglex_compare(word, o.word);
    if (c != 0) return c < 0;
    return std::tie(lead_a, lead_b, shift) < std::tie(o.lead_a, o.lead_b, o.shift);
  }
};

std::vector<Overlap> overlaps_of(const RewriteSystem& rs, int degree_bound) {
  std::vector<Overlap> out;
  for (const auto& a : rs.rules()) {
    for (const auto& b : rs.rules()) {
      const Word& A = a.lead;
      const Word& B = b.lead;
      // proper overlaps: a nonempty suffix of A equals a proper prefix of B
      for (std::size_t k = 1; k < A.size() && k < B.size(); ++k) {
        if (!std::equal(A.end() - static_cast<std::ptrdiff_t>(k), A.end(), B.begin())) continue;
        std::size_t len = A.size() + B.size() - k;
        if (static_cast<int>(len) > degree_bound) continue;
        Word w = A;
        w.insert(w.end(), B.begin() + static_cast<std::ptrdiff_t>(k), B.end());
        out.push_back({std::move(w), A, B, A.size() - k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Rule* rule_for(const RewriteSystem& rs, const Word& lead) {
  for (const auto& r : rs.rules()) {
    if (r.lead == lead) return &r;
  }
  return nullptr;
}

NCPoly s_polynomial(const RewriteSystem& rs, const Overlap& o, const Rule& a, const Rule& b, int cap) {
  const AlphabetPtr& alpha = rs.alphabet();
  Word tail(o.word.begin() + static_cast<std::ptrdiff_t>(a.lead.size()), o.word.end());
  Word head(o.word.begin(), o.word.begin() + static_cast<std::ptrdiff_t>(o.shift));
  NCPoly left = a.rhs * NCPoly::monomial(alpha, tail);
  NCPoly right = NCPoly::monomial(alpha, head) * b.rhs;
  return rs.normal_form(left, cap) - rs.normal_form(right, cap);
}

}  // namespace

RewriteSystem interreduce(const std::vector<NCPoly>& relations, const AlphabetPtr& alpha) {
  std::vector<NCPoly> sorted = relations;
  std::sort(sorted.begin(), sorted.end(), [](const NCPoly& x, const NCPoly& y) {
    if (x.is_zero() || y.is_zero()) return !x.is_zero() && y.is_zero();
    return deglex_compare(x.leading_word(), y.leading_word()) < 0;
  });
  RewriteSystem rs(alpha);
  int cap = 0;
  for (const auto& p : sorted) cap = std::max(cap, p.degree());
  cap = std::max(cap * 4, 16);
  for (const auto& p : sorted) insert_relation(rs, p, cap);
  reduce_right_sides(rs, cap);
  return rs;
}

GroebnerReport check_overlaps(const RewriteSystem& rs, int degree_bound, bool stop_at_first) {
  GroebnerReport rep;
  int cap = std::max(degree_bound, rs.max_lead_length()) + 4;
  for (const auto& o : overlaps_of(rs, degree_bound)) {
    const Rule* a = rule_for(rs, o.lead_a);
    const Rule* b = rule_for(rs, o.lead_b);
    ++rep.overlaps_checked;
    NCPoly s = s_polynomial(rs, o, *a, *b, cap);
    if (!s.is_zero()) {
      rep.ok = false;
      rep.failures.push_back({o.lead_a, o.lead_b, o.word, s});
      if (stop_at_first) break;
    }
  }
  return rep;
}

GroebnerReport is_groebner(const std::vector<NCPoly>& relations, const AlphabetPtr& alpha, int degree_bound) {
  RewriteSystem rs = interreduce(relations, alpha);
  GroebnerReport rep = check_overlaps(rs, degree_bound);
  int cap = std::max(degree_bound, rs.max_lead_length()) + 4;
  for (const auto& p : relations) {
    if (!rs.normal_form(p, cap).is_zero()) {
      rep.ok = false;
      rep.unreduced_inputs.push_back(p);
    }
  }
  return rep;
}

RewriteSystem complete(const std::vector<NCPoly>& relations, const AlphabetPtr& alpha, int degree_bound,
                       CompletionStats* stats, int coefficient_budget) {
  RewriteSystem rs = interreduce(relations, alpha);
  int cap = std::max(degree_bound, rs.max_lead_length()) + 4;
  std::size_t added = 0, checked = 0;
  std::set<std::tuple<Word, Word, std::size_t>> done;
  for (;;) {
    bool changed = false;
    for (const auto& o : overlaps_of(rs, degree_bound)) {
      auto key = std::make_tuple(o.lead_a, o.lead_b, o.shift);
      if (done.count(key)) continue;
      const Rule* a = rule_for(rs, o.lead_a);
      const Rule* b = rule_for(rs, o.lead_b);
      if (!a || !b) continue;  // removed by an earlier insertion in this pass
      ++checked;
      NCPoly s = s_polynomial(rs, o, *a, *b, cap);
      done.insert(key);
      if (s.is_zero()) continue;
      insert_relation(rs, s, cap);
      reduce_right_sides(rs, cap);
      check_budget(rs, coefficient_budget);
      ++added;
      changed = true;
    }
    if (changed) continue;
    // final sweep without memo: rules may have changed under earlier checks
    GroebnerReport rep = check_overlaps(rs, degree_bound, true);
    checked += rep.overlaps_checked;
    if (rep.ok) break;
    done.clear();
  }
  if (stats) {
    stats->input_relations = relations.size();
    stats->rules = rs.size();
    stats->rules_added = added;
    stats->overlaps_checked = checked;
    stats->max_degree = rs.max_lead_length();
  }
  return rs;
}

std::vector<std::uint64_t> graded_dims(const RewriteSystem& rs, int n_max) {
  std::set<std::size_t> lengths;
  std::set<Word> leads;
  for (const auto& r : rs.rules()) {
    lengths.insert(r.lead.size());
    leads.insert(r.lead);
  }
  std::size_t keep = lengths.empty() ? 0 : *lengths.rbegin() - 1;
  int g = static_cast<int>(rs.alphabet()->size());
  std::vector<std::uint64_t> dims;
  std::map<Word, std::uint64_t> states{{Word{}, 1}};
  dims.push_back(1);
  for (int n = 1; n <= n_max; ++n) {
    std::map<Word, std::uint64_t> next;
    for (const auto& [suffix, count] : states) {
      for (int x = 0; x < g; ++x) {
        Word w = suffix;
        w.push_back(x);
        bool bad = false;
        for (std::size_t len : lengths) {
          if (len > w.size()) break;
          if (leads.count(Word(w.end() - static_cast<std::ptrdiff_t>(len), w.end()))) {
            bad = true;
            break;
          }
        }
        if (bad) continue;
        if (w.size() > keep) w.erase(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() - keep));
        next[w] += count;
      }
    }
    states = std::move(next);
    std::uint64_t total = 0;
    for (const auto& [s, c] : states) total += c;
    dims.push_back(total);
  }
  return dims;
}

std::vector<Word> normal_words(const RewriteSystem& rs, int n) {
  std::vector<Word> layer{Word{}};
  int g = static_cast<int>(rs.alphabet()->size());
  for (int d = 0; d < n; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (int x = 0; x < g; ++x) {
        Word e = w;
        e.push_back(x);
        if (rs.is_normal(e)) next.push_back(std::move(e));
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace qcalc
