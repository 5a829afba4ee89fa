#pragma once

#include "qcalc/freealg.hpp"

#include <cstdint>
#include <vector>

namespace qcalc {

class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Obstruction {
  Word lead_a;
  Word lead_b;
  Word overlap;
  NCPoly witness;  // nonzero normal form of the S-polynomial, if it failed
};

struct CompletionStats {
  std::size_t input_relations = 0;
  std::size_t rules = 0;
  std::size_t rules_added = 0;
  std::size_t overlaps_checked = 0;
  int max_degree = 0;
};

struct GroebnerReport {
  bool ok = true;
  std::size_t overlaps_checked = 0;
  std::vector<Obstruction> failures;
  std::vector<NCPoly> unreduced_inputs;
};

// Builds an interreduced rewrite system spanning the same ideal generators
// without adding overlap consequences.
RewriteSystem interreduce(const std::vector<NCPoly>& relations, const AlphabetPtr& alpha);

// Degree-truncated completion. Every overlap word of length <= degree_bound
// resolves in the result. `coefficient_budget` caps the v-degree of any
// coefficient (numerator or denominator).
RewriteSystem complete(const std::vector<NCPoly>& relations, const AlphabetPtr& alpha, int degree_bound,
                       CompletionStats* stats = nullptr, int coefficient_budget = 4000);

// Checks all overlaps of length <= degree_bound of an existing system.
GroebnerReport check_overlaps(const RewriteSystem& rs, int degree_bound, bool stop_at_first = false);
// Interreduces the relations (no completion) and checks them.
GroebnerReport is_groebner(const std::vector<NCPoly>& relations, const AlphabetPtr& alpha, int degree_bound);

// d_n = number of words of length n avoiding every leading word.
std::vector<std::uint64_t> graded_dims(const RewriteSystem& rs, int n_max);

// PBW-style normal words of length exactly n (for spanning checks).
std::vector<Word> normal_words(const RewriteSystem& rs, int n);

}  // namespace qcalc
