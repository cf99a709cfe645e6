#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "klnet/hecke.hpp"
#include "klnet/perm.hpp"

namespace klnet {

struct IntervalSequence {
  int n = 0;
  std::vector<Interval> intervals;
  bool operator==(const IntervalSequence&) const = default;
};

// All I_{i,j} overlap sets, keyed by the pair (i,j), i < j. Sets can be empty
// or non-contiguous.
std::map<std::pair<int, int>, std::set<int>> overlap_intervals(const IntervalSequence& seq);

// f_A(q): product over pairs of the q-factorials of the overlap sizes.
QPoly overlap_poly(const IntervalSequence& seq);

// True iff the modified KL element of w times f_A equals the product of the
// reversal KL elements of A, exactly.
bool verify(const Permutation& w, const IntervalSequence& seq);

enum class SearchStatus { kFound, kNotFoundWithinBound, kProvedImpossible };

struct FactorizationResult {
  SearchStatus status = SearchStatus::kNotFoundWithinBound;
  std::optional<IntervalSequence> sequence;  // Found only; verified
  QPoly overlap;                             // Found only: f_A
  int bound = 0;
  int gap = 0;  // ProvedImpossible certificate
  std::uint64_t searched = 0;
};

struct SearchOptions {
  bool use_impossibility_proof = true;  // return ProvedImpossible without searching
  bool use_reduced_word_witness = true;
  bool assume_conjecture = false;  // skip searching 45312-containing inputs
};

// Depth-first search over interval sequences of length <= max_factors, pruned
// by descent and Demazure-support conditions; Found always carries a verified
// sequence.
FactorizationResult search(const Permutation& w, int max_factors, const SearchOptions& opts = {});
int default_max_factors(const Permutation& w);

enum class Classification {
  kFactorableByBW,
  kFactorableBySmooth,
  kProvedUnfactorable,
  kConjecturedUnfactorable,
  kUnknown,
};

struct ClassifyResult {
  Classification kind = Classification::kUnknown;
  int gap = 0;  // ProvedUnfactorable only
  bool operator==(const ClassifyResult&) const = default;
};

ClassifyResult classify(const Permutation& w);
std::string to_string(Classification c);

// Least positive degree with nonzero coefficient in P_{e,w}; nullopt for
// infinity (P_{e,w} = 1). Pattern route.
std::optional<int> singdeg(const Permutation& w);
// Same value computed directly from the KL oracle.
std::optional<int> singdeg_brute(const Permutation& w);

// Transports a factorization along the network symmetries: h-reflect maps each
// [a,b] to [n+1-b,n+1-a] in place, v-reflect reverses the sequence, rotate
// does both. Preserves f_A and verification for symmetry(w, which).
IntervalSequence transfer(const IntervalSequence& seq, Symmetry which);

struct VerifyFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requires verify(w, seq); true iff every P_{v,w} for v < w has strictly
// positive coefficients up to its own degree.
bool internal_coefficients_check(const Permutation& w, const IntervalSequence& seq);

// Built-in catalog of the S_5 factorizations that neither the reduced-word nor
// the smoothness route covers, with prefactors and symmetry-related images.
struct CatalogRow {
  Permutation w;
  IntervalSequence sequence;
  QPoly prefactor;
  std::vector<Permutation> related;  // w0 w w0, w^{-1}, w0 w^{-1} w0, deduplicated
};
const std::vector<CatalogRow>& s5_catalog();

// "1-2,2-4,1-2"
std::vector<Interval> parse_interval_list(std::string_view text);
std::string interval_list_string(const std::vector<Interval>& intervals);

}  // namespace klnet
