// Deciding the crossword-diagonal closure condition and closing a seed
// family up to it: a family W is closed when ∅ and A belong to W and the
// diagonal of every crossword whose rows and columns all lie in W is again
// a member of W.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pratt/core.hpp"
#include "pratt/crossword.hpp"

namespace pratt {

enum class ComonoidStatus { ok, missing_bounds, counterexample, budget_exceeded };

struct ComonoidCheck {
  ComonoidStatus status = ComonoidStatus::ok;
  std::optional<Word> missing;         // ∅ or A absent from the family
  std::optional<Crossword> witness;    // crossword whose diagonal is outside W
  std::uint64_t nodes = 0;

  bool ok() const { return status == ComonoidStatus::ok; }
};

// Exhaustive check: scans candidate diagonals outside W in canonical order
// and searches for a realizing crossword; the first hit is the witness.
ComonoidCheck is_comonoid(const Family& w, Budget& budget);
ComonoidCheck is_comonoid(const Family& w);

enum class CloseRule { seed, bounds, meet, join, diag };

struct CloseTraceEntry {
  Word word;
  CloseRule rule;
};

struct CloseResult {
  Family family;
  bool certified = false;  // final state passed a full, complete sweep
  std::vector<CloseTraceEntry> trace;
  std::uint64_t nodes = 0;
};

// Least closed family containing S: alternates the pairwise meet/join
// accelerator with full diagonal sweeps until a sweep adds nothing.
// (On a finite ground set, unions of disjoint subfamilies are finite joins,
// so the join rule subsumes them.) Uncertified partial state is returned
// when the node budget runs out.
CloseResult close(const Family& s, Budget& budget);
CloseResult close(const Family& s);

}  // namespace pratt
