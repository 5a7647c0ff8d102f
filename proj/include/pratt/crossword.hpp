// Crossword-level checks and searches: validation against a family,
// witness constructions whose diagonals realize meets/joins/unions, diagonal
// decomposition into meets of incident slices, and the exact backtracking
// search for a crossword with a prescribed diagonal.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pratt/core.hpp"

namespace pratt {

struct ValidationReport {
  bool rows_ok = true;
  bool cols_ok = true;
  bool diag_in_family = true;
  std::optional<int> first_bad_row;
  std::optional<int> first_bad_col;

  bool fully_valid() const { return rows_ok && cols_ok && diag_in_family; }
};

// Checks every row, column, and the diagonal for membership in w.
ValidationReport validate(const Crossword& c, const Family& w);

enum class WitnessKind { meet, join };

// The two-word witness: for meet, cell (a,b) = x(a) ∧ y(b), so rows are ∅ or
// y, columns are ∅ or x, and the diagonal is x ∧ y. For join, cell (a,b) =
// x(a) ∨ y(b) with diagonal x ∨ y.
Crossword binary_witness(const Word& x, const Word& y, WitnessKind kind);

struct NearDisjointWitness {
  Crossword crossword;  // ⋁ x_i × x_i
  // How many of the x_i contain each ground element; rows/columns of the
  // witness are unions of the x_i through the indexed element.
  std::vector<int> multiplicity;
  int max_multiplicity = 0;
};

// Union of the squares x_i × x_i; diagonal is ⋁ x_i.
NearDisjointWitness near_disjoint_witness(const std::vector<Word>& xs);

struct DiagonalDecomposition {
  Word diag;
  // For each a on the diagonal, the meet of all rows and columns of C that
  // contain a. The diagonal is the join of these parts.
  std::map<int, Word> parts;
};

DiagonalDecomposition decompose_diagonal(const Crossword& c);

enum class SolveStatus { found, unsat, budget_exceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::unsat;
  std::optional<Crossword> crossword;  // canonically first solution
  std::uint64_t nodes = 0;             // search-tree nodes visited
};

// Exact search for a crossword with all rows and columns in w and diagonal
// exactly z. Rows are assigned top-down from w's canonical order, restricted
// to words whose own diagonal bit matches z; per-column candidate sets over
// w prune the search. Unsat is only reported after exhaustive search.
SolveResult solve_diagonal(const Family& w, const Word& z, Budget& budget);
SolveResult solve_diagonal(const Family& w, const Word& z);

struct DiagonalStepResult {
  Family diagonals;      // every diagonal realizable over w found so far
  bool complete = true;  // false when the budget ran out mid-sweep
  std::uint64_t nodes = 0;
};

// All diagonals realizable by crosswords over w, via one solve per candidate
// diagonal in canonical order.
DiagonalStepResult diagonal_step(const Family& w, Budget& budget);
DiagonalStepResult diagonal_step(const Family& w);

struct DiversityReport {
  int distinct_rows = 0;
  int distinct_cols = 0;
  // Each count is at most 2^(the other); always true for valid inputs.
  bool bounds_ok = true;
};

DiversityReport diversity_check(const Crossword& c);

}  // namespace pratt
