// Structural analysis of families: separation properties, construction of
// words with prescribed traces, indecomposable decompositions, chain limits,
// the antichain-of-intervals witness recursion, and the staircase crossword
// built from a pair of chains.

#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "pratt/core.hpp"
#include "pratt/crossword.hpp"

namespace pratt {

struct Classification {
  // T1: each ordered pair a ≠ b is separated by a word containing a, not b.
  bool t1 = true;
  std::optional<std::pair<int, int>> t1_failure;  // first unseparated pair
  bool discrete = false;                          // W is the full power set
  bool complement_closed = false;                 // W equals its dual
};

Classification classify(const Family& w);

struct SeparatingWord {
  Word word;  // meets A0 in exactly y
  // Per ordered pair (a,b) used, the canonically least separator chosen.
  std::vector<std::tuple<int, int, Word>> derivation;
};

// Builds ⋁_{a∈y} ⋀_{b∈A0-{a}} x_{a,b} from canonically least separators
// x_{a,b} ∈ W (a ∈ x, b ∉ x). Requires y ⊆ A0 and separators for every pair
// drawn from A0. The result lies in the meet/join closure of W.
SeparatingWord separating_word(const Family& w, const Word& a0, const Word& y);

// Builds a crossword over the meet/join closure of W whose diagonal is z,
// by extending candidate row and column prefixes one index at a time and
// realizing each prefix with a separating word. Requires W to be T1.
Crossword back_and_forth(const Family& w, const Word& z);

struct IndecomposableReport {
  Word base;
  // Members of W strictly above base with no two disjoint-over-base nonzero
  // strict minorants inside W.
  std::vector<Word> indecomposables;
  // Equivalence classes under "meets above base"; the relation is checked
  // to be transitive on the indecomposables.
  std::vector<std::vector<Word>> classes;
};

// Requires base ∈ W and the interval {y ∈ W : y ⊇ base} to be meet-closed
// (that interval is the ∧-semilattice the notion lives in; without closure
// the overlap relation need not be transitive). "Disjoint" means the meet
// equals base.
IndecomposableReport strongly_indecomposable(const Family& w, const Word& base);

struct DominatedClass {
  std::vector<Word> members;
  Word meet;  // ⋀ of the class
};

struct DominationReport {
  int element = 0;
  IndecomposableReport decomposition;  // over base ∅
  // Classes E such that every W-word containing the element majorizes some
  // member of E.
  std::vector<DominatedClass> dominated;
  // When W is T1 each dominated class has meet ∅ or {element}; checked then.
  bool dichotomy_checked = false;
};

DominationReport dominated_classes(int element, const Family& w);

enum class ChainUnionRoute { disjoint, dual };

struct ChainUnionResult {
  Word result;  // ⋁_n x_n ∧ y_n
  ChainUnionRoute route = ChainUnionRoute::disjoint;
  // Disjoint route: squares of the meets; diagonal equals result.
  // Dual route: squares of ¬x_n ∧ ¬y'_n for the shifted ys (∅ prepended,
  // last dropped); diagonal equals the complement of result.
  Crossword witness;
  int witness_max_multiplicity = 0;
};

// ⋁ x_n∧y_n for a descending xs and ascending ys of equal length. Requires
// last(xs) = ∅ or last(ys) = A (finite stand-ins for the chain limits).
ChainUnionResult chain_union(const std::vector<Word>& xs, const std::vector<Word>& ys);

struct ContinuumWitness {
  std::vector<int> m;  // strictly increasing picks into xs
  std::vector<int> n;  // strictly increasing picks into ys
  Word z;              // ⋁_i x_{m(i)} ∧ y_{n(i)}
  std::vector<Word> zi;  // z ∨ (x_{m(i)} ∧ y_{n(i+1)}); each > z, pairwise meets = z
};

// Greedy antichain-of-intervals recursion over a descending xs (ending in
// the ∅ stand-in) and ascending ys. Hypothesis: no y_n contains
// x_m ∧ ⋁ys for non-degenerate indices (x_m ≠ ∅, y_n ≠ ⋁ys); the first
// violating (m,n) in lexicographic order is reported as an error otherwise.
ContinuumWitness continuum_witness(const std::vector<Word>& xs,
                                   const std::vector<Word>& ys);

struct InfiniteCrossword {
  Crossword crossword;  // ⋁_n x_n × y_n
  // Every row is the largest y whose partner x contains the index (or ∅);
  // every column is the x paired with the first y containing the index.
  std::vector<Word> distinct_rows;
  std::vector<Word> distinct_cols;
};

// Staircase crossword from strictly monotone chains of equal length with
// last(xs) = ∅ and last(ys) = A. Asserts all rows and columns lie among the
// chain members.
InfiniteCrossword infinite_crossword(const std::vector<Word>& xs,
                                     const std::vector<Word>& ys);

}  // namespace pratt
