// Lattice-side operations on families: duals, intersections, pullbacks,
// interval slices, meet/join closure, freeness of generator families, and
// monotone lattice terms in join-of-meets normal form.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pratt/core.hpp"

namespace pratt {

// { ¬w | w ∈ W }.
Family dual_family(const Family& w);

// Set intersection of two families over the same ground set.
Family intersect_families(const Family& v, const Family& w);

// Image family under a map f : A -> A' given as f[a] = image index.
// Result lives on target_ground and holds every w' with f^{-1}(w') ∈ W.
// Enumerates all 2^|A'| candidate words; guarded against large targets.
Family pullback_family(const std::vector<int>& f, const GroundSet& target_ground,
                       const Family& w);

struct IntervalSlice {
  GroundSet ground;           // re-indexed copy of v - u
  std::vector<int> elements;  // original index of each new element, ascending
  Family family;              // { (x - u) re-indexed | x ∈ W, u ≤ x ≤ v }
};

// The interval [u,v] of W viewed as a family on the ground set v - u.
// Requires u, v ∈ W and u ⊆ v.
IntervalSlice interval_family(const Family& w, const Word& u, const Word& v);

// Closure of S ∪ {∅, A} under pairwise meet and join.
// Worklist processes pairs involving newly added words only.
// max_size guards against blow-up (BudgetError).
Family lattice_close(const Family& s, std::size_t max_size = std::size_t{1} << 20);

struct FreenessResult {
  bool free = true;
  // On failure: disjoint index sets (J, K) into S with join(J) ⊇ meet(K).
  std::optional<std::pair<std::vector<int>, std::vector<int>>> violation;
};

// Exact freeness of a generator family: no join of one subfamily majorizes
// the meet of a disjoint subfamily. |S| ≤ 16, else BudgetError.
FreenessResult is_free_family(const Family& s);

// Weakened freeness relative to a partition of S's indices into blocks:
// only relations whose meet side has all but at most one member inside a
// single block count as violations.
FreenessResult partitioned_freeness(const Family& s,
                                    const std::vector<std::vector<int>>& blocks);

// Expression tree over variables v0..v(arity-1), constants, meet, join.
struct TermExpr {
  enum class Kind { var, constant, meet, join };

  Kind kind = Kind::constant;
  int var = -1;
  int value = 0;
  std::shared_ptr<TermExpr> lhs, rhs;

  static TermExpr v(int index);
  static TermExpr c(int bit);
  static TermExpr meet(TermExpr a, TermExpr b);
  static TermExpr join(TermExpr a, TermExpr b);
};

// A monotone function of `arity` boolean arguments in normal form: either a
// constant, or a canonical antichain of minimal clauses (each clause is a
// nonempty variable mask; the function is the join of the clause meets).
// Two expressions denote the same monotone function iff normal forms match.
struct MonotoneTerm {
  int arity = 0;
  std::optional<int> constant;         // 0 or 1 when the function is constant
  std::vector<std::uint32_t> clauses;  // sorted minimal clauses, bit i = variable i

  bool evaluate(std::uint32_t assignment) const;
  bool depends_on_all_arguments() const;

  bool operator==(const MonotoneTerm& o) const = default;
};

// Normal form of an expression tree; arity ≤ 20.
MonotoneTerm term_normalize(const TermExpr& expr, int arity);

// Lexicographically least prefix (c_0,...,c_{i-1}) such that the term is 0
// when the remaining arguments are all 0 and 1 when they are all 1.
// Requires the term to depend on every argument; exhaustive over 2^i prefixes.
std::vector<int> pinning_assignment(const MonotoneTerm& term, int prefix_len);

}  // namespace pratt
