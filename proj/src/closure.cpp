#include "pratt/closure.hpp"

#include <algorithm>
#include <unordered_set>

namespace pratt {

ComonoidCheck is_comonoid(const Family& w, Budget& budget) {
  const int n = w.ground_size();
  if (n > 24)
    throw BudgetError("closure check scans 2^n candidate diagonals; n = " +
                      std::to_string(n) + " is past the desk-scale guard of 24");

  ComonoidCheck out;
  if (!w.contains(Word::empty(n))) {
    out.status = ComonoidStatus::missing_bounds;
    out.missing = Word::empty(n);
    return out;
  }
  if (!w.contains(Word::full(n))) {
    out.status = ComonoidStatus::missing_bounds;
    out.missing = Word::full(n);
    return out;
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    Word z(n);
    for (int a = 0; a < n; ++a)
      if ((v >> a) & 1) z.set(a);
    if (w.contains(z)) continue;
    SolveResult r = solve_diagonal(w, z, budget);
    out.nodes = budget.used();
    if (r.status == SolveStatus::found) {
      out.status = ComonoidStatus::counterexample;
      out.witness = std::move(r.crossword);
      return out;
    }
    if (r.status == SolveStatus::budget_exceeded) {
      out.status = ComonoidStatus::budget_exceeded;
      return out;
    }
  }
  out.status = ComonoidStatus::ok;
  return out;
}

ComonoidCheck is_comonoid(const Family& w) {
  Budget budget;
  return is_comonoid(w, budget);
}

namespace {

// Meet/join saturation that traces which rule produced each new word.
Family accelerate(const Family& start, std::vector<CloseTraceEntry>& trace,
                  const std::unordered_set<Word, WordHash>& already) {
  std::vector<Word> members(start.begin(), start.end());
  std::unordered_set<Word, WordHash> seen(members.begin(), members.end());
  std::vector<std::size_t> work(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) work[i] = i;

  auto add = [&](Word w, CloseRule rule) {
    if (seen.insert(w).second) {
      if (!already.count(w)) trace.push_back({w, rule});
      members.push_back(w);
      work.push_back(members.size() - 1);
    }
  };

  for (std::size_t next = 0; next < work.size(); ++next) {
    std::size_t i = work[next];
    for (std::size_t j = 0; j < members.size(); ++j) {
      add(members[i] & members[j], CloseRule::meet);
      add(members[i] | members[j], CloseRule::join);
    }
  }
  return Family::canonicalize(start.ground(), std::move(members));
}

}  // namespace

CloseResult close(const Family& s, Budget& budget) {
  const int n = s.ground_size();
  CloseResult out;
  std::unordered_set<Word, WordHash> traced;
  auto record = [&](const Word& w, CloseRule rule) {
    if (traced.insert(w).second) out.trace.push_back({w, rule});
  };

  std::vector<Word> seeded(s.begin(), s.end());
  for (const auto& w : s) record(w, CloseRule::seed);
  for (Word bound : {Word::empty(n), Word::full(n)}) {
    if (!s.contains(bound)) {
      seeded.push_back(bound);
      record(bound, CloseRule::bounds);
    }
  }
  Family current = Family::canonicalize(s.ground(), std::move(seeded));

  while (true) {
    std::vector<CloseTraceEntry> lattice_trace;
    Family saturated = accelerate(current, lattice_trace, traced);
    for (auto& entry : lattice_trace) record(entry.word, entry.rule);

    DiagonalStepResult sweep = diagonal_step(saturated, budget);
    out.nodes = budget.used();
    std::vector<Word> grown(saturated.begin(), saturated.end());
    bool added = false;
    for (const auto& z : sweep.diagonals)
      if (!saturated.contains(z)) {
        grown.push_back(z);
        record(z, CloseRule::diag);
        added = true;
      }

    if (!sweep.complete) {
      out.family = Family::canonicalize(s.ground(), std::move(grown));
      out.certified = false;
      return out;
    }
    if (!added) {
      // Complete sweep over a meet/join-saturated family added nothing:
      // that is exactly the closure certificate.
      out.family = std::move(saturated);
      out.certified = true;
      return out;
    }
    current = Family::canonicalize(s.ground(), std::move(grown));
  }
}

CloseResult close(const Family& s) {
  Budget budget;
  return close(s, budget);
}

}  // namespace pratt
