#include "pratt/crossword.hpp"

#include <algorithm>
#include <functional>

namespace pratt {

ValidationReport validate(const Crossword& c, const Family& w) {
  if (c.ground_size() != w.ground_size())
    throw Error("crossword and family are over different ground sets");
  ValidationReport rep;
  for (int a = 0; a < c.ground_size(); ++a)
    if (!w.contains(c.row(a))) {
      rep.rows_ok = false;
      rep.first_bad_row = a;
      break;
    }
  for (int a = 0; a < c.ground_size(); ++a)
    if (!w.contains(c.col(a))) {
      rep.cols_ok = false;
      rep.first_bad_col = a;
      break;
    }
  rep.diag_in_family = w.contains(c.diagonal());
  return rep;
}

Crossword binary_witness(const Word& x, const Word& y, WitnessKind kind) {
  if (x.ground_size() != y.ground_size())
    throw Error("witness words are over different ground sets");
  const int n = x.ground_size();
  Crossword c(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool cell = kind == WitnessKind::meet ? x.test(a) && y.test(b)
                                            : x.test(a) || y.test(b);
      if (cell) c.set(a, b);
    }
  return c;
}

NearDisjointWitness near_disjoint_witness(const std::vector<Word>& xs) {
  if (xs.empty()) throw Error("near-disjoint witness needs at least one word");
  const int n = xs.front().ground_size();
  NearDisjointWitness out;
  out.crossword = Crossword(n);
  out.multiplicity.assign(static_cast<std::size_t>(n), 0);
  for (const auto& x : xs) {
    if (x.ground_size() != n) throw Error("near-disjoint words over different ground sets");
    out.crossword = out.crossword | product(x, x);
    x.for_each([&](int a) { ++out.multiplicity[static_cast<std::size_t>(a)]; });
  }
  for (int m : out.multiplicity) out.max_multiplicity = std::max(out.max_multiplicity, m);
  return out;
}

DiagonalDecomposition decompose_diagonal(const Crossword& c) {
  const int n = c.ground_size();
  DiagonalDecomposition out;
  out.diag = c.diagonal();
  out.diag.for_each([&](int a) {
    Word part = Word::full(n);
    for (int r = 0; r < n; ++r)
      if (c.at(r, a)) part = part & c.row(r);
    for (int col = 0; col < n; ++col)
      if (c.at(a, col)) part = part & c.col(col);
    out.parts.emplace(a, std::move(part));
  });

  Word rejoin(n);
  for (const auto& [a, part] : out.parts) {
    internal_check(part.test(a), "diagonal part must contain its own element");
    rejoin = rejoin | part;
  }
  internal_check(rejoin == out.diag, "diagonal parts must rejoin to the diagonal");
  return out;
}

SolveResult solve_diagonal(const Family& w, const Word& z, Budget& budget) {
  const int n = w.ground_size();
  if (z.ground_size() != n)
    throw Error("target diagonal is over a different ground set than the family");

  SolveResult res;
  if (n == 0) {
    res.status = SolveStatus::found;
    res.crossword = Crossword(0);
    return res;
  }

  // bit_mask[2a+v]: which family indices have bit v at position a, packed
  // 64 indices per block.
  const std::size_t wc = w.size();
  const std::size_t wb = (wc + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bit_mask(
      static_cast<std::size_t>(n) * 2, std::vector<std::uint64_t>(wb, 0));
  for (std::size_t i = 0; i < wc; ++i)
    for (int a = 0; a < n; ++a) {
      std::size_t which = static_cast<std::size_t>(a) * 2 + (w[i].test(a) ? 1 : 0);
      bit_mask[which][i / 64] |= std::uint64_t{1} << (i % 64);
    }

  // Row a may only be a word whose own a-th bit matches the target diagonal.
  std::vector<std::vector<int>> row_candidates(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (std::size_t i = 0; i < wc; ++i)
      if (w[i].test(a) == z.test(a))
        row_candidates[static_cast<std::size_t>(a)].push_back(static_cast<int>(i));

  // cand[b] = family indices still agreeing with column b's filled prefix.
  // Once all n rows are placed, a nonempty cand[b] means column b is itself
  // a family word (it agrees with some word on every position).
  std::vector<std::vector<std::uint64_t>> cand(
      static_cast<std::size_t>(n), std::vector<std::uint64_t>(wb, ~std::uint64_t{0}));
  if (wc % 64 != 0)
    for (auto& c : cand) c.back() &= (std::uint64_t{1} << (wc % 64)) - 1;

  std::vector<Word> rows;
  rows.reserve(static_cast<std::size_t>(n));
  bool exhausted_budget = false;

  std::function<bool(int, const std::vector<std::vector<std::uint64_t>>&)> dive =
      [&](int a, const std::vector<std::vector<std::uint64_t>>& columns) -> bool {
    if (a == n) return true;
    for (int idx : row_candidates[static_cast<std::size_t>(a)]) {
      if (!budget.tick()) {
        exhausted_budget = true;
        return false;
      }
      const Word& r = w[static_cast<std::size_t>(idx)];
      auto next = columns;
      bool dead = false;
      for (int b = 0; b < n && !dead; ++b) {
        // Placing row a fixes bit a of every column: column b's bit a is r(b).
        auto& cb = next[static_cast<std::size_t>(b)];
        const auto& mask = bit_mask[static_cast<std::size_t>(a) * 2 + (r.test(b) ? 1 : 0)];
        bool nonempty = false;
        for (std::size_t k = 0; k < wb; ++k) {
          cb[k] &= mask[k];
          nonempty = nonempty || cb[k] != 0;
        }
        dead = !nonempty;
      }
      if (dead) continue;
      rows.push_back(r);
      if (dive(a + 1, next)) return true;
      rows.pop_back();
      if (exhausted_budget) return false;
    }
    return false;
  };

  bool found = dive(0, cand);
  res.nodes = budget.used();
  if (found) {
    res.status = SolveStatus::found;
    res.crossword = Crossword::from_rows(rows);
    ValidationReport rep = validate(*res.crossword, w);
    internal_check(rep.rows_ok && rep.cols_ok, "solver result must validate over the family");
    internal_check(res.crossword->diagonal() == z, "solver diagonal must match the target");
  } else if (exhausted_budget) {
    res.status = SolveStatus::budget_exceeded;
  } else {
    res.status = SolveStatus::unsat;
  }
  return res;
}

SolveResult solve_diagonal(const Family& w, const Word& z) {
  Budget budget;
  return solve_diagonal(w, z, budget);
}

DiagonalStepResult diagonal_step(const Family& w, Budget& budget) {
  const int n = w.ground_size();
  if (n > 24)
    throw BudgetError("diagonal sweep scans 2^n candidate diagonals; n = " +
                      std::to_string(n) + " is past the desk-scale guard of 24");
  DiagonalStepResult out;
  std::vector<Word> found;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    Word z(n);
    for (int a = 0; a < n; ++a)
      if ((v >> a) & 1) z.set(a);
    SolveResult r = solve_diagonal(w, z, budget);
    if (r.status == SolveStatus::found)
      found.push_back(z);
    else if (r.status == SolveStatus::budget_exceeded) {
      out.complete = false;
      break;
    }
  }
  out.diagonals = Family::canonicalize(w.ground(), std::move(found));
  out.nodes = budget.used();
  return out;
}

DiagonalStepResult diagonal_step(const Family& w) {
  Budget budget;
  return diagonal_step(w, budget);
}

DiversityReport diversity_check(const Crossword& c) {
  DiversityReport rep;
  auto distinct = [](std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return static_cast<int>(ws.size());
  };
  rep.distinct_rows = distinct(c.rows());
  rep.distinct_cols = distinct(c.columns());
  auto within = [](int a, int b) {
    // a ≤ 2^b without overflow.
    return b >= 63 || static_cast<std::uint64_t>(a) <= (std::uint64_t{1} << b);
  };
  rep.bounds_ok = within(rep.distinct_cols, rep.distinct_rows) &&
                  within(rep.distinct_rows, rep.distinct_cols);
  return rep;
}

}  // namespace pratt
