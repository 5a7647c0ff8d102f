// Standalone verification harness: twelve end-to-end checks covering the
// headline guarantees of the library, one pass/fail line each. Exits 0 only
// when every check passes. Expected values are pinned in code; everything is
// exact (no numeric tolerances anywhere).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gen.hpp"
#include "pratt/analysis.hpp"
#include "pratt/closure.hpp"
#include "pratt/constructions.hpp"
#include "pratt/crossword.hpp"
#include "pratt/lattice.hpp"

using namespace pratt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Accumulates the first failure; further notes are ignored once failed.
struct Check {
  Outcome outcome;

  void require(bool cond, const std::string& what) {
    if (!outcome.ok || cond) return;
    outcome.ok = false;
    outcome.detail = what;
  }
  void note(const std::string& what) {
    if (outcome.ok) outcome.detail = what;
  }
};

Word w_(const char* bits) { return Word::from_string(bits); }

Family updown3() {
  return Family::canonicalize(GroundSet(3), {w_("000"), w_("100"), w_("110"), w_("001"),
                                             w_("011"), w_("111")});
}

// Independent realizability oracle: all |W|^n row assignments.
bool brute_realizable(const Family& w, const Word& z) {
  const int n = w.ground_size();
  if (w.size() == 0) return false;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    bool diag_ok = true;
    for (int a = 0; a < n && diag_ok; ++a)
      diag_ok = w[pick[static_cast<std::size_t>(a)]].test(a) == z.test(a);
    if (diag_ok) {
      bool cols_ok = true;
      for (int b = 0; b < n && cols_ok; ++b) {
        Word col(n);
        for (int a = 0; a < n; ++a)
          if (w[pick[static_cast<std::size_t>(a)]].test(b)) col.set(a);
        cols_ok = w.contains(col);
      }
      if (cols_ok) return true;
    }
    int at = n - 1;
    while (at >= 0 && ++pick[static_cast<std::size_t>(at)] == w.size()) {
      pick[static_cast<std::size_t>(at)] = 0;
      --at;
    }
    if (at < 0) return false;
  }
}

// ---------------------------------------------------------------------------

Outcome criterion_1() {
  Check c;
  ComonoidCheck r = is_comonoid(updown3());
  c.require(r.status == ComonoidStatus::counterexample, "family was not rejected");
  if (c.outcome.ok) {
    c.require(r.witness.has_value(), "no witness attached");
    c.require(r.witness->diagonal() == w_("010"),
              "witness diagonal is " + r.witness->diagonal().to_string() +
                  ", expected 010");
    ValidationReport v = validate(*r.witness, updown3());
    c.require(v.rows_ok && v.cols_ok && !v.diag_in_family,
              "witness rows/columns do not certify the gap");
    c.note("down+up sets of the 3-chain rejected at diagonal 010");
  }
  return c.outcome;
}

Outcome criterion_2() {
  Check c;
  testgen::Rng rng(9002);
  for (int rep = 0; rep < 50 && c.outcome.ok; ++rep) {
    Family s = testgen::t1_family(rng, 5, 4);
    CloseResult r = close(s);
    c.require(r.certified, "closure not certified");
    c.require(r.family.size() == 32,
              "closure has " + std::to_string(r.family.size()) + " words, expected 32");
    if (!c.outcome.ok) break;
    Family closed = lattice_close(s);
    for (std::uint64_t v = 0; v < 32 && c.outcome.ok; ++v) {
      Word z(5);
      for (int a = 0; a < 5; ++a)
        if ((v >> a) & 1) z.set(a);
      Crossword cw = back_and_forth(s, z);
      c.require(cw.diagonal() == z, "constructed diagonal mismatch at " + z.to_string());
      ValidationReport rep2 = validate(cw, closed);
      c.require(rep2.rows_ok && rep2.cols_ok,
                "construction left the meet/join closure at " + z.to_string());
    }
  }
  c.note("50 separated 5-point families all close to 32 words; 32/32 diagonals built");
  return c.outcome;
}

Outcome criterion_3() {
  Check c;
  testgen::Rng rng(9003);
  for (int rep = 0; rep < 50 && c.outcome.ok; ++rep) {
    const int n = 4 + rep % 3;
    Family s = testgen::complement_closed_t1_family(rng, n, 4);
    CloseResult r = close(s);
    c.require(r.certified, "closure not certified");
    c.require(r.family == full_power_set(GroundSet(n)),
              "closure is not the full power set at size " + std::to_string(n));
  }
  c.note("50 complement-closed separated families, sizes 4-6, all collapse");
  return c.outcome;
}

Outcome criterion_4() {
  Check c;
  testgen::Rng rng(9004);

  for (int rep = 0; rep < 1000 && c.outcome.ok; ++rep) {
    const int n = 2 + static_cast<int>(testgen::pick(rng, 7));
    Word x = testgen::word(rng, n), y = testgen::word(rng, n);
    Family closed = lattice_close(Family::canonicalize(GroundSet(n), {x, y}));
    Crossword meet = binary_witness(x, y, WitnessKind::meet);
    Crossword join = binary_witness(x, y, WitnessKind::join);
    c.require(meet.diagonal() == (x & y), "meet witness diagonal wrong");
    c.require(join.diagonal() == (x | y), "join witness diagonal wrong");
    c.require(validate(meet, closed).fully_valid(), "meet witness invalid");
    c.require(validate(join, closed).fully_valid(), "join witness invalid");
  }

  for (int rep = 0; rep < 200 && c.outcome.ok; ++rep) {
    const int n = 4 + static_cast<int>(testgen::pick(rng, 5));
    // Pairwise disjoint words from a random block partition.
    std::vector<Word> xs(1 + testgen::pick(rng, 4), Word(n));
    for (int a = 0; a < n; ++a)
      if (testgen::coin(rng)) xs[testgen::pick(rng, xs.size())].set(a);
    NearDisjointWitness w = near_disjoint_witness(xs);
    Word expect(n);
    for (const auto& xi : xs) expect = expect | xi;
    c.require(w.crossword.diagonal() == expect, "near-disjoint diagonal wrong");
    c.require(w.max_multiplicity <= 1, "disjoint words counted twice");
    std::vector<Word> members = xs;
    members.push_back(Word::empty(n));
    members.push_back(Word::full(n));
    ValidationReport v =
        validate(w.crossword, Family::canonicalize(GroundSet(n), std::move(members)));
    c.require(v.rows_ok && v.cols_ok, "near-disjoint witness rows invalid");
  }

  for (int rep = 0; rep < 1000 && c.outcome.ok; ++rep) {
    const int n = 1 + static_cast<int>(testgen::pick(rng, 8));
    Crossword cw(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (testgen::coin(rng)) cw.set(a, b);

    DiagonalDecomposition d = decompose_diagonal(cw);
    c.require(d.diag == cw.diagonal(), "decomposition diagonal mismatch");
    Word rejoin(n);
    for (const auto& [a, part] : d.parts) {
      Word expect = Word::full(n);
      for (int i = 0; i < n; ++i) {
        if (cw.row(i).test(a)) expect = expect & cw.row(i);
        if (cw.col(i).test(a)) expect = expect & cw.col(i);
      }
      c.require(part == expect, "part is not the meet of incident slices");
      c.require(part.subset_of(d.diag), "part leaves the diagonal");
      rejoin = rejoin | part;
    }
    c.require(rejoin == d.diag, "parts do not rejoin to the diagonal");

    DiversityReport dv = diversity_check(cw);
    std::set<Word> rows, cols;
    for (int a = 0; a < n; ++a) {
      rows.insert(cw.row(a));
      cols.insert(cw.col(a));
    }
    c.require(dv.distinct_rows == static_cast<int>(rows.size()), "row count wrong");
    c.require(dv.distinct_cols == static_cast<int>(cols.size()), "column count wrong");
    c.require(dv.bounds_ok, "diversity bound violated");
    c.require(static_cast<double>(dv.distinct_cols) <=
                  std::pow(2.0, static_cast<double>(dv.distinct_rows)),
              "column/row bound violated numerically");
  }

  c.note("1000 pair witnesses, 200 disjoint unions, 1000 decompositions and bounds");
  return c.outcome;
}

Outcome criterion_5() {
  Check c;
  for (int n : {3, 4}) {
    LabeledFamily o = omega_infty(n);
    c.require(is_comonoid(o.family).ok(),
              "chain-with-top family of length " + std::to_string(n) + " rejected");
    Classification k = classify(o.family);
    c.require(!k.discrete, "family is unexpectedly discrete");
    c.require(!k.t1, "family is unexpectedly separated");
  }
  c.note("chain-with-top families (lengths 3, 4) certified, non-discrete, unseparated");
  return c.outcome;
}

Outcome criterion_6() {
  Check c;
  testgen::Rng rng(9006);
  int families = 0, targets = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(testgen::pick(rng, 3));
    // Bounds add up to two words, so six seeds keep every family at ≤ 8.
    Family w = testgen::family(rng, n, 1 + static_cast<int>(testgen::pick(rng, 6)),
                               testgen::coin(rng));
    ++families;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n) && c.outcome.ok; ++v) {
      Word z(n);
      for (int a = 0; a < n; ++a)
        if ((v >> a) & 1) z.set(a);
      SolveResult got = solve_diagonal(w, z);
      bool expect = brute_realizable(w, z);
      c.require(got.status == (expect ? SolveStatus::found : SolveStatus::unsat),
                "solver disagrees with enumeration on " + z.to_string());
      if (got.status == SolveStatus::found) {
        c.require(got.crossword->diagonal() == z, "found crossword has wrong diagonal");
        ValidationReport rep2 = validate(*got.crossword, w);
        c.require(rep2.rows_ok && rep2.cols_ok, "found crossword invalid");
      }
      ++targets;
    }
    if (!c.outcome.ok) break;
  }
  c.note(std::to_string(families) + " families, " + std::to_string(targets) +
         " targets, full agreement with enumeration");
  return c.outcome;
}

Outcome criterion_7() {
  Check c;
  LabeledFamily anti = antichain_family({{0, 1}, {1, 2}, {0, 2}});
  c.require(classify(anti.family).t1, "antichain family is not separated");

  FreenessResult fr = is_free_family(anti.family);
  c.require(!fr.free, "antichain family reported free");
  if (c.outcome.ok) {
    c.require(fr.violation.has_value(), "no violation attached");
    std::set<Word> join_side, meet_side;
    for (int i : fr.violation->first) join_side.insert(anti.family[static_cast<std::size_t>(i)]);
    for (int i : fr.violation->second) meet_side.insert(anti.family[static_cast<std::size_t>(i)]);
    c.require(join_side == std::set<Word>{w_("110"), w_("101")},
              "join side is not {e0, e1}");
    c.require(meet_side == std::set<Word>{w_("011")}, "meet side is not {e2}");
  }

  CloseResult r = close(anti.family);
  c.require(r.certified && r.family == full_power_set(GroundSet(3)),
            "closure is not all 8 subsets");
  c.note("separated, e0 v e1 >= e2 found, closure = all 8 subsets");
  return c.outcome;
}

Outcome criterion_8() {
  Check c;
  GridChains g = grid_chains(4, 4);
  ContinuumWitness cw = continuum_witness(g.xs, g.ys);
  c.require(cw.m == std::vector<int>{0, 1, 2, 3}, "m picks wrong");
  c.require(cw.n == std::vector<int>{0, 1, 2, 3}, "n picks wrong");
  c.require(cw.z == w_("0000100011001110"), "z is not the strict lower triangle");
  c.require(cw.zi.size() == 3, "expected 3 strict extensions");
  if (c.outcome.ok) {
    // z_i = z plus the single diagonal point (i,i).
    for (int i = 0; i < 3; ++i) {
      Word expect = cw.z;
      expect.set(i * 4 + i);
      c.require(cw.zi[static_cast<std::size_t>(i)] == expect,
                "z_" + std::to_string(i) + " is not z + (i,i)");
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        c.require((cw.zi[i] & cw.zi[j]) == cw.z, "extensions meet above z");
  }
  c.note("4x4 staircase: z = lower triangle, z_i = z + (i,i), meets back to z");
  return c.outcome;
}

Outcome criterion_9() {
  Check c;
  GridChains g = grid_chains(4, 4);
  InfiniteCrossword ic = infinite_crossword(g.xs, g.ys);

  std::set<Word> attained(ic.distinct_rows.begin(), ic.distinct_rows.end());
  attained.insert(ic.distinct_cols.begin(), ic.distinct_cols.end());
  std::set<Word> chain_members(g.xs.begin(), g.xs.end());
  chain_members.insert(g.ys.begin(), g.ys.end());
  // The full ground set is a chain member but needs a point beyond the grid
  // to appear as a slice, so the attainable set is the members minus A.
  chain_members.erase(Word::full(16));
  c.require(attained == chain_members,
            "rows + columns do not match the chain members below A");
  c.require(ic.distinct_rows.size() == 4 && ic.distinct_cols.size() == 4,
            "expected 4 distinct rows and 4 distinct columns");
  c.note("4x4 staircase rows+columns = the 7 chain members below the full set");
  return c.outcome;
}

Outcome criterion_10() {
  Check c;
  testgen::Rng rng(9010);

  for (int rep = 0; rep < 1000 && c.outcome.ok; ++rep) {
    CxParams p;
    p.n_max = 1 + static_cast<int>(testgen::pick(rng, 4));
    p.gamma_max = 2 + static_cast<long>(testgen::pick(rng, 5));
    long pair_space = static_cast<long>(p.n_max) * (p.gamma_max - 1);
    p.list_len = 1 + static_cast<int>(
                         testgen::pick(rng, static_cast<std::uint64_t>(
                                                std::min<long>(3, pair_space))));
    p.island_bits = p.list_len + static_cast<int>(testgen::pick(rng, 2));

    auto random_point = [&] {
      std::set<std::pair<int, long>> coords;
      while (static_cast<int>(coords.size()) < p.list_len)
        coords.insert({static_cast<int>(testgen::pick(rng, p.n_max)),
                       static_cast<long>(testgen::pick(rng, p.gamma_max - 1))});
      CxPoint a;
      a.coords.assign(coords.begin(), coords.end());
      std::shuffle(a.coords.begin(), a.coords.end(), rng);
      a.island = testgen::word(rng, p.island_bits);
      return a;
    };

    CxPoint a = random_point();
    Word enc = cx_encode(p, a);

    // Listed coordinates read the island bit at their list position.
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      c.require(cx_evaluate(p, a.coords[i].first, a.coords[i].second, a) ==
                    (a.island.test(static_cast<int>(i)) ? 1 : 0),
                "listed coordinate did not read the island");

    // Above the point's stratum every generator acts through the encoding.
    long beta = static_cast<long>(testgen::pick(rng, p.gamma_max + 1));
    if (cx_stratum(p, a, beta) && beta < p.gamma_max) {
      long gamma = beta + static_cast<long>(testgen::pick(rng, p.gamma_max - beta));
      int n = static_cast<int>(testgen::pick(rng, 2 * p.enc_bits() + 4));
      int bit = n / 2;
      int base = bit < enc.ground_size() && enc.test(bit) ? 1 : 0;
      int expect = n % 2 == 0 ? base : 1 - base;
      c.require(cx_evaluate(p, n, gamma, a) == expect,
                "stratum identity failed for n=" + std::to_string(n));
    }

    // Separation delivers the 1/0 contract whenever encodings differ.
    CxPoint b = random_point();
    if (cx_encode(p, b) != enc) {
      CxSeparation s = cx_separate(p, a, b);
      c.require(cx_evaluate(p, s.n, s.beta, a) == 1, "separator is not 1 at the first point");
      c.require(cx_evaluate(p, s.n, s.beta, b) == 0, "separator is not 0 at the second point");
      c.require(s.beta >= s.stratum1 && s.beta >= s.stratum2, "beta below a stratum");
    }
  }

  int extracted = 0;
  for (int rep = 0; rep < 200 && c.outcome.ok; ++rep) {
    const int j = 2 + static_cast<int>(testgen::pick(rng, 3));
    const int count = 4 + static_cast<int>(testgen::pick(rng, 9));
    const int threshold = 2 + static_cast<int>(testgen::pick(rng, 2));
    std::vector<std::vector<long>> tuples;
    for (int t = 0; t < count; ++t) {
      std::set<long> entries;
      while (static_cast<int>(entries.size()) < j)
        entries.insert(static_cast<long>(testgen::pick(rng, 10)));
      tuples.emplace_back(entries.begin(), entries.end());
      std::shuffle(tuples.back().begin(), tuples.back().end(), rng);
    }
    SunflowerResult r = sunflower_extract(tuples, threshold);
    if (!r.ok) {
      c.require(!r.failure.empty(), "failure without a reason");
      continue;
    }
    ++extracted;
    c.require(static_cast<int>(r.picked.size()) == threshold, "wrong petal count");
    c.require(r.core_len < j, "core swallowed the whole tuple");
    std::set<long> used(r.core.begin(), r.core.end());
    for (std::size_t t = 0; t < r.picked.size() && c.outcome.ok; ++t) {
      const auto& tuple = tuples[static_cast<std::size_t>(r.picked[t])];
      for (int k = 0; k < r.core_len; ++k)
        c.require(tuple[static_cast<std::size_t>(r.perm[static_cast<std::size_t>(k)])] ==
                      r.core[static_cast<std::size_t>(k)],
                  "picked tuple disagrees with the core");
      c.require(static_cast<int>(r.tails[t].size()) == j - r.core_len, "tail length wrong");
      for (long v : r.tails[t]) {
        c.require(!used.count(v), "tail value reused");
        used.insert(v);
      }
    }
  }
  c.require(extracted >= 100, "too few extractions to be meaningful");
  c.note("1000 kernel identity/separation draws, 200 tuple sets (" +
         std::to_string(extracted) + " extractions verified)");
  return c.outcome;
}

Outcome criterion_11() {
  Check c;
  int products = 0, upsets = 0;
  std::vector<std::vector<int>> shapes;
  for (int a : {2, 3}) {
    shapes.push_back({a});
    for (int b : {2, 3}) {
      shapes.push_back({a, b});
      for (int d : {2, 3}) shapes.push_back({a, b, d});
    }
  }
  for (const auto& shape : shapes) {
    std::vector<Preorder> factors;
    for (int s : shape) factors.push_back(Preorder::chain(s));
    ProductPoset p = product_poset(factors);
    ProductUpsetChecker checker(p);
    ++products;
    for (const auto& x : enumerate_upsets(p.order)) {
      ProductUpsetReport rep = checker.check(x);
      c.require(rep.upset_ok && rep.finite_support, "up-set misclassified");
      c.require(rep.near_zero_lattice,
                "up-set outside the near-zero lattice in product of " +
                    std::to_string(shape.size()) + " chains");
      c.require(rep.near_one_lattice,
                "complement outside the near-one lattice in product of " +
                    std::to_string(shape.size()) + " chains");
      ++upsets;
    }
    if (!c.outcome.ok) break;
  }
  c.note(std::to_string(upsets) + " up-sets across " + std::to_string(products) +
         " chain products all satisfy both lattice conditions");
  return c.outcome;
}

Outcome criterion_12() {
  Check c;
  testgen::Rng rng(9012);

  for (int rep = 0; rep < 100 && c.outcome.ok; ++rep) {
    const int n = 4;
    Family s = testgen::family(rng, n, 1 + static_cast<int>(testgen::pick(rng, 5)), false);
    Family cs = close(s).family;
    for (const auto& w : s)
      c.require(cs.contains(w), "closure dropped a seed word");  // extensive

    std::vector<Word> bigger(s.begin(), s.end());
    bigger.push_back(testgen::word(rng, n));
    Family t = Family::canonicalize(s.ground(), std::move(bigger));
    Family ct = close(t).family;  // monotone on the nested pair s ⊆ t
    for (const auto& w : cs)
      c.require(ct.contains(w), "closure is not monotone");

    if (rep % 4 == 0)
      c.require(close(cs).family == cs, "closure is not idempotent");
  }
  c.note("extensive + monotone on 100 nested pairs + idempotent on 25 closures");
  return c.outcome;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Entry {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "down-up family counterexample", criterion_1},
      {2, "separated families collapse", criterion_2},
      {3, "complement-closed families collapse", criterion_3},
      {4, "witness constructions", criterion_4},
      {5, "chain-with-top family", criterion_5},
      {6, "solver against enumeration", criterion_6},
      {7, "antichain family collapse", criterion_7},
      {8, "staircase antichain of extensions", criterion_8},
      {9, "staircase slice diversity", criterion_9},
      {10, "kernel identities and sunflowers", criterion_10},
      {11, "chain-product up-set lattices", criterion_11},
      {12, "closure operator laws", criterion_12},
  };

  int failures = 0;
  const auto t0 = Clock::now();
  for (const auto& e : entries) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
            .count();
    std::cout << "criterion " << e.number << " (" << e.title << "): "
              << (o.ok ? "pass" : "FAIL") << " — " << o.detail << " [" << ms << " ms]"
              << std::endl;
    if (!o.ok) ++failures;
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  std::cout << (failures == 0 ? "all 12 criteria passed"
                              : std::to_string(failures) + " criteria FAILED")
            << " in " << total << " ms" << std::endl;
  return failures == 0 ? 0 : 1;
}
