#include "pratt/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pratt/crossword.hpp"
#include "pratt/lattice.hpp"

namespace pratt {

Classification classify(const Family& w) {
  const int n = w.ground_size();
  Classification out;
  for (int a = 0; a < n && out.t1; ++a)
    for (int b = 0; b < n && out.t1; ++b) {
      if (a == b) continue;
      bool separated = false;
      for (const auto& x : w)
        if (x.test(a) && !x.test(b)) {
          separated = true;
          break;
        }
      if (!separated) {
        out.t1 = false;
        out.t1_failure = {a, b};
      }
    }
  out.discrete = n < 63 && w.size() == (std::size_t{1} << n);
  out.complement_closed = dual_family(w) == w;
  return out;
}

SeparatingWord separating_word(const Family& w, const Word& a0, const Word& y) {
  const int n = w.ground_size();
  if (a0.ground_size() != n || y.ground_size() != n)
    throw Error("separating word arguments must share the family's ground set");
  if (!y.subset_of(a0)) throw Error("target trace y must be a subset of A0");

  SeparatingWord out;
  out.word = Word::empty(n);  // empty join
  for (int a : y.indices()) {
    Word xa = Word::full(n);  // empty meet
    for (int b : a0.indices()) {
      if (b == a) continue;
      std::optional<Word> sep;
      for (const auto& cand : w)
        if (cand.test(a) && !cand.test(b)) {
          sep = cand;  // canonical order: first hit is least
          break;
        }
      if (!sep)
        throw Error("family is not T1: no word contains element " + std::to_string(a) +
                    " without element " + std::to_string(b));
      out.derivation.emplace_back(a, b, *sep);
      xa = xa & *sep;
    }
    out.word = out.word | xa;
  }
  internal_check((out.word & a0) == y, "separating word must meet A0 in exactly y");
  return out;
}

Crossword back_and_forth(const Family& w, const Word& z) {
  const int n = w.ground_size();
  if (z.ground_size() != n)
    throw Error("target diagonal is over a different ground set than the family");
  Classification cls = classify(w);
  if (!cls.t1) {
    auto [a, b] = *cls.t1_failure;
    throw Error("family is not T1: elements " + std::to_string(a) + " and " +
                std::to_string(b) + " are not separated");
  }

  Family closed = lattice_close(w);
  std::vector<Word> rows, cols;
  for (int k = 0; k < n; ++k) {
    Word a0 = Word(n);
    for (int i = 0; i <= k; ++i) a0.set(i);

    // Row k must agree with the chosen columns on the filled square and put
    // z(k) on the diagonal; column k dually against the chosen rows.
    Word row_trace(n), col_trace(n);
    for (int i = 0; i < k; ++i) {
      if (cols[static_cast<std::size_t>(i)].test(k)) row_trace.set(i);
      if (rows[static_cast<std::size_t>(i)].test(k)) col_trace.set(i);
    }
    if (z.test(k)) {
      row_trace.set(k);
      col_trace.set(k);
    }
    rows.push_back(separating_word(closed, a0, row_trace).word);
    cols.push_back(separating_word(closed, a0, col_trace).word);
  }

  Crossword c = Crossword::from_rows(rows);
  ValidationReport rep = validate(c, closed);
  internal_check(rep.rows_ok && rep.cols_ok,
                 "back-and-forth result must validate over the closed family");
  internal_check(c.diagonal() == z, "back-and-forth diagonal must match the target");
  for (int k = 0; k < n; ++k)
    internal_check(c.col(k) == cols[static_cast<std::size_t>(k)],
                   "columns must realize the chosen column words");
  return c;
}

IndecomposableReport strongly_indecomposable(const Family& w, const Word& base) {
  if (!w.contains(base)) throw Error("base word is not a member of the family");

  IndecomposableReport out;
  out.base = base;

  std::vector<Word> above;  // strictly above base
  for (const auto& x : w)
    if (base.subset_of(x) && x != base) above.push_back(x);

  for (std::size_t i = 0; i < above.size(); ++i)
    for (std::size_t j = i + 1; j < above.size(); ++j)
      if (!w.contains(above[i] & above[j]))
        throw Error("the family is not meet-closed above the base (" +
                    (above[i] & above[j]).to_string() +
                    " is missing); close it first");

  auto disjoint = [&](const Word& u, const Word& v) { return (u & v) == base; };

  for (const auto& x : above) {
    bool indec = true;
    for (std::size_t i = 0; i < above.size() && indec; ++i) {
      if (!(above[i].subset_of(x)) || above[i] == x) continue;
      for (std::size_t j = i + 1; j < above.size() && indec; ++j) {
        if (!(above[j].subset_of(x)) || above[j] == x) continue;
        if (disjoint(above[i], above[j])) indec = false;
      }
    }
    if (indec) out.indecomposables.push_back(x);
  }

  // Union-find over "meets above base".
  std::vector<int> parent(out.indecomposables.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (std::size_t i = 0; i < out.indecomposables.size(); ++i)
    for (std::size_t j = i + 1; j < out.indecomposables.size(); ++j)
      if (!disjoint(out.indecomposables[i], out.indecomposables[j]))
        parent[static_cast<std::size_t>(find(static_cast<int>(j)))] =
            find(static_cast<int>(i));

  std::vector<int> roots;
  for (std::size_t i = 0; i < out.indecomposables.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
      roots.push_back(r);
      out.classes.emplace_back();
    }
    std::size_t slot = static_cast<std::size_t>(
        std::find(roots.begin(), roots.end(), r) - roots.begin());
    out.classes[slot].push_back(out.indecomposables[i]);
  }

  // On strongly indecomposable elements the relation is transitive, so each
  // connected component must be pairwise non-disjoint.
  for (const auto& cls : out.classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        internal_check(!disjoint(cls[i], cls[j]),
                       "overlap relation must be transitive on indecomposables");
  return out;
}

DominationReport dominated_classes(int element, const Family& w) {
  const int n = w.ground_size();
  if (element < 0 || element >= n) throw Error("element index out of range");

  DominationReport out;
  out.element = element;
  out.decomposition = strongly_indecomposable(w, Word::empty(n));

  Classification cls = classify(w);
  for (const auto& klass : out.decomposition.classes) {
    bool dominated = true;
    for (const auto& word : w) {
      if (!word.test(element)) continue;
      bool majorizes = false;
      for (const auto& e : klass)
        if (e.subset_of(word)) {
          majorizes = true;
          break;
        }
      if (!majorizes) {
        dominated = false;
        break;
      }
    }
    if (!dominated) continue;
    Word meet = Word::full(n);
    for (const auto& e : klass) meet = meet & e;
    if (cls.t1) {
      internal_check(meet.none() || meet == Word::singleton(n, element),
                     "dominated class meet must be empty or the element itself");
      out.dichotomy_checked = true;
    }
    out.dominated.push_back({klass, std::move(meet)});
  }
  return out;
}

namespace {

void check_chain_shapes(const std::vector<Word>& xs, const std::vector<Word>& ys,
                        bool strict) {
  if (xs.empty() || ys.empty()) throw Error("chains must be nonempty");
  if (xs.size() != ys.size()) throw Error("chains must have equal length");
  const int n = xs.front().ground_size();
  for (const auto& v : xs)
    if (v.ground_size() != n) throw Error("chain words over different ground sets");
  for (const auto& v : ys)
    if (v.ground_size() != n) throw Error("chain words over different ground sets");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!xs[i + 1].subset_of(xs[i]) || (strict && xs[i + 1] == xs[i]))
      throw Error("xs must be " + std::string(strict ? "strictly " : "") +
                  "descending at index " + std::to_string(i));
    if (!ys[i].subset_of(ys[i + 1]) || (strict && ys[i] == ys[i + 1]))
      throw Error("ys must be " + std::string(strict ? "strictly " : "") +
                  "ascending at index " + std::to_string(i));
  }
}

}  // namespace

ChainUnionResult chain_union(const std::vector<Word>& xs, const std::vector<Word>& ys) {
  check_chain_shapes(xs, ys, /*strict=*/false);
  const int n = xs.front().ground_size();
  const bool xs_end_empty = xs.back().none();
  const bool ys_end_full = ys.back().all();
  if (!xs_end_empty && !ys_end_full)
    throw Error("neither terminal condition holds: last(xs) must be ∅ or last(ys) must be A");

  ChainUnionResult out;
  out.result = Word(n);
  std::vector<Word> meets;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    meets.push_back(xs[i] & ys[i]);
    out.result = out.result | meets.back();
  }

  if (xs_end_empty) {
    out.route = ChainUnionRoute::disjoint;
    NearDisjointWitness w = near_disjoint_witness(meets);
    internal_check(w.crossword.diagonal() == out.result,
                   "near-disjoint witness diagonal must equal the union");
    out.witness = std::move(w.crossword);
    out.witness_max_multiplicity = w.max_multiplicity;
  } else {
    // Dual route: shift ys down by one (∅ in front), pass to the complement
    // side; ⋀(x_n ∨ y'_n) = ⋁(x_n ∧ y_n) and its complement is a
    // near-disjoint union of the ¬x_n ∧ ¬y'_n.
    std::vector<Word> shifted;
    shifted.push_back(Word(n));
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) shifted.push_back(ys[i]);
    std::vector<Word> duals;
    Word dual_union(n);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      duals.push_back(~xs[i] & ~shifted[i]);
      dual_union = dual_union | duals.back();
    }
    internal_check(dual_union == ~out.result,
                   "dual-route union must complement the chain union");
    out.route = ChainUnionRoute::dual;
    NearDisjointWitness w = near_disjoint_witness(duals);
    out.witness = std::move(w.crossword);
    out.witness_max_multiplicity = w.max_multiplicity;
  }
  return out;
}

ContinuumWitness continuum_witness(const std::vector<Word>& xs,
                                   const std::vector<Word>& ys) {
  check_chain_shapes(xs, ys, /*strict=*/false);
  const int n = xs.front().ground_size();
  if (!xs.back().none()) throw Error("last(xs) must be ∅");

  Word all_y(n);
  for (const auto& y : ys) all_y = all_y | y;

  // Degenerate stand-ins (x = ∅, y = ⋁ys) play the role of the chain limits
  // and are excluded from both the hypothesis scan and the recursion.
  auto usable_m = [&](std::size_t m) { return !xs[m].none(); };
  auto usable_n = [&](std::size_t k) { return ys[k] != all_y; };

  for (std::size_t m = 0; m < xs.size(); ++m) {
    if (!usable_m(m)) continue;
    for (std::size_t k = 0; k < ys.size(); ++k) {
      if (!usable_n(k)) continue;
      if ((xs[m] & all_y).subset_of(ys[k]))
        throw Error("hypothesis fails: y_" + std::to_string(k) + " contains x_" +
                    std::to_string(m) + " ∧ ⋁ys");
    }
  }

  ContinuumWitness out;
  std::optional<std::size_t> m0, n0;
  for (std::size_t m = 0; m < xs.size(); ++m)
    if (usable_m(m)) {
      m0 = m;
      break;
    }
  for (std::size_t k = 0; k < ys.size(); ++k)
    if (usable_n(k)) {
      n0 = k;
      break;
    }
  if (!m0 || !n0) throw Error("chains have no non-degenerate members");
  out.m.push_back(static_cast<int>(*m0));
  out.n.push_back(static_cast<int>(*n0));

  while (true) {
    std::size_t mj = static_cast<std::size_t>(out.m.back());
    std::size_t nj = static_cast<std::size_t>(out.n.back());
    // The hypothesis guarantees a point of x_{m(j)} ∧ ⋁ys outside y_{n(j)}.
    Word pool = (xs[mj] & all_y) - ys[nj];
    internal_check(pool.any(), "hypothesis must provide a witness point");
    int a = pool.indices().front();

    std::optional<std::size_t> next_n, next_m;
    for (std::size_t k = nj + 1; k < ys.size(); ++k)
      if (usable_n(k) && ys[k].test(a)) {
        next_n = k;
        break;
      }
    for (std::size_t m = mj + 1; m < xs.size(); ++m)
      if (usable_m(m) && !xs[m].test(a)) {
        next_m = m;
        break;
      }
    if (!next_n || !next_m) break;  // chains exhausted
    out.n.push_back(static_cast<int>(*next_n));
    out.m.push_back(static_cast<int>(*next_m));
  }

  out.z = Word(n);
  for (std::size_t i = 0; i < out.m.size(); ++i)
    out.z = out.z | (xs[static_cast<std::size_t>(out.m[i])] &
                     ys[static_cast<std::size_t>(out.n[i])]);
  for (std::size_t i = 0; i + 1 < out.m.size(); ++i)
    out.zi.push_back(out.z | (xs[static_cast<std::size_t>(out.m[i])] &
                              ys[static_cast<std::size_t>(out.n[i + 1])]));

  for (std::size_t i = 0; i < out.zi.size(); ++i) {
    internal_check(out.z.subset_of(out.zi[i]) && out.z != out.zi[i],
                   "each z_i must strictly exceed z");
    for (std::size_t j = i + 1; j < out.zi.size(); ++j)
      internal_check((out.zi[i] & out.zi[j]) == out.z,
                     "distinct z_i must meet exactly in z");
  }
  return out;
}

InfiniteCrossword infinite_crossword(const std::vector<Word>& xs,
                                     const std::vector<Word>& ys) {
  check_chain_shapes(xs, ys, /*strict=*/true);
  const int n = xs.front().ground_size();
  if (!xs.back().none()) throw Error("last(xs) must be ∅");
  if (!ys.back().all()) throw Error("last(ys) must be A");

  InfiniteCrossword out;
  out.crossword = Crossword(n);
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.crossword = out.crossword | product(xs[i], ys[i]);

  std::vector<Word> chain_members(xs.begin(), xs.end());
  chain_members.insert(chain_members.end(), ys.begin(), ys.end());
  Family members = Family::canonicalize(GroundSet(n), std::move(chain_members));

  std::vector<Word> rows = out.crossword.rows(), cols = out.crossword.columns();
  for (int a = 0; a < n; ++a) {
    internal_check(members.contains(rows[static_cast<std::size_t>(a)]),
                   "every row must be a chain member");
    internal_check(members.contains(cols[static_cast<std::size_t>(a)]),
                   "every column must be a chain member");
  }
  auto dedupe = [](std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
  };
  out.distinct_rows = dedupe(std::move(rows));
  out.distinct_cols = dedupe(std::move(cols));
  return out;
}

}  // namespace pratt
