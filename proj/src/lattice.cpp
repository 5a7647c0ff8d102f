#include "pratt/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

namespace pratt {

Family dual_family(const Family& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(~x);
  return Family::canonicalize(w.ground(), std::move(out));
}

Family intersect_families(const Family& v, const Family& w) {
  if (v.ground_size() != w.ground_size())
    throw Error("intersecting families over different ground sets");
  std::vector<Word> out;
  std::set_intersection(v.begin(), v.end(), w.begin(), w.end(), std::back_inserter(out));
  return Family::canonicalize(v.ground(), std::move(out));
}

Family pullback_family(const std::vector<int>& f, const GroundSet& target_ground,
                       const Family& w) {
  if (static_cast<int>(f.size()) != w.ground_size())
    throw Error("map domain size " + std::to_string(f.size()) +
                " does not match family ground size " + std::to_string(w.ground_size()));
  for (int img : f)
    if (img < 0 || img >= target_ground.size)
      throw Error("map image " + std::to_string(img) + " outside target ground of size " +
                  std::to_string(target_ground.size));
  if (target_ground.size > 20)
    throw BudgetError("refusing to scan 2^" + std::to_string(target_ground.size) +
                      " candidate words");

  std::vector<Word> out;
  const int m = target_ground.size;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    Word cand(m);
    for (int a = 0; a < m; ++a)
      if ((v >> a) & 1) cand.set(a);
    Word pre(w.ground_size());
    for (int a = 0; a < w.ground_size(); ++a)
      if (cand.test(f[static_cast<std::size_t>(a)])) pre.set(a);
    if (w.contains(pre)) out.push_back(cand);
  }
  return Family::canonicalize(target_ground, std::move(out));
}

IntervalSlice interval_family(const Family& w, const Word& u, const Word& v) {
  if (!w.contains(u)) throw Error("interval endpoint u is not a member of the family");
  if (!w.contains(v)) throw Error("interval endpoint v is not a member of the family");
  if (!u.subset_of(v)) throw Error("interval endpoints must satisfy u ⊆ v");

  IntervalSlice slice;
  slice.elements = (v - u).indices();
  const int m = static_cast<int>(slice.elements.size());
  if (w.ground().labels) {
    std::vector<std::string> names;
    for (int orig : slice.elements) names.push_back(w.ground().label(orig));
    slice.ground = GroundSet(m, std::move(names));
  } else {
    slice.ground = GroundSet(m);
  }

  std::vector<Word> out;
  for (const auto& x : w) {
    if (!u.subset_of(x) || !x.subset_of(v)) continue;
    Word re(m);
    for (int k = 0; k < m; ++k)
      if (x.test(slice.elements[static_cast<std::size_t>(k)])) re.set(k);
    out.push_back(re);
  }
  slice.family = Family::canonicalize(slice.ground, std::move(out));
  return slice;
}

Family lattice_close(const Family& s, std::size_t max_size) {
  const int n = s.ground_size();
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> members;
  std::deque<std::size_t> work;

  auto add = [&](const Word& w) {
    if (seen.insert(w).second) {
      members.push_back(w);
      work.push_back(members.size() - 1);
      if (members.size() > max_size)
        throw BudgetError("lattice closure exceeded " + std::to_string(max_size) + " words");
    }
  };

  add(Word::empty(n));
  add(Word::full(n));
  for (const auto& w : s) add(w);

  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    // members may grow while we scan; new pairs get their own work items.
    for (std::size_t j = 0; j < members.size(); ++j) {
      Word a = members[i] & members[j];
      if (!seen.count(a)) add(a);
      Word o = members[i] | members[j];
      if (!seen.count(o)) add(o);
    }
  }
  return Family::canonicalize(s.ground(), std::move(members));
}

namespace {

// Shared freeness scan. Violations on the meet side are filtered by
// `admissible` (always true for plain freeness).
template <typename MeetFilter>
FreenessResult freeness_scan(const Family& s, MeetFilter admissible) {
  const int k = static_cast<int>(s.size());
  if (k > 16)
    throw BudgetError("exact freeness check limited to 16 generators, got " +
                      std::to_string(k));
  FreenessResult res;
  if (k == 0) return res;

  const std::uint32_t top = (std::uint32_t{1} << k) - 1;
  const int n = s.ground_size();
  std::vector<Word> joins(top + 1, Word(n)), meets(top + 1, Word::full(n));
  for (std::uint32_t m = 1; m <= top; ++m) {
    std::uint32_t low = m & (m - 1);
    int bit = std::countr_zero(m);
    joins[m] = joins[low] | s[static_cast<std::size_t>(bit)];
    meets[m] = meets[low] & s[static_cast<std::size_t>(bit)];
  }

  auto unpack = [](std::uint32_t m) {
    std::vector<int> out;
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  };

  for (std::uint32_t jm = 1; jm <= top; ++jm) {
    std::uint32_t rest = top & ~jm;
    for (std::uint32_t km = rest; km; km = (km - 1) & rest) {
      if (!admissible(km)) continue;
      if (meets[km].subset_of(joins[jm])) {
        res.free = false;
        res.violation = {unpack(jm), unpack(km)};
        return res;
      }
    }
  }
  return res;
}

}  // namespace

FreenessResult is_free_family(const Family& s) {
  return freeness_scan(s, [](std::uint32_t) { return true; });
}

FreenessResult partitioned_freeness(const Family& s,
                                    const std::vector<std::vector<int>>& blocks) {
  const int k = static_cast<int>(s.size());
  std::vector<int> owner(static_cast<std::size_t>(k), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int idx : blocks[b]) {
      if (idx < 0 || idx >= k) throw Error("block index out of range: " + std::to_string(idx));
      if (owner[static_cast<std::size_t>(idx)] != -1)
        throw Error("blocks are not disjoint at index " + std::to_string(idx));
      owner[static_cast<std::size_t>(idx)] = static_cast<int>(b);
    }
  for (int idx = 0; idx < k; ++idx)
    if (owner[static_cast<std::size_t>(idx)] == -1)
      throw Error("blocks do not cover index " + std::to_string(idx));

  std::vector<std::uint32_t> block_mask(blocks.size(), 0);
  for (int idx = 0; idx < k; ++idx)
    block_mask[static_cast<std::size_t>(owner[static_cast<std::size_t>(idx)])] |=
        std::uint32_t{1} << idx;

  // Meet side counts only when all but at most one member sit in one block.
  auto concentrated = [&](std::uint32_t km) {
    int size = std::popcount(km);
    if (size <= 1) return true;
    for (auto bm : block_mask)
      if (std::popcount(km & bm) >= size - 1) return true;
    return false;
  };
  return freeness_scan(s, concentrated);
}

TermExpr TermExpr::v(int index) {
  TermExpr t;
  t.kind = Kind::var;
  t.var = index;
  return t;
}

TermExpr TermExpr::c(int bit) {
  if (bit != 0 && bit != 1) throw Error("term constant must be 0 or 1");
  TermExpr t;
  t.kind = Kind::constant;
  t.value = bit;
  return t;
}

TermExpr TermExpr::meet(TermExpr a, TermExpr b) {
  TermExpr t;
  t.kind = Kind::meet;
  t.lhs = std::make_shared<TermExpr>(std::move(a));
  t.rhs = std::make_shared<TermExpr>(std::move(b));
  return t;
}

TermExpr TermExpr::join(TermExpr a, TermExpr b) {
  TermExpr t;
  t.kind = Kind::join;
  t.lhs = std::make_shared<TermExpr>(std::move(a));
  t.rhs = std::make_shared<TermExpr>(std::move(b));
  return t;
}

bool MonotoneTerm::evaluate(std::uint32_t assignment) const {
  if (constant) return *constant == 1;
  for (auto clause : clauses)
    if ((assignment & clause) == clause) return true;
  return false;
}

bool MonotoneTerm::depends_on_all_arguments() const {
  if (constant) return arity == 0;
  std::uint32_t used = 0;
  for (auto clause : clauses) used |= clause;
  return used == (std::uint32_t{1} << arity) - 1;
}

namespace {

// Clause sets during normalization: {} is constant 0, {0} is constant 1.
using ClauseSet = std::vector<std::uint32_t>;

ClauseSet minimize(ClauseSet cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  ClauseSet out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (i != j && (cs[j] & cs[i]) == cs[j] && cs[j] != cs[i]) {
        minimal = false;
        break;
      }
    // Equal clauses were deduplicated, so only strict subsets disqualify.
    if (minimal) out.push_back(cs[i]);
  }
  return out;
}

ClauseSet normalize_rec(const TermExpr& e, int arity) {
  switch (e.kind) {
    case TermExpr::Kind::var:
      if (e.var < 0 || e.var >= arity)
        throw Error("term variable v" + std::to_string(e.var) + " outside arity " +
                    std::to_string(arity));
      return {std::uint32_t{1} << e.var};
    case TermExpr::Kind::constant:
      return e.value ? ClauseSet{0} : ClauseSet{};
    case TermExpr::Kind::meet: {
      if (!e.lhs || !e.rhs) throw Error("malformed term: meet node missing a child");
      ClauseSet l = normalize_rec(*e.lhs, arity), r = normalize_rec(*e.rhs, arity);
      ClauseSet out;
      for (auto a : l)
        for (auto b : r) out.push_back(a | b);
      return minimize(std::move(out));
    }
    case TermExpr::Kind::join: {
      if (!e.lhs || !e.rhs) throw Error("malformed term: join node missing a child");
      ClauseSet l = normalize_rec(*e.lhs, arity), r = normalize_rec(*e.rhs, arity);
      l.insert(l.end(), r.begin(), r.end());
      return minimize(std::move(l));
    }
  }
  throw Error("malformed term node");
}

}  // namespace

MonotoneTerm term_normalize(const TermExpr& expr, int arity) {
  if (arity < 0 || arity > 20) throw Error("term arity must be between 0 and 20");
  ClauseSet cs = normalize_rec(expr, arity);
  MonotoneTerm t;
  t.arity = arity;
  if (cs.empty())
    t.constant = 0;
  else if (cs.size() == 1 && cs[0] == 0)
    t.constant = 1;
  else
    t.clauses = std::move(cs);
  return t;
}

std::vector<int> pinning_assignment(const MonotoneTerm& term, int prefix_len) {
  if (prefix_len < 0 || prefix_len > term.arity)
    throw Error("pinning prefix length must be between 0 and the arity");
  if (!term.depends_on_all_arguments())
    throw Error("term does not depend on all of its arguments");

  const int i = prefix_len;
  const std::uint32_t suffix =
      ((std::uint32_t{1} << term.arity) - 1) & ~((std::uint32_t{1} << i) - 1);
  // Lexicographic order over (c_0,...,c_{i-1}): c_0 is the most significant.
  for (std::uint32_t p = 0; p < (std::uint32_t{1} << i); ++p) {
    std::uint32_t prefix_bits = 0;
    for (int k = 0; k < i; ++k)
      if ((p >> (i - 1 - k)) & 1) prefix_bits |= std::uint32_t{1} << k;
    if (!term.evaluate(prefix_bits) && term.evaluate(prefix_bits | suffix)) {
      std::vector<int> out;
      for (int k = 0; k < i; ++k) out.push_back(static_cast<int>((p >> (i - 1 - k)) & 1));
      return out;
    }
  }
  throw InternalError("no pinning prefix exists despite full dependence");
}

}  // namespace pratt
