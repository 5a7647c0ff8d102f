#include "pratt/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "pratt/lattice.hpp"

namespace pratt {

Family order_comonoid(const Preorder& order, OrderFlavor flavor) {
  const int n = order.size();
  if (n > 16)
    throw BudgetError("order family scan is limited to 16 elements, got " +
                      std::to_string(n));
  std::vector<Word> closures(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    closures[static_cast<std::size_t>(a)] =
        flavor == OrderFlavor::down ? order.down(a) : order.up(a);

  std::vector<Word> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    Word w(n);
    for (int a = 0; a < n; ++a)
      if ((v >> a) & 1) w.set(a);
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      if (w.test(a) && !closures[static_cast<std::size_t>(a)].subset_of(w)) closed = false;
    if (closed) out.push_back(w);
  }
  return Family::canonicalize(GroundSet(n), std::move(out));
}

LabeledFamily omega_infty(int n) {
  if (n < 1) throw Error("chain length must be positive");
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  labels.push_back("inf");

  LabeledFamily out;
  out.ground = GroundSet(n + 1, std::move(labels));
  // Down-sets of the chain 0 < 1 < ... < n-1 < top are the prefixes; drop
  // the one that omits only the top.
  for (int len = 0; len <= n + 1; ++len) {
    if (len == n) continue;
    Word w(n + 1);
    for (int a = 0; a < len; ++a) w.set(a);
    out.generators.push_back(w);
  }
  out.family = Family::canonicalize(out.ground, out.generators);
  return out;
}

LabeledFamily coordinate_family(int m, CoordinateFlavor flavor) {
  if (m < 1 || m > 16) throw Error("coordinate count must be between 1 and 16");
  const int n = 1 << m;
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) {
    std::string s(static_cast<std::size_t>(m), '0');
    for (int i = 0; i < m; ++i)
      if ((p >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    labels.push_back(std::move(s));
  }

  LabeledFamily out;
  out.ground = GroundSet(n, std::move(labels));
  for (int i = 0; i < m; ++i) {
    Word e(n);
    for (int p = 0; p < n; ++p)
      if ((p >> i) & 1) e.set(p);
    out.generators.push_back(e);
    if (flavor == CoordinateFlavor::with_complements) out.generators.push_back(~e);
  }
  out.family = Family::canonicalize(out.ground, out.generators);
  return out;
}

LabeledFamily antichain_family(const std::vector<std::vector<int>>& members) {
  if (members.empty()) throw Error("antichain must be nonempty");
  int m = 0;
  for (const auto& s : members)
    for (int e : s) {
      if (e < 0) throw Error("antichain member elements must be nonnegative");
      m = std::max(m, e + 1);
    }

  const int count = static_cast<int>(members.size());
  std::vector<Word> sets;
  for (const auto& s : members) sets.push_back(Word::from_indices(m, s));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && sets[static_cast<std::size_t>(i)].subset_of(
                        sets[static_cast<std::size_t>(j)]))
        throw Error("not an antichain: member " + std::to_string(i) +
                    " is contained in member " + std::to_string(j));

  std::vector<std::string> labels;
  for (const auto& s : sets) labels.push_back(s.to_string());

  LabeledFamily out;
  out.ground = GroundSet(count, std::move(labels));
  for (int i = 0; i < m; ++i) {
    Word e(count);
    for (int k = 0; k < count; ++k)
      if (sets[static_cast<std::size_t>(k)].test(i)) e.set(k);
    if (e.none() || e.all()) continue;  // constants dropped
    out.generators.push_back(e);
  }
  out.family = Family::canonicalize(out.ground, out.generators);
  return out;
}

namespace {

int field_width(long bound) {
  // Bits needed to store values 0..bound-1; at least one.
  unsigned long top = bound > 1 ? static_cast<unsigned long>(bound - 1) : 1ul;
  return std::max(1, static_cast<int>(std::bit_width(top)));
}

void check_params(const CxParams& p) {
  if (p.list_len < 1 || p.n_max < 1 || p.gamma_max < 1 || p.island_bits < 1)
    throw Error("kernel parameters must all be positive");
}

}  // namespace

int CxParams::n_field_width() const { return field_width(n_max); }
int CxParams::gamma_field_width() const { return field_width(gamma_max); }
int CxParams::enc_bits() const {
  return list_len * (n_field_width() + gamma_field_width()) + island_bits;
}

void cx_validate(const CxParams& p, const CxPoint& a) {
  check_params(p);
  if (static_cast<int>(a.coords.size()) != p.list_len)
    throw Error("coordinate list length " + std::to_string(a.coords.size()) +
                " does not match parameter " + std::to_string(p.list_len));
  for (auto [n, gamma] : a.coords) {
    if (n < 0 || n >= p.n_max)
      throw Error("coordinate n = " + std::to_string(n) + " outside 0.." +
                  std::to_string(p.n_max - 1));
    if (gamma < 0 || gamma >= p.gamma_max)
      throw Error("coordinate gamma = " + std::to_string(gamma) + " outside 0.." +
                  std::to_string(p.gamma_max - 1));
  }
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (std::size_t j = i + 1; j < a.coords.size(); ++j)
      if (a.coords[i] == a.coords[j])
        throw Error("coordinate list must be injective; duplicate (n, gamma) pair");
  if (a.island.ground_size() != p.island_bits)
    throw Error("island bit vector width " + std::to_string(a.island.ground_size()) +
                " does not match parameter " + std::to_string(p.island_bits));
}

Word cx_encode(const CxParams& p, const CxPoint& a) {
  cx_validate(p, a);
  const int wn = p.n_field_width(), wg = p.gamma_field_width();
  Word enc(p.enc_bits());
  for (int k = 0; k < p.list_len; ++k) {
    auto [n, gamma] = a.coords[static_cast<std::size_t>(k)];
    int base = k * (wn + wg);
    for (int b = 0; b < wn; ++b)
      if ((static_cast<unsigned long>(n) >> b) & 1) enc.set(base + b);
    for (int b = 0; b < wg; ++b)
      if ((static_cast<unsigned long>(gamma) >> b) & 1) enc.set(base + wn + b);
  }
  const int island_base = p.list_len * (wn + wg);
  for (int b = 0; b < p.island_bits; ++b)
    if (a.island.test(b)) enc.set(island_base + b);
  return enc;
}

int cx_evaluate(const CxParams& p, int n, long gamma, const CxPoint& a) {
  cx_validate(p, a);
  if (n < 0) throw Error("generator index n must be nonnegative");
  if (gamma < 0 || gamma >= p.gamma_max)
    throw Error("generator stratum gamma = " + std::to_string(gamma) + " outside 0.." +
                std::to_string(p.gamma_max - 1));
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] == std::pair<int, long>{n, gamma}) {
      if (static_cast<int>(i) >= p.island_bits)
        throw Error("point under-specified: island index " + std::to_string(i) +
                    " beyond width " + std::to_string(p.island_bits));
      return a.island.test(static_cast<int>(i)) ? 1 : 0;
    }
  Word enc = cx_encode(p, a);
  const int bit = n / 2;
  const int value = bit < enc.ground_size() && enc.test(bit) ? 1 : 0;
  return n % 2 == 0 ? value : 1 - value;
}

bool cx_stratum(const CxParams& p, const CxPoint& a, long beta) {
  cx_validate(p, a);
  for (auto [n, gamma] : a.coords)
    if (gamma >= beta) return false;
  return true;
}

CxSeparation cx_separate(const CxParams& p, const CxPoint& a1, const CxPoint& a2) {
  cx_validate(p, a1);
  cx_validate(p, a2);
  Word e1 = cx_encode(p, a1), e2 = cx_encode(p, a2);
  if (e1 == e2) throw Error("points must be distinct");

  CxSeparation out;
  Word diff = (e1 - e2) | (e2 - e1);
  out.diff_bit = diff.indices().front();
  out.n = e1.test(out.diff_bit) ? 2 * out.diff_bit : 2 * out.diff_bit + 1;

  auto stratum = [](const CxPoint& a) {
    long s = 0;
    for (auto [n, gamma] : a.coords) s = std::max(s, gamma + 1);
    return s;
  };
  out.stratum1 = stratum(a1);
  out.stratum2 = stratum(a2);
  out.beta = std::max(out.stratum1, out.stratum2);
  if (out.beta >= p.gamma_max)
    throw Error("gamma_max = " + std::to_string(p.gamma_max) +
                " is too small to exceed both strata (need " + std::to_string(out.beta) +
                ")");

  internal_check(cx_evaluate(p, out.n, out.beta, a1) == 1,
                 "separator must evaluate to 1 at the first point");
  internal_check(cx_evaluate(p, out.n, out.beta, a2) == 0,
                 "separator must evaluate to 0 at the second point");
  return out;
}

namespace {

struct SunflowerCandidate {
  int core_len;
  std::vector<int> positions;  // ascending
  std::vector<long> values;    // aligned with positions
};

}  // namespace

SunflowerResult sunflower_extract(const std::vector<std::vector<long>>& tuples,
                                  int threshold) {
  if (threshold < 2) throw Error("threshold must be at least 2");
  if (tuples.empty()) throw Error("tuple set must be nonempty");
  const int j = static_cast<int>(tuples.front().size());
  if (j < 1 || j > 10) throw Error("tuple arity must be between 1 and 10");
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != j) throw Error("tuples must all have the same arity");
    auto sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("tuple entries must be distinct within each tuple");
  }

  SunflowerResult res;
  // Tails must be nonempty, so the core length tops out at j-1.
  for (int i = j - 1; i >= 0; --i) {
    std::vector<SunflowerCandidate> candidates;
    std::vector<int> positions;
    // Enumerate position subsets of size i in lexicographic order.
    std::function<void(int)> pick = [&](int from) {
      if (static_cast<int>(positions.size()) == i) {
        std::map<std::vector<long>, int> counts;
        for (const auto& t : tuples) {
          std::vector<long> key;
          for (int pos : positions) key.push_back(t[static_cast<std::size_t>(pos)]);
          ++counts[key];
        }
        for (const auto& [vals, cnt] : counts)
          if (cnt >= threshold) candidates.push_back({i, positions, vals});
        return;
      }
      for (int pos = from; pos < j; ++pos) {
        positions.push_back(pos);
        pick(pos + 1);
        positions.pop_back();
      }
    };
    pick(0);
    // Map iteration already yields value tuples in ascending order within
    // one position set; position sets were generated lexicographically.

    for (const auto& cand : candidates) {
      std::vector<int> perm = cand.positions;
      for (int pos = 0; pos < j; ++pos)
        if (std::find(cand.positions.begin(), cand.positions.end(), pos) ==
            cand.positions.end())
          perm.push_back(pos);

      std::vector<long> used(cand.values);
      std::sort(used.begin(), used.end());
      auto is_used = [&](long v) {
        return std::binary_search(used.begin(), used.end(), v);
      };

      std::vector<int> picked;
      std::vector<std::vector<long>> tails;
      for (std::size_t idx = 0; idx < tuples.size() &&
                                static_cast<int>(picked.size()) < threshold;
           ++idx) {
        const auto& t = tuples[idx];
        bool matches = true;
        for (int k = 0; k < i && matches; ++k)
          if (t[static_cast<std::size_t>(cand.positions[static_cast<std::size_t>(k)])] !=
              cand.values[static_cast<std::size_t>(k)])
            matches = false;
        if (!matches) continue;
        std::vector<long> tail;
        bool clean = true;
        for (int k = i; k < j && clean; ++k) {
          long v = t[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
          if (is_used(v))
            clean = false;
          else
            tail.push_back(v);
        }
        if (!clean) continue;
        picked.push_back(static_cast<int>(idx));
        tails.push_back(tail);
        for (long v : tail) used.insert(std::upper_bound(used.begin(), used.end(), v), v);
      }
      if (static_cast<int>(picked.size()) >= threshold) {
        res.ok = true;
        res.core_len = i;
        res.perm = std::move(perm);
        res.core = cand.values;
        res.picked = std::move(picked);
        res.tails = std::move(tails);
        return res;
      }
    }
  }
  res.ok = false;
  res.failure = "no core admits " + std::to_string(threshold) +
                " tuples with pairwise disjoint tails at any split";
  return res;
}

std::vector<Word> enumerate_downsets(const Preorder& order) {
  if (!order.antisymmetric())
    throw Error("down-set enumeration requires a partial order (antisymmetry failed)");
  const int n = order.size();
  std::vector<Word> downs(static_cast<std::size_t>(n));
  std::vector<int> topo(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    downs[static_cast<std::size_t>(a)] = order.down(a);
    topo[static_cast<std::size_t>(a)] = a;
  }
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
    return downs[static_cast<std::size_t>(a)].count() <
           downs[static_cast<std::size_t>(b)].count();
  });

  std::vector<Word> out;
  Word current(n);
  std::function<void(int)> walk = [&](int k) {
    if (k == n) {
      out.push_back(current);
      return;
    }
    int e = topo[static_cast<std::size_t>(k)];
    walk(k + 1);  // e stays out
    // e may join only when everything strictly below it is already in.
    if ((downs[static_cast<std::size_t>(e)] - current).count() == 1) {
      current.set(e);
      walk(k + 1);
      current.set(e, false);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_upsets(const Preorder& order) {
  std::vector<Word> ups;
  for (const auto& d : enumerate_downsets(order)) ups.push_back(~d);
  std::sort(ups.begin(), ups.end());
  return ups;
}

ProductPoset product_poset(const std::vector<Preorder>& factors) {
  if (factors.empty()) throw Error("product needs at least one factor");
  ProductPoset out;
  long total = 1;
  for (const auto& f : factors) {
    if (!f.antisymmetric()) throw Error("product factors must be partial orders");
    if (f.size() == 0) throw Error("product factors must be nonempty");
    int zero = -1, one = -1;
    for (int e = 0; e < f.size(); ++e) {
      if (f.up(e).all()) zero = e;
      if (f.down(e).all()) one = e;
    }
    if (zero < 0) throw Error("product factor missing a least element");
    if (one < 0) throw Error("product factor missing a greatest element");
    out.sizes.push_back(f.size());
    out.zeros.push_back(zero);
    out.ones.push_back(one);
    total *= f.size();
    if (total > 4096) throw BudgetError("product size exceeds the guard of 4096");
  }

  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());
  auto decode = [&](int idx) {
    std::vector<int> t(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = idx % out.sizes[static_cast<std::size_t>(i)];
      idx /= out.sizes[static_cast<std::size_t>(i)];
    }
    return t;
  };

  std::vector<Word> rows(static_cast<std::size_t>(n), Word(n));
  for (int a = 0; a < n; ++a) {
    auto ta = decode(a);
    for (int b = 0; b < n; ++b) {
      auto tb = decode(b);
      bool le = true;
      for (int i = 0; i < k && le; ++i)
        le = factors[static_cast<std::size_t>(i)].leq(ta[static_cast<std::size_t>(i)],
                                                      tb[static_cast<std::size_t>(i)]);
      if (le) rows[static_cast<std::size_t>(a)].set(b);
    }
  }
  out.order = Preorder::from_relation(std::move(rows));
  return out;
}

ProductUpsetChecker::ProductUpsetChecker(const ProductPoset& product)
    : product_(&product) {
  const int n = product.order.size();
  const int k = static_cast<int>(product.sizes.size());
  strides_.assign(static_cast<std::size_t>(k), 1);
  for (int i = k - 2; i >= 0; --i)
    strides_[static_cast<std::size_t>(i)] =
        strides_[static_cast<std::size_t>(i + 1)] * product.sizes[static_cast<std::size_t>(i + 1)];

  // Near-zero points: at most one coordinate away from the bottom tuple.
  std::vector<int> near_zero, near_one;
  int bottom = 0, top = 0;
  for (int i = 0; i < k; ++i) {
    bottom += product.zeros[static_cast<std::size_t>(i)] * strides_[static_cast<std::size_t>(i)];
    top += product.ones[static_cast<std::size_t>(i)] * strides_[static_cast<std::size_t>(i)];
  }
  near_zero.push_back(bottom);
  near_one.push_back(top);
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < product.sizes[static_cast<std::size_t>(i)]; ++v) {
      if (v != product.zeros[static_cast<std::size_t>(i)])
        near_zero.push_back(bottom + (v - product.zeros[static_cast<std::size_t>(i)]) *
                                         strides_[static_cast<std::size_t>(i)]);
      if (v != product.ones[static_cast<std::size_t>(i)])
        near_one.push_back(top + (v - product.ones[static_cast<std::size_t>(i)]) *
                                     strides_[static_cast<std::size_t>(i)]);
    }

  // ∅ must be seeded: every generated word contains the top (resp. bottom)
  // point, so no meet or join of generators can reach it.
  std::vector<Word> up_gens{Word(n)}, down_gens{Word(n)};
  for (int s : near_zero) up_gens.push_back(product.order.up(s));
  for (int s : near_one) down_gens.push_back(product.order.down(s));

  up_lattice_ = lattice_close(Family::canonicalize(GroundSet(n), std::move(up_gens)));
  down_lattice_ = lattice_close(Family::canonicalize(GroundSet(n), std::move(down_gens)));
}

ProductUpsetReport ProductUpsetChecker::check(const Word& x) const {
  const ProductPoset& product = *product_;
  const int n = product.order.size();
  if (x.ground_size() != n)
    throw Error("word is over a different ground set than the product");
  for (int a = 0; a < n; ++a)
    if (x.test(a) && !product.order.up(a).subset_of(x))
      throw Error("word is not an up-set of the product at index " + std::to_string(a));

  ProductUpsetReport rep;
  rep.upset_ok = true;

  const int k = static_cast<int>(product.sizes.size());
  auto coord = [&](int idx, int i) {
    return (idx / strides_[static_cast<std::size_t>(i)]) %
           product.sizes[static_cast<std::size_t>(i)];
  };

  // Coordinate i matters when flipping it can change membership.
  for (int i = 0; i < k; ++i) {
    bool constrains = false;
    for (int a = 0; a < n && !constrains; ++a)
      for (int v = 0; v < product.sizes[static_cast<std::size_t>(i)] && !constrains; ++v) {
        int b = a + (v - coord(a, i)) * strides_[static_cast<std::size_t>(i)];
        if (x.test(a) != x.test(b)) constrains = true;
      }
    if (constrains) rep.support.push_back(i);
  }
  rep.finite_support = true;

  rep.near_zero_lattice = up_lattice_.contains(x);
  rep.near_one_lattice = down_lattice_.contains(~x);
  return rep;
}

ProductUpsetReport product_upset_check(const ProductPoset& product, const Word& x) {
  return ProductUpsetChecker(product).check(x);
}

GridChains grid_chains(int r, int c) {
  if (r < 1 || c < 1) throw Error("grid dimensions must be positive");
  if (static_cast<long>(r) * c > 4096) throw BudgetError("grid exceeds 4096 points");

  GridChains out;
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) labels.push_back(std::to_string(i) + "," + std::to_string(j));
  out.ground = GroundSet(r * c, std::move(labels));

  for (int m = 0; m <= r; ++m) {
    Word x(r * c);
    for (int i = m; i < r; ++i)
      for (int j = 0; j < c; ++j) x.set(i * c + j);
    out.xs.push_back(x);
  }
  for (int n = 0; n <= c; ++n) {
    Word y(r * c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n && j < c; ++j) y.set(i * c + j);
    out.ys.push_back(y);
  }
  return out;
}

}  // namespace pratt
