#include "pratt/core.hpp"

#include <algorithm>
#include <bit>

namespace pratt {

namespace {

constexpr int kBlockBits = 64;

int block_count(int n) { return (n + kBlockBits - 1) / kBlockBits; }

void check_index(int a, int n, const char* what) {
  if (a < 0 || a >= n)
    throw Error(std::string(what) + ": element index " + std::to_string(a) +
                " out of range for ground size " + std::to_string(n));
}

}  // namespace

GroundSet::GroundSet(int n) : size(n) {
  if (n < 0) throw Error("ground set size must be nonnegative");
}

GroundSet::GroundSet(int n, std::vector<std::string> names) : GroundSet(n) {
  if (static_cast<int>(names.size()) != n)
    throw Error("label count " + std::to_string(names.size()) +
                " does not match ground size " + std::to_string(n));
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("ground set labels must be distinct");
  labels = std::move(names);
}

std::string GroundSet::label(int a) const {
  check_index(a, size, "label");
  if (labels) return (*labels)[a];
  return std::to_string(a);
}

Word::Word(int n) : n_(n), blocks_(block_count(n), 0) {
  if (n < 0) throw Error("word ground size must be nonnegative");
}

Word Word::full(int n) {
  Word w(n);
  for (auto& b : w.blocks_) b = ~std::uint64_t{0};
  if (n % kBlockBits != 0 && !w.blocks_.empty())
    w.blocks_.back() &= (std::uint64_t{1} << (n % kBlockBits)) - 1;
  return w;
}

Word Word::singleton(int n, int a) {
  Word w(n);
  w.set(a);
  return w;
}

Word Word::from_indices(int n, const std::vector<int>& elems) {
  Word w(n);
  for (int a : elems) w.set(a);
  return w;
}

Word Word::from_string(std::string_view bits) {
  Word w(static_cast<int>(bits.size()));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      w.set(static_cast<int>(k));
    else if (bits[k] != '0')
      throw Error(std::string("bad character '") + bits[k] + "' in word bitstring");
  }
  return w;
}

bool Word::test(int a) const {
  check_index(a, n_, "test");
  return (blocks_[a / kBlockBits] >> (a % kBlockBits)) & 1u;
}

Word& Word::set(int a, bool value) {
  check_index(a, n_, "set");
  std::uint64_t mask = std::uint64_t{1} << (a % kBlockBits);
  if (value)
    blocks_[a / kBlockBits] |= mask;
  else
    blocks_[a / kBlockBits] &= ~mask;
  return *this;
}

bool Word::none() const {
  for (auto b : blocks_)
    if (b) return false;
  return true;
}

bool Word::all() const { return *this == full(n_); }

int Word::count() const {
  int c = 0;
  for (auto b : blocks_) c += std::popcount(b);
  return c;
}

void Word::check_same_ground(const Word& o) const {
  if (n_ != o.n_)
    throw Error("words over different ground sets (" + std::to_string(n_) + " vs " +
                std::to_string(o.n_) + ")");
}

bool Word::subset_of(const Word& o) const {
  check_same_ground(o);
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    if (blocks_[k] & ~o.blocks_[k]) return false;
  return true;
}

bool Word::intersects(const Word& o) const {
  check_same_ground(o);
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    if (blocks_[k] & o.blocks_[k]) return true;
  return false;
}

Word Word::operator&(const Word& o) const {
  check_same_ground(o);
  Word r(n_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = blocks_[k] & o.blocks_[k];
  return r;
}

Word Word::operator|(const Word& o) const {
  check_same_ground(o);
  Word r(n_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = blocks_[k] | o.blocks_[k];
  return r;
}

Word Word::operator-(const Word& o) const {
  check_same_ground(o);
  Word r(n_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = blocks_[k] & ~o.blocks_[k];
  return r;
}

Word Word::operator~() const {
  Word r(n_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = ~blocks_[k];
  if (n_ % kBlockBits != 0 && !r.blocks_.empty())
    r.blocks_.back() &= (std::uint64_t{1} << (n_ % kBlockBits)) - 1;
  return r;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  check_same_ground(o);
  for (std::size_t k = blocks_.size(); k-- > 0;) {
    if (blocks_[k] != o.blocks_[k])
      return blocks_[k] < o.blocks_[k] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Word::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int a = 0; a < n_; ++a)
    if (test(a)) s[static_cast<std::size_t>(a)] = '1';
  return s;
}

std::vector<int> Word::indices() const {
  std::vector<int> out;
  for_each([&](int a) { out.push_back(a); });
  return out;
}

void Word::for_each(const std::function<void(int)>& fn) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    std::uint64_t b = blocks_[k];
    while (b) {
      int bit = std::countr_zero(b);
      fn(static_cast<int>(k) * kBlockBits + bit);
      b &= b - 1;
    }
  }
}

std::size_t Word::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (auto b : blocks_) mix(b);
  return static_cast<std::size_t>(h);
}

Family Family::canonicalize(GroundSet ground, std::vector<Word> words) {
  for (const auto& w : words)
    if (w.ground_size() != ground.size)
      throw Error("word over ground size " + std::to_string(w.ground_size()) +
                  " in family over ground size " + std::to_string(ground.size));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  Family f;
  f.ground_ = std::move(ground);
  f.words_ = std::move(words);
  return f;
}

bool Family::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<int> Family::index_of(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<int>(it - words_.begin());
}

Family full_power_set(const GroundSet& ground) {
  if (ground.size > 20)
    throw BudgetError("refusing to enumerate 2^" + std::to_string(ground.size) + " words");
  std::vector<Word> words;
  words.reserve(std::size_t{1} << ground.size);
  Word w(ground.size);
  words.push_back(w);
  // Little-endian increment enumerates words already in canonical order.
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << ground.size); ++v) {
    Word u(ground.size);
    for (int a = 0; a < ground.size; ++a)
      if ((v >> a) & 1) u.set(a);
    words.push_back(u);
  }
  return Family::canonicalize(ground, std::move(words));
}

Crossword::Crossword(int n) : n_(n), rows_(static_cast<std::size_t>(n), Word(n)) {
  if (n < 0) throw Error("crossword ground size must be nonnegative");
}

Crossword Crossword::from_rows(std::vector<Word> rows) {
  Crossword c(static_cast<int>(rows.size()));
  for (const auto& r : rows)
    if (r.ground_size() != c.n_)
      throw Error("crossword rows must be words over a ground set of the same size");
  c.rows_ = std::move(rows);
  return c;
}

Crossword Crossword::identity(int n) {
  Crossword c(n);
  for (int a = 0; a < n; ++a) c.set(a, a);
  return c;
}

Crossword Crossword::ones(int n) {
  Crossword c(n);
  for (int a = 0; a < n; ++a) c.rows_[static_cast<std::size_t>(a)] = Word::full(n);
  return c;
}

bool Crossword::at(int a, int b) const {
  check_index(a, n_, "crossword row");
  return rows_[static_cast<std::size_t>(a)].test(b);
}

void Crossword::set(int a, int b, bool value) {
  check_index(a, n_, "crossword row");
  rows_[static_cast<std::size_t>(a)].set(b, value);
}

const Word& Crossword::row(int a) const {
  check_index(a, n_, "row");
  return rows_[static_cast<std::size_t>(a)];
}

Word Crossword::col(int a) const {
  check_index(a, n_, "col");
  Word c(n_);
  for (int b = 0; b < n_; ++b)
    if (rows_[static_cast<std::size_t>(b)].test(a)) c.set(b);
  return c;
}

std::vector<Word> Crossword::columns() const {
  std::vector<Word> cols;
  cols.reserve(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) cols.push_back(col(a));
  return cols;
}

Word Crossword::diagonal() const {
  Word d(n_);
  for (int a = 0; a < n_; ++a)
    if (rows_[static_cast<std::size_t>(a)].test(a)) d.set(a);
  return d;
}

Crossword Crossword::transpose() const { return from_rows(columns()); }

Crossword Crossword::operator|(const Crossword& o) const {
  if (n_ != o.n_) throw Error("crosswords over different ground sets");
  Crossword r(n_);
  for (int a = 0; a < n_; ++a)
    r.rows_[static_cast<std::size_t>(a)] =
        rows_[static_cast<std::size_t>(a)] | o.rows_[static_cast<std::size_t>(a)];
  return r;
}

Word slice(const Crossword& c, int a, Axis axis) {
  return axis == Axis::row ? c.row(a) : c.col(a);
}

Word diagonal(const Crossword& c) { return c.diagonal(); }

Crossword product(const Word& x, const Word& y) {
  if (x.ground_size() != y.ground_size())
    throw Error("product of words over different ground sets");
  Crossword c(x.ground_size());
  for (int a = 0; a < x.ground_size(); ++a)
    if (x.test(a))
      for (int b = 0; b < y.ground_size(); ++b)
        if (y.test(b)) c.set(a, b);
  return c;
}

Preorder Preorder::from_relation(std::vector<Word> rows) {
  Preorder p;
  p.n_ = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (r.ground_size() != p.n_) throw Error("preorder rows must be square");
  p.rows_ = std::move(rows);
  for (int a = 0; a < p.n_; ++a)
    if (!p.rows_[static_cast<std::size_t>(a)].test(a))
      throw Error("preorder not reflexive at element " + std::to_string(a));
  for (int a = 0; a < p.n_; ++a)
    for (int b : p.rows_[static_cast<std::size_t>(a)].indices())
      if (!p.rows_[static_cast<std::size_t>(b)].subset_of(p.rows_[static_cast<std::size_t>(a)]))
        throw Error("preorder not transitive via " + std::to_string(a) + " ≼ " +
                    std::to_string(b));
  return p;
}

Preorder Preorder::closure_of(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Word> rows(static_cast<std::size_t>(n), Word(n));
  for (int a = 0; a < n; ++a) rows[static_cast<std::size_t>(a)].set(a);
  for (auto [a, b] : pairs) {
    check_index(a, n, "preorder pair");
    check_index(b, n, "preorder pair");
    rows[static_cast<std::size_t>(a)].set(b);
  }
  // Floyd-Warshall style saturation.
  for (int via = 0; via < n; ++via)
    for (int a = 0; a < n; ++a)
      if (rows[static_cast<std::size_t>(a)].test(via))
        rows[static_cast<std::size_t>(a)] =
            rows[static_cast<std::size_t>(a)] | rows[static_cast<std::size_t>(via)];
  return from_relation(std::move(rows));
}

Preorder Preorder::chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a + 1 < n; ++a) pairs.emplace_back(a, a + 1);
  return closure_of(n, pairs);
}

Preorder Preorder::antichain(int n) { return closure_of(n, {}); }

bool Preorder::leq(int a, int b) const {
  check_index(a, n_, "leq");
  return rows_[static_cast<std::size_t>(a)].test(b);
}

const Word& Preorder::up(int a) const {
  check_index(a, n_, "up");
  return rows_[static_cast<std::size_t>(a)];
}

Word Preorder::down(int b) const {
  check_index(b, n_, "down");
  Word d(n_);
  for (int a = 0; a < n_; ++a)
    if (rows_[static_cast<std::size_t>(a)].test(b)) d.set(a);
  return d;
}

bool Preorder::antisymmetric() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < a; ++b)
      if (leq(a, b) && leq(b, a)) return false;
  return true;
}

}  // namespace pratt
