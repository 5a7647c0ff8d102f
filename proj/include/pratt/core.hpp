// Core value types: finite ground sets, words (subsets as bit vectors),
// canonical families of words, square crosswords, preorders, search budgets.
//
// Conventions used throughout:
//  - ground elements are indices 0..size-1; labels are presentation-only
//  - a word prints as a '0'/'1' string whose k-th character is element k
//  - the canonical order on words of one ground set is unsigned-integer
//    order of the bit vector with element 0 as least significant bit
//  - crossword row a is {b | (a,b) in C}, column a is {b | (b,a) in C}

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pratt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact computation refused to start or stopped because it would exceed
// a configured size or node limit.
struct BudgetError : Error {
  using Error::Error;
};

// A theory-guaranteed postcondition failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("internal contract violated: ") + what);
}

// Counts search-tree nodes; shared across the sub-searches of one call.
class Budget {
 public:
  static constexpr std::uint64_t kDefault = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}

  // False once the limit is reached; callers bail out with a partial result.
  bool tick() {
    if (used_ >= limit_) return false;
    ++used_;
    return true;
  }
  bool exhausted() const { return used_ >= limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Ground set: a size plus optional distinct element labels.
// Equality ignores labels; only the size identifies a ground set.
struct GroundSet {
  int size = 0;
  std::optional<std::vector<std::string>> labels;

  GroundSet() = default;
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> names);

  std::string label(int a) const;
  bool operator==(const GroundSet& o) const { return size == o.size; }
};

// A subset of a ground set, stored as packed 64-bit blocks.
class Word {
 public:
  Word() = default;
  explicit Word(int n);  // empty word on an n-element ground set

  static Word empty(int n) { return Word(n); }
  static Word full(int n);
  static Word singleton(int n, int a);
  static Word from_indices(int n, const std::vector<int>& elems);
  // Parses a '0'/'1' string; character k is element k.
  static Word from_string(std::string_view bits);

  int ground_size() const { return n_; }

  bool test(int a) const;
  Word& set(int a, bool value = true);

  bool none() const;
  bool any() const { return !none(); }
  bool all() const;
  int count() const;

  bool subset_of(const Word& o) const;
  bool intersects(const Word& o) const;

  Word operator&(const Word& o) const;
  Word operator|(const Word& o) const;
  Word operator-(const Word& o) const;  // set difference
  Word operator~() const;               // complement within the ground set

  bool operator==(const Word& o) const = default;
  // Canonical order: compare as little-endian unsigned integers.
  std::strong_ordering operator<=>(const Word& o) const;

  std::string to_string() const;
  std::vector<int> indices() const;
  void for_each(const std::function<void(int)>& fn) const;

  std::size_t hash() const;

 private:
  void check_same_ground(const Word& o) const;

  int n_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

// A deduplicated, canonically sorted list of words over one ground set.
class Family {
 public:
  Family() = default;

  // Sorts, deduplicates, and checks every word against the ground set.
  static Family canonicalize(GroundSet ground, std::vector<Word> words);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size; }
  const std::vector<Word>& words() const { return words_; }

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  bool contains(const Word& w) const;
  std::optional<int> index_of(const Word& w) const;

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  bool operator==(const Family& o) const {
    return ground_.size == o.ground_.size && words_ == o.words_;
  }

 private:
  GroundSet ground_;
  std::vector<Word> words_;
};

// All 2^n words of the ground set; guarded against large n.
Family full_power_set(const GroundSet& ground);

// A square 0/1 matrix over one ground set, stored by rows.
class Crossword {
 public:
  Crossword() = default;
  explicit Crossword(int n);  // all zeros

  static Crossword from_rows(std::vector<Word> rows);
  static Crossword zeros(int n) { return Crossword(n); }
  static Crossword identity(int n);
  static Crossword ones(int n);

  int ground_size() const { return n_; }

  bool at(int a, int b) const;
  void set(int a, int b, bool value = true);

  const Word& row(int a) const;
  Word col(int a) const;
  const std::vector<Word>& rows() const { return rows_; }
  std::vector<Word> columns() const;

  Word diagonal() const;
  Crossword transpose() const;

  // Cellwise union.
  Crossword operator|(const Crossword& o) const;

  bool operator==(const Crossword& o) const = default;

 private:
  int n_ = 0;
  std::vector<Word> rows_;
};

enum class Axis { row, col };

Word slice(const Crossword& c, int a, Axis axis);
Word diagonal(const Crossword& c);

// The rectangle x × y: cell (a,b) is set iff a ∈ x and b ∈ y.
Crossword product(const Word& x, const Word& y);

// A reflexive transitive relation on 0..n-1; rows give {b | a ≼ b}.
class Preorder {
 public:
  // Validates reflexivity and transitivity.
  static Preorder from_relation(std::vector<Word> rows);
  // Reflexive-transitive closure of the given a ≼ b pairs.
  static Preorder closure_of(int n, const std::vector<std::pair<int, int>>& pairs);
  static Preorder chain(int n);      // 0 ≼ 1 ≼ ... ≼ n-1
  static Preorder antichain(int n);  // equality only

  int size() const { return n_; }
  bool leq(int a, int b) const;
  const Word& up(int a) const;  // {b | a ≼ b}
  Word down(int b) const;       // {a | a ≼ b}
  bool antisymmetric() const;

 private:
  int n_ = 0;
  std::vector<Word> rows_;
};

}  // namespace pratt
