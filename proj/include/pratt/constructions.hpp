// Generators for the example structures studied by the analysis modules:
// order-derived families, the chain-with-top family, coordinate families on
// power-set grounds, families indexed by an antichain, the two-level
// counterexample kernel with its stratified generators, sunflower extraction
// from tuple sets, product-of-posets checks, and grid chains.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pratt/core.hpp"

namespace pratt {

enum class OrderFlavor { down, up };

// All down-sets (or up-sets) of a preorder; brute-force scan, size ≤ 16.
Family order_comonoid(const Preorder& order, OrderFlavor flavor);

struct LabeledFamily {
  GroundSet ground;
  Family family;
  // Generators in definition order, before canonical sorting.
  std::vector<Word> generators;
};

// Chain 0 < 1 < ... < n-1 < top on n+1 elements; every down-set except the
// one omitting only the top. Not T1, not discrete, yet closed.
LabeledFamily omega_infty(int n);

enum class CoordinateFlavor { plain, with_complements };

// Ground set = all subsets of {0..m-1} (point index = subset bitmask);
// generators e_i = { points containing i }, plus complements if asked.
LabeledFamily coordinate_family(int m, CoordinateFlavor flavor);

// Ground set = the members of an antichain of subsets of {0..m-1}, in the
// given order; generators e_i = { members containing i }, constants dropped.
LabeledFamily antichain_family(const std::vector<std::vector<int>>& members);

// Parameters of the two-level kernel. Points pair an injective list of
// (n, gamma) coordinates with an island bit vector; enc serializes the pair
// list as fixed-width binary fields (n then gamma, least significant bit
// first) in list order, followed by the island bits.
struct CxParams {
  int list_len = 1;     // length of the coordinate list
  int n_max = 2;        // n coordinates range over 0..n_max-1
  long gamma_max = 2;   // gamma coordinates range over 0..gamma_max-1
  int island_bits = 1;  // width of the island bit vector

  int n_field_width() const;
  int gamma_field_width() const;
  int enc_bits() const;
};

struct CxPoint {
  std::vector<std::pair<int, long>> coords;  // injective (n, gamma) list
  Word island;                               // island_bits wide
};

void cx_validate(const CxParams& p, const CxPoint& a);

// The serialized bit vector of a point; injective for fixed parameters.
Word cx_encode(const CxParams& p, const CxPoint& a);

// Generator value at a point: the island bit when (n, gamma) occurs in the
// coordinate list, otherwise bit ⌊n/2⌋ of the encoding, negated for odd n.
int cx_evaluate(const CxParams& p, int n, long gamma, const CxPoint& a);

// True when every gamma in the coordinate list is below beta.
bool cx_stratum(const CxParams& p, const CxPoint& a, long beta);

struct CxSeparation {
  int n = 0;        // generator index separating the points
  long beta = 0;    // stratum bound above both points
  int diff_bit = 0; // first differing encoding bit
  long stratum1 = 0, stratum2 = 0;
};

// Picks (n, beta) with cx_evaluate(n, beta, a1) = 1 and = 0 at a2.
// Errors when gamma_max cannot exceed both strata.
CxSeparation cx_separate(const CxParams& p, const CxPoint& a1, const CxPoint& a2);

struct SunflowerResult {
  bool ok = false;
  std::string failure;      // set when ok is false
  int core_len = 0;         // i: shared coordinate count after permutation
  std::vector<int> perm;    // perm[new position] = original position
  std::vector<long> core;   // shared values at positions 0..i-1
  // Indices into the input of the extracted tuples (exactly the threshold
  // many), and their tails: pairwise disjoint, absent from every other
  // extracted tuple.
  std::vector<int> picked;
  std::vector<std::vector<long>> tails;
};

// Finds the largest i admitting ≥ threshold tuples that agree on some
// common i positions, permutes those positions to the front, and greedily
// extracts threshold tuples with pairwise disjoint tails. Candidate cores
// are tried i-descending; failure is reported only after all candidates.
// Every tuple must have distinct entries; threshold ≥ 2.
SunflowerResult sunflower_extract(const std::vector<std::vector<long>>& tuples,
                                  int threshold);

// All down-sets (or up-sets) of a partial order, enumerated without scanning
// the full power set; requires antisymmetry.
std::vector<Word> enumerate_downsets(const Preorder& order);
std::vector<Word> enumerate_upsets(const Preorder& order);

struct ProductPoset {
  Preorder order;              // componentwise order on tuple indices
  std::vector<int> sizes;      // factor sizes, first factor most significant
  std::vector<int> zeros, ones;  // least/greatest element per factor
};

// Componentwise product of posets that each have a least and a greatest
// element; product size guarded at 4096.
ProductPoset product_poset(const std::vector<Preorder>& factors);

struct ProductUpsetReport {
  bool upset_ok = false;        // input is an up-set of the product
  bool finite_support = true;   // always true at finite index sets
  std::vector<int> support;     // coordinates the up-set actually constrains
  bool near_zero_lattice = false;  // x ∈ lattice of ↑(s), s near zero, ∅-seeded
  bool near_one_lattice = false;   // ¬x ∈ lattice of ↓(s'), s' near one, ∅-seeded
};

// Checks up-sets of a product against the three finite closure conditions:
// finite support, membership in the lattice generated by up-sets of
// near-zero points (at most one non-least coordinate), and dual membership
// for the complement. The two generated lattices are built once per
// product, so sweeping many up-sets of the same product stays cheap.
class ProductUpsetChecker {
 public:
  explicit ProductUpsetChecker(const ProductPoset& product);
  ProductUpsetReport check(const Word& x) const;

 private:
  const ProductPoset* product_;
  std::vector<int> strides_;
  Family up_lattice_, down_lattice_;
};

// One-shot convenience wrapper around ProductUpsetChecker.
ProductUpsetReport product_upset_check(const ProductPoset& product, const Word& x);

struct GridChains {
  GroundSet ground;       // r·c points, point (i,j) at index i·c + j
  std::vector<Word> xs;   // x_m = rows ≥ m, m = 0..r (descending to ∅)
  std::vector<Word> ys;   // y_n = cols < n, n = 0..c (ascending to A)
};

GridChains grid_chains(int r, int c);

}  // namespace pratt
