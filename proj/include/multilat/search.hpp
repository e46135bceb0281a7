#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "multilat/algebra.hpp"

namespace multilat {

struct SearchConfig {
  std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;  // >= 1
  int jobs = 1;
};

struct PocrimSearchResult {
  std::vector<PocrimTables> found;  // lexicographic in table entries
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

/// All product tables making (P, <=, mul, derived ->, top) a pocrim.
/// Backtracking fills the upper triangle (commutativity) in a fixed
/// most-constrained-cell-first order; propagators: identity row, P1 candidate
/// bounds, monotonicity, associativity over decided triples, residual
/// existence on completed rows. Leaves are re-checked with verify_pocrim.
/// No isomorphism quotient. Deterministic for any job count.
PocrimSearchResult enumerate_pocrims(const Poset& p, int top, SearchConfig cfg = {});

enum ImpAxiom : unsigned {
  kAxiomP3 = 1u << 0,          // a <= b  iff  a->b = top
  kAxiomP4Imp = 1u << 1,       // -> antitone left, isotone right
  kAxiomP5 = 1u << 2,          // a->(b->c) = b->(a->c)
  kAxiomWeakening = 1u << 3,   // b <= a->b
  kAxiomTopIdentity = 1u << 4, // top->x = x
};
constexpr unsigned kAllImpAxioms =
    kAxiomP3 | kAxiomP4Imp | kAxiomP5 | kAxiomWeakening | kAxiomTopIdentity;

struct ImpSearchResult {
  std::vector<OpTable> found;
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

/// All implication tables satisfying the selected axiom subset.
ImpSearchResult enumerate_implications(const Poset& p, int top, unsigned axioms,
                                       SearchConfig cfg = {});

/// All bounded posets on n elements, one representative per isomorphism
/// class, generated by extension of the strict middle order with
/// lexicographically-minimal-form rejection. 1 <= n <= 7.
std::vector<Poset> enumerate_bounded_posets(int n);

/// All posets on n elements that have a maximum, one per isomorphism class.
/// 1 <= n <= 6.
std::vector<Poset> enumerate_posets_with_maximum(int n);

}  // namespace multilat
