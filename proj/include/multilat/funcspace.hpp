#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multilat/algebra.hpp"

namespace multilat {

/// A map from a finite ordered index set into a carrier, stored densely.
/// Domain equality is by label sequence.
struct ValuedFunction {
  std::vector<std::string> domain;
  std::vector<int> values;  // element indices, parallel to domain

  bool operator==(const ValuedFunction&) const = default;
  bool operator<(const ValuedFunction& o) const { return values < o.values; }
};

bool same_domain(const ValuedFunction& f, const ValuedFunction& g);
void require_same_domain(const ValuedFunction& f, const ValuedFunction& g);

enum class PointwiseOp { Mul, Imp };

ValuedFunction pointwise(const Algebra& alg, PointwiseOp op, const ValuedFunction& f1,
                         const ValuedFunction& f2);
ValuedFunction apply_table(const OpTable& t, const ValuedFunction& f1, const ValuedFunction& f2);

/// f1 <= f2 componentwise.
bool vf_leq(const Poset& p, const ValuedFunction& f1, const ValuedFunction& f2);

ValuedFunction constant_function(const std::vector<std::string>& domain, int value);

/// Rank/unrank of functions domain -> carrier, big-endian in domain order.
std::uint64_t function_count(int carrier_size, std::size_t domain_size);
std::uint64_t rank_of(const ValuedFunction& f, int carrier_size);
ValuedFunction unrank(std::uint64_t rank, int carrier_size,
                      const std::vector<std::string>& domain);

struct ChoiceBoundsResult {
  std::vector<ValuedFunction> functions;  // sorted by value vector
  bool truncated = false;
};

/// All choice functions picking one member of the pointwise multi-bound sets;
/// over a finite carrier these are exactly the minimal upper / maximal lower
/// bounds of fs in the function space.
ChoiceBoundsResult choice_bounds(const Poset& p, const std::vector<ValuedFunction>& fs,
                                 MSide side, std::size_t cap = 100000);

struct VerifyMode {
  bool exhaustive = true;
  int samples = 0;          // used when !exhaustive
  std::uint64_t seed = 0;
};

/// Lifts the algebra pointwise to carrier^domain and verifies the pocrim laws
/// there: monoid + adjointness over all (or sampled) function triples, the
/// bound constants, and agreement of choice_bounds with a brute-force
/// minimal-bound scan on sampled pairs. Exhaustive mode requires
/// |A|^|X| <= fn_budget (the triple sweep is cubic in that count).
VerificationReport verify_pointwise_pocrim(const Algebra& alg,
                                           const std::vector<std::string>& domain,
                                           VerifyMode mode, std::size_t fn_budget = 512);

/// The lifted algebra itself: carrier = all functions domain -> alg's carrier,
/// in rank order, with pointwise order and tables. Labels are value tuples.
Algebra pointwise_algebra(const Algebra& alg, const std::vector<std::string>& domain,
                          std::size_t fn_budget = 4096);

}  // namespace multilat
