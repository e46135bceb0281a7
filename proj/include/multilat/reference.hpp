#pragma once

#include <cstdint>
#include <vector>

#include "multilat/funcspace.hpp"

namespace multilat {

// Brute-force reference routines. These deliberately avoid the optimized code
// paths so that search and bound computations can be checked against an
// independent implementation (the reproduce command and the test suites both
// rely on that independence).

/// Minimal upper / maximal lower bounds of fs computed by scanning every
/// function of the space carrier^domain.
std::vector<ValuedFunction> reference_multi_bounds(const Poset& p,
                                                   const std::vector<ValuedFunction>& fs,
                                                   MSide side);

/// Every product table on the carrier that verify_pocrim accepts (with the
/// derived residual table attached), found by enumerating all fillings of the
/// non-identity cells. The identity row/column is fixed up front; everything
/// else is filtered, not propagated. Sorted.
std::vector<PocrimTables> reference_all_pocrims(const Poset& p, int top);

/// Classical concept scan of a binary context: every (extent, intent) pair
/// with A' = B and B' = A, found by enumerating all object subsets.
/// incidence is row-major objects x attributes. Sorted by extent bitset.
std::vector<std::pair<std::vector<int>, std::vector<int>>> reference_crisp_concepts(
    int n_objects, int n_attributes, const std::vector<std::uint8_t>& incidence);

}  // namespace multilat
