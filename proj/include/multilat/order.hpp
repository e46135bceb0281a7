#pragma once

#include <optional>
#include <vector>

#include "multilat/poset.hpp"

namespace multilat {

enum class MSide { Sup, Inf };

/// Multi-supremum (minimal upper bounds) / multi-infimum (maximal lower
/// bounds) of X. Every bound of X lies beyond some returned element; in a
/// finite poset that is automatic.
std::vector<int> multi_bounds(const Poset& p, const std::vector<int>& xs, MSide side);

struct MultiLatticeReport {
  bool is_multilattice = false;
  bool is_complete = false;
  bool is_lattice = false;
  bool is_pure = false;
  std::optional<std::pair<int, int>> witness;  // first pair with |sup| != 1 or |inf| != 1
};

/// Every finite poset is a multilattice; the report still runs the literal
/// definitional sweep over subsets of size <= 4 when the carrier is small
/// enough for that to be desk-scale. Completeness in the finite case is
/// boundedness; a lattice is the |sup| = |inf| = 1 case.
MultiLatticeReport classify(const Poset& p);

enum class SubmlKind { Full, Restricted };

/// SML-1 (Full):       x sup y and x inf y stay inside S for all x, y in S.
/// SML-2 (Restricted): both intersect S.  Bounds are taken in the ambient poset.
bool subml_check(const Poset& p, const std::vector<int>& s, SubmlKind kind);

struct Embedding {
  std::vector<int> map;    // pattern index -> host index
  std::vector<int> image;  // sorted host indices
};

/// All injective maps from pattern into host with x <= y iff f(x) <= f(y),
/// one witness per image set, sorted by image.
std::vector<Embedding> find_order_embeddings(const Poset& pattern, const Poset& host);

/// The six-element pattern: bottom, two incomparable atoms, two incomparable
/// coatoms (full bipartite between the levels), top.
const Poset& ml6_pattern();

/// Copies of the ML6 pattern inside host: 6-subsets carrying a bijection that
/// is an order isomorphism and identifies the induced bound structure, i.e.
/// (f(x) sup f(y)) meet S maps onto the pattern's x sup y (dually for inf).
/// Restricted demands SML-2, Full demands SML-1 on the image.
std::vector<Embedding> find_ml6(const Poset& host, SubmlKind kind);

enum class HomMode { Benado, FullCharacterization };

/// Benado: h(x sup y) within h(x) sup h(y), dually for inf.
/// FullCharacterization: equality against (h(x) sup h(y)) meet h(P).
bool check_homomorphism(const Poset& p, const Poset& q, const std::vector<int>& map, HomMode mode);

}  // namespace multilat
