#pragma once

#include <ostream>
#include <string>

#include "multilat/concepts.hpp"
#include "multilat/poset.hpp"

namespace multilat {

/// Hasse diagram: one node per element, one edge per cover pair, drawn
/// bottom-to-top. Node and edge order follow element indices.
void poset_to_dot(const Poset& p, std::ostream& os);

/// Concept order diagram; node labels show extent and intent value tuples.
void concepts_to_dot(const GaloisPair& pair, const ConceptSystem& sys, std::ostream& os);

std::string dot_string(const Poset& p);

}  // namespace multilat
