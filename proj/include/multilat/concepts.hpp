#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "multilat/funcspace.hpp"

namespace multilat {

/// Default candidate budget for intent scans and exhaustive Galois-law
/// verification; MULTILAT_BUDGET overrides it.
std::size_t enumeration_budget();

struct CrispContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::uint8_t> incidence;  // row-major objects x attributes

  bool has(int g, int m) const {
    return incidence[static_cast<std::size_t>(g) * attributes.size() + m] != 0;
  }
};

CrispContext make_context(std::vector<std::string> objects, std::vector<std::string> attributes,
                          const std::vector<std::pair<std::string, std::string>>& incidence);

/// An antitone pair (phi, psi) between the function spaces A1^G and A2^M.
/// Three sources: a crisp context over the two-chain, the residuum-negation
/// pair h |-> h -> r on a single algebra, or explicit lookup tables indexed by
/// function rank. The Galois law is checked by verify_galois, never assumed.
class GaloisPair {
public:
  enum class Rule { Crisp, ResiduumNegation, ExplicitTables };

  static GaloisPair crisp(CrispContext ctx);
  static GaloisPair residuum_negation(Algebra alg, std::vector<std::string> domain,
                                      ValuedFunction r);
  static GaloisPair explicit_tables(Algebra a1, Algebra a2, std::vector<std::string> objects,
                                    std::vector<std::string> attributes,
                                    std::vector<std::vector<int>> phi_table,
                                    std::vector<std::vector<int>> psi_table);

  Rule rule() const { return rule_; }
  const Algebra& alg1() const { return a1_; }
  const Algebra& alg2() const { return a2_; }
  const std::vector<std::string>& objects() const { return g_; }
  const std::vector<std::string>& attributes() const { return m_; }
  const CrispContext* context() const { return ctx_.get(); }

  ValuedFunction phi(const ValuedFunction& h) const;
  ValuedFunction psi(const ValuedFunction& f) const;

  std::uint64_t extent_space() const { return function_count(a1_.poset.size(), g_.size()); }
  std::uint64_t intent_space() const { return function_count(a2_.poset.size(), m_.size()); }

  /// phi with one table entry overwritten; for fault-injection tests.
  GaloisPair perturbed(std::uint64_t h_rank, ValuedFunction new_value) const;

private:
  GaloisPair() = default;
  Rule rule_ = Rule::Crisp;
  Algebra a1_, a2_;
  std::vector<std::string> g_, m_;
  std::shared_ptr<CrispContext> ctx_;
  ValuedFunction r_;
  std::vector<std::vector<int>> phi_table_, psi_table_;  // rank -> value vector
};

/// Law, phi-psi-phi / psi-phi-psi collapses, and the closure-operator law for
/// both composites. Exhaustive mode covers every (h, f) pair within budget;
/// the quadratic closure-law sweep uses at most the first 256 functions per
/// side.
VerificationReport verify_galois(const GaloisPair& pair, VerifyMode mode,
                                 std::size_t budget = enumeration_budget());

struct Concept {
  ValuedFunction extent;
  ValuedFunction intent;
  bool operator==(const Concept&) const = default;
};

struct ConceptSystem {
  std::vector<Concept> concepts;  // sorted by extent value vector
  std::vector<std::size_t> ext;   // indices (all of them; extents are the keys)

  int size() const { return static_cast<int>(concepts.size()); }
  int index_of_extent(const ValuedFunction& h) const;  // -1 when absent

  /// Concept order: by extent, componentwise.
  bool leq(const Poset& carrier1, int i, int j) const {
    return vf_leq(carrier1, concepts[static_cast<std::size_t>(i)].extent,
                  concepts[static_cast<std::size_t>(j)].extent);
  }

  /// The concept poset with labels c0..c{k-1} in list order.
  Poset order_poset(const Poset& carrier1, const std::string& name) const;
};

/// Fixed points (psi f, f) scanned over the intent space; requires the scan
/// size within budget and the Galois law to hold (verified first).
ConceptSystem enumerate_concepts(const GaloisPair& pair,
                                 std::size_t budget = enumeration_budget());

/// Multi-inf: {(h, phi h) | h in inf of extents}; multi-sup dually via the
/// inf of intents.每 returned pair is checked to be a concept and an extreme
/// bound within the system.
std::vector<Concept> concept_multi_bounds(const GaloisPair& pair, const ConceptSystem& sys,
                                          const std::vector<int>& j_indices, MSide side);

enum class TensorOp { Tensor, Arrow };

/// Side 1: psi phi (u . v) / psi phi (u -> v); side 2 with phi psi.
ValuedFunction closed_tensor(const GaloisPair& pair, int side, TensorOp op,
                             const ValuedFunction& u, const ValuedFunction& v);

enum class ClosedSide { Ext, Int };

/// Ext closed under ->1 (pointwise in A1), Int under ->2.
bool check_closedness(const GaloisPair& pair, const ConceptSystem& sys, ClosedSide which);

/// The concept algebra of the closed system: carrier = concepts ordered by
/// extent, product/implication via the closed tensor and arrow. Refuses with
/// ClosednessViolated when either hypothesis fails.
Algebra build_concept_rml(const GaloisPair& pair, const ConceptSystem& sys);

struct ConceptTableDiagnostics {
  OpTable tensor;
  OpTable arrow;
  std::vector<std::string> adjointness_violations;
};

/// Diagnostic variant: emits the tables regardless of closedness, with the
/// list of adjointness violations over concept triples.
ConceptTableDiagnostics concept_tables_diagnostic(const GaloisPair& pair,
                                                  const ConceptSystem& sys);

}  // namespace multilat
