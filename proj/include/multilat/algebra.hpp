#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multilat/order.hpp"
#include "multilat/poset.hpp"

namespace multilat {

/// n x n table of element indices over a poset carrier; rows and columns in
/// element order.
class OpTable {
public:
  OpTable() = default;
  explicit OpTable(int n, int fill = -1) : n_(n), v_(static_cast<std::size_t>(n) * n, fill) {}
  int size() const { return n_; }
  int at(int a, int b) const { return v_[static_cast<std::size_t>(a) * n_ + b]; }
  void set(int a, int b, int v) { v_[static_cast<std::size_t>(a) * n_ + b] = v; }
  bool operator==(const OpTable&) const = default;
  bool operator<(const OpTable& o) const { return v_ < o.v_; }
  const std::vector<int>& flat() const { return v_; }

private:
  int n_ = 0;
  std::vector<int> v_;
};

/// A pocrim candidate as it appears in files: poset, designated top (monoid
/// identity), optional bottom, product table, optional implication table.
/// Nothing here is assumed verified; run verify_pocrim / verify_rml.
struct Algebra {
  Poset poset;
  int top = -1;
  std::optional<int> bottom;
  std::optional<OpTable> mul;
  std::optional<OpTable> imp;

  int mul_at(int a, int b) const { return mul->at(a, b); }
  int imp_at(int a, int b) const { return imp->at(a, b); }
};

struct PocrimTables {
  OpTable mul;
  OpTable imp;
  bool operator==(const PocrimTables&) const = default;
  bool operator<(const PocrimTables& o) const {
    return mul < o.mul || (mul == o.mul && imp < o.imp);
  }
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // lexicographically first counterexample, or empty
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string to_string() const;
};

/// max{ c | a (.) c <= b }, absent when the set has no greatest element.
std::optional<int> residual_of(const Poset& p, const OpTable& mul, int a, int b);

/// Residual table for every pair, or nullopt with the first failing pair.
std::optional<OpTable> derive_implication(const Poset& p, const OpTable& mul,
                                          std::pair<int, int>* first_failure = nullptr);

/// Commutative-monoid laws for (A, mul, top), top as poset maximum, bottom as
/// minimum when designated, residual existence, and adjointness of the stored
/// (or derived) implication, exhaustively over triples.
VerificationReport verify_pocrim(const Algebra& alg);

/// verify_pocrim plus the complete-multilattice condition on the carrier
/// (finite case: bounded).
VerificationReport verify_rml(const Algebra& alg);

/// P1..P7, exhaustively over tuples. Meaningful for verified pocrims; still
/// runs (advisory) otherwise.
VerificationReport check_properties(const Algebra& alg);

/// Stacks b above a with the two tops identified; carrier labels are prefixed
/// "a." / "b.". Requires both inputs to pass verify_pocrim and a to be bounded
/// below; the result is a pocrim of order |A|+|B|-1.
Algebra ordinal_sum(const Algebra& a, const Algebra& b);

enum class BuiltinKind { PosetOnly, Pocrim, ImpTableOnly };

/// Catalog names: ml6-poset, fig2-poset, rml7, two, chain-<k>-godel,
/// chain-<k>-lukasiewicz, ml6-imp-table.
BuiltinKind builtin_kind(const std::string& name);
Poset builtin_poset(const std::string& name);
Algebra builtin_algebra(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace multilat
