#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multilat/error.hpp"

namespace multilat {

enum class Side { Upper, Lower };
enum class Extreme { Minimal, Maximal };

/// Finite poset over labelled elements. Elements are addressed by dense index
/// 0..n-1 externally ordered as given at construction; the full order relation
/// is kept as an n x n boolean matrix. Immutable after construction.
class Poset {
public:
  Poset() = default;  // the empty poset

  /// Builds the poset whose order is the reflexive-transitive closure of the
  /// cover pairs (lower, upper). Throws DuplicateLabel/UnknownLabel/CycleDetected.
  static Poset from_covers(std::string name, std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  /// Wraps an existing relation; the matrix must already be a partial order.
  static Poset from_leq(std::string name, std::vector<std::string> labels,
                        std::vector<std::uint8_t> leq);

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label; throws UnknownLabel. "bot"/"top" alias the Unicode bounds.
  int index_of(std::string_view label) const;
  std::optional<int> find(std::string_view label) const;
  std::vector<int> indices_of(const std::vector<std::string>& labels) const;

  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Cover pairs (a, b) with a covered by b, recomputed from the relation;
  /// sorted by (a, b).
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// { u | x <= u for all x in X } (Upper) or the order dual (Lower).
  /// X may be empty, in which case every element qualifies. Sorted output.
  std::vector<int> bounds(const std::vector<int>& xs, Side side) const;

  /// Elements of S with no strictly smaller (Minimal) / larger (Maximal)
  /// element inside S. Sorted output.
  std::vector<int> extremal(const std::vector<int>& s, Extreme which) const;

  std::optional<int> maximum() const;
  std::optional<int> minimum() const;

  Poset dual() const;
  Poset renamed(std::string new_name) const;

  bool operator==(const Poset& other) const {
    return labels_ == other.labels_ && leq_ == other.leq_;
  }

private:
  void build_lookup();

  std::string name_;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;  // row-major, leq_[a*n+b] == (a <= b)
  std::unordered_map<std::string, int> lookup_;
};

/// Canonical spelling for bound aliases: "bot" -> U+22A5, "top" -> U+22A4.
std::string normalize_label(std::string label);

std::string format_set(const Poset& p, const std::vector<int>& xs);

}  // namespace multilat
