#include "multilat/poset.hpp"

#include <algorithm>
#include <set>

namespace multilat {

const char* err_name(Err e) {
  switch (e) {
    case Err::DuplicateLabel: return "DuplicateLabel";
    case Err::UnknownLabel: return "UnknownLabel";
    case Err::CycleDetected: return "CycleDetected";
    case Err::EmptySubset: return "EmptySubset";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::UnknownName: return "UnknownName";
    case Err::DomainMismatch: return "DomainMismatch";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NotAMaximum: return "NotAMaximum";
    case Err::SizeTooLarge: return "SizeTooLarge";
    case Err::UnverifiedInput: return "UnverifiedInput";
    case Err::ClosednessViolated: return "ClosednessViolated";
    case Err::EmptySelection: return "EmptySelection";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

std::string normalize_label(std::string label) {
  if (label == "bot") return "⊥";
  if (label == "top") return "⊤";
  return label;
}

void Poset::build_lookup() {
  lookup_.clear();
  for (int i = 0; i < n_; ++i) lookup_.emplace(labels_[static_cast<std::size_t>(i)], i);
}

Poset Poset::from_covers(std::string name, std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.name_ = std::move(name);
  for (auto& l : labels) l = normalize_label(std::move(l));
  p.labels_ = std::move(labels);
  p.n_ = static_cast<int>(p.labels_.size());
  for (const auto& l : p.labels_) {
    if (l.empty()) fail(Err::DuplicateLabel, "empty label");
  }
  p.build_lookup();
  if (static_cast<int>(p.lookup_.size()) != p.n_) {
    std::set<std::string> seen;
    for (const auto& l : p.labels_) {
      if (!seen.insert(l).second) fail(Err::DuplicateLabel, "label '" + l + "' appears twice");
    }
  }

  const std::size_t n = static_cast<std::size_t>(p.n_);
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    int a = p.index_of(normalize_label(lo));
    int b = p.index_of(normalize_label(hi));
    p.leq_[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        fail(Err::CycleDetected,
             "covers relate " + p.labels_[i] + " and " + p.labels_[j] + " in both directions");
  return p;
}

Poset Poset::from_leq(std::string name, std::vector<std::string> labels,
                      std::vector<std::uint8_t> leq) {
  Poset p;
  p.name_ = std::move(name);
  p.labels_ = std::move(labels);
  p.n_ = static_cast<int>(p.labels_.size());
  p.leq_ = std::move(leq);
  const std::size_t n = static_cast<std::size_t>(p.n_);
  if (p.leq_.size() != n * n) fail(Err::ShapeMismatch, "leq matrix is not n*n");
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq_[i * n + i]) fail(Err::ShapeMismatch, "relation not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq_[i * n + j] && p.leq_[j * n + i])
        fail(Err::CycleDetected, "relation not antisymmetric");
      for (std::size_t k = 0; k < n; ++k)
        if (p.leq_[i * n + j] && p.leq_[j * n + k] && !p.leq_[i * n + k])
          fail(Err::ShapeMismatch, "relation not transitive");
    }
  }
  p.build_lookup();
  if (static_cast<int>(p.lookup_.size()) != p.n_) fail(Err::DuplicateLabel, "duplicate label");
  return p;
}

int Poset::index_of(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) {
    auto norm = normalize_label(std::string(label));
    it = lookup_.find(norm);
    if (it == lookup_.end()) fail(Err::UnknownLabel, "no element '" + std::string(label) + "'");
  }
  return it->second;
}

std::optional<int> Poset::find(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) it = lookup_.find(normalize_label(std::string(label)));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Poset::indices_of(const std::vector<std::string>& labels) const {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!lt(a, b)) continue;
      bool covered = true;
      for (int z = 0; z < n_ && covered; ++z)
        if (lt(a, z) && lt(z, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

std::vector<int> Poset::bounds(const std::vector<int>& xs, Side side) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    bool ok = true;
    for (int x : xs) {
      if (side == Side::Upper ? !leq(x, u) : !leq(u, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(u);
  }
  return out;
}

std::vector<int> Poset::extremal(const std::vector<int>& s, Extreme which) const {
  std::vector<int> out;
  for (int u : s) {
    bool ext = true;
    for (int v : s) {
      if (v == u) continue;
      if (which == Extreme::Minimal ? lt(v, u) : lt(u, v)) {
        ext = false;
        break;
      }
    }
    if (ext) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> Poset::maximum() const {
  for (int u = 0; u < n_; ++u) {
    bool top = true;
    for (int x = 0; x < n_ && top; ++x) top = leq(x, u);
    if (top) return u;
  }
  return std::nullopt;
}

std::optional<int> Poset::minimum() const {
  for (int u = 0; u < n_; ++u) {
    bool bottom = true;
    for (int x = 0; x < n_ && bottom; ++x) bottom = leq(u, x);
    if (bottom) return u;
  }
  return std::nullopt;
}

Poset Poset::dual() const {
  Poset p;
  p.name_ = name_ + "^op";
  p.labels_ = labels_;
  p.n_ = n_;
  const std::size_t n = static_cast<std::size_t>(n_);
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.leq_[i * n + j] = leq_[j * n + i];
  p.build_lookup();
  return p;
}

Poset Poset::renamed(std::string new_name) const {
  Poset p = *this;
  p.name_ = std::move(new_name);
  return p;
}

std::string format_set(const Poset& p, const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += p.label(xs[i]);
  }
  out += "}";
  return out;
}

}  // namespace multilat
