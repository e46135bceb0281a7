#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "multilat/poset.hpp"

namespace multilat::test {

inline std::vector<int> ix(const Poset& p, std::initializer_list<const char*> labels) {
  std::vector<int> out;
  for (const char* l : labels) out.push_back(p.index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> labels_of(const Poset& p, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(p.label(x));
  return out;
}

/// order restricted to a subset, relabelled with the host labels
inline Poset induced_subposet(const Poset& host, const std::vector<int>& subset,
                              const std::string& name) {
  const int k = static_cast<int>(subset.size());
  std::vector<std::string> labels;
  for (int x : subset) labels.push_back(host.label(x));
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      leq[static_cast<std::size_t>(i) * k + j] =
          host.leq(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]) ? 1
                                                                                             : 0;
  return Poset::from_leq(name, std::move(labels), std::move(leq));
}

}  // namespace multilat::test
