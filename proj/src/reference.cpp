#include "multilat/reference.hpp"

#include <algorithm>

namespace multilat {

std::vector<ValuedFunction> reference_multi_bounds(const Poset& p,
                                                   const std::vector<ValuedFunction>& fs,
                                                   MSide side) {
  if (fs.empty()) fail(Err::EmptySubset, "need at least one function");
  const auto& domain = fs.front().domain;
  const int n = p.size();
  std::uint64_t total = function_count(n, domain.size());
  if (total > 2'000'000) fail(Err::BudgetExceeded, "reference scan too large");

  std::vector<ValuedFunction> bounds;
  for (std::uint64_t r = 0; r < total; ++r) {
    ValuedFunction g = unrank(r, n, domain);
    bool ok = true;
    for (const auto& f : fs) {
      if (side == MSide::Sup ? !vf_leq(p, f, g) : !vf_leq(p, g, f)) {
        ok = false;
        break;
      }
    }
    if (ok) bounds.push_back(std::move(g));
  }
  std::vector<ValuedFunction> out;
  for (const auto& g : bounds) {
    bool extreme = true;
    for (const auto& h : bounds) {
      if (h == g) continue;
      if (side == MSide::Sup ? (vf_leq(p, h, g) && !vf_leq(p, g, h))
                             : (vf_leq(p, g, h) && !vf_leq(p, h, g))) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PocrimTables> reference_all_pocrims(const Poset& p, int top) {
  const int n = p.size();
  if (auto mx = p.maximum(); !mx || *mx != top)
    fail(Err::NotAMaximum, "designated top is not the maximum");

  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != top && b != top) cells.emplace_back(a, b);

  Algebra alg;
  alg.poset = p;
  alg.top = top;
  if (auto mn = p.minimum()) alg.bottom = *mn;
  OpTable t(n);
  for (int x = 0; x < n; ++x) {
    t.set(top, x, x);
    t.set(x, top, x);
  }

  std::vector<PocrimTables> out;
  std::vector<int> odo(cells.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < cells.size(); ++i) t.set(cells[i].first, cells[i].second, odo[i]);
    alg.mul = t;
    alg.imp.reset();
    if (verify_pocrim(alg).ok()) {
      auto imp = derive_implication(p, t);
      out.push_back({t, *imp});
    }
    std::size_t i = cells.size();
    bool done = true;
    while (i-- > 0) {
      if (++odo[i] < n) {
        done = false;
        break;
      }
      odo[i] = 0;
    }
    if (done || cells.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> reference_crisp_concepts(
    int n_objects, int n_attributes, const std::vector<std::uint8_t>& incidence) {
  auto has = [&](int g, int m) {
    return incidence[static_cast<std::size_t>(g) * n_attributes + m] != 0;
  };
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (unsigned bits = 0; bits < (1u << n_objects); ++bits) {
    std::vector<int> ext;
    for (int g = 0; g < n_objects; ++g)
      if (bits >> g & 1u) ext.push_back(g);
    std::vector<int> intent;
    for (int m = 0; m < n_attributes; ++m) {
      bool all = true;
      for (int g : ext)
        if (!has(g, m)) { all = false; break; }
      if (all) intent.push_back(m);
    }
    std::vector<int> ext2;
    for (int g = 0; g < n_objects; ++g) {
      bool all = true;
      for (int m : intent)
        if (!has(g, m)) { all = false; break; }
      if (all) ext2.push_back(g);
    }
    if (ext2 == ext) out.emplace_back(ext, intent);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace multilat
